// Command-line front end over the C API.
//
// Exit codes: 0 pass or success, 1 check failed (or a builder's output
// failed re-verification), 2 usage, parse or shape error, 3 an input failed
// its gate check.

#include "hompois/hompois.h"

#include <CLI11.hpp>

#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Failure {
  int code;
};

struct Global {
  std::string params;
  bool json = false;
  std::size_t max_witnesses = 0;
  std::string output;
  std::string command;
  std::vector<std::string> inputs;
};

Global g;

template <class T, void (*F)(T*)>
struct Deleter {
  void operator()(T* p) const { F(p); }
};
using Algebra = std::unique_ptr<hp_algebra, Deleter<hp_algebra, hp_algebra_free>>;
using Module = std::unique_ptr<hp_module, Deleter<hp_module, hp_module_free>>;
using MatrixH = std::unique_ptr<hp_matrix, Deleter<hp_matrix, hp_matrix_free>>;
using MatrixList = std::unique_ptr<hp_matrix_list, Deleter<hp_matrix_list, hp_matrix_list_free>>;
using CoalgebraH = std::unique_ptr<hp_coalgebra, Deleter<hp_coalgebra, hp_coalgebra_free>>;
using Report = std::unique_ptr<hp_report, Deleter<hp_report, hp_report_free>>;

std::string take(char* s) {
  std::string out(s ? s : "");
  hp_string_free(s);
  return out;
}

const char* params_or_null() { return g.params.empty() ? nullptr : g.params.c_str(); }

int exit_code(hp_status s) {
  switch (s) {
    case HP_OK: return 0;
    case HP_ERR_PRECONDITION: return 3;
    case HP_ERR_POSTCONDITION: return 1;
    default: return 2;
  }
}

// Reports the error (with its attached check, if any) on stderr and aborts
// the command.
void check(hp_status s) {
  if (s == HP_OK) return;
  std::cerr << "error: " << hp_last_error() << "\n";
  if (Report r{hp_last_error_report()}) {
    char* text = nullptr;
    if (hp_report_render(r.get(), 0, nullptr, nullptr, 0, &text) == HP_OK) std::cerr << take(text);
  }
  throw Failure{exit_code(s)};
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read '" << path << "'\n";
    throw Failure{2};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.output, std::ios::binary);
  if (!out || !(out << text)) {
    std::cerr << "error: cannot write '" << g.output << "'\n";
    throw Failure{2};
  }
}

constexpr const char* kCatalogPrefix = "catalog:";

Algebra load_algebra(const std::string& spec) {
  g.inputs.push_back(spec);
  hp_algebra* a = nullptr;
  if (spec.rfind(kCatalogPrefix, 0) == 0) {
    check(hp_catalog_algebra(spec.substr(std::strlen(kCatalogPrefix)).c_str(), params_or_null(), &a));
  } else {
    check(hp_algebra_parse(read_text(spec).c_str(), params_or_null(), &a));
  }
  return Algebra(a);
}

// "regular" asks for the regular structure of the algebra.
Module load_module(const std::string& spec, const hp_algebra* a, const std::string& cls) {
  g.inputs.push_back(spec);
  hp_module* m = nullptr;
  if (spec == "regular") {
    check(hp_regular_module(a, cls.c_str(), &m));
  } else {
    check(hp_module_parse(read_text(spec).c_str(), params_or_null(), &m));
  }
  return Module(m);
}

// "map:NAME" takes a named map stored in the algebra.
MatrixH load_matrix(const std::string& spec, const hp_algebra* a) {
  g.inputs.push_back(spec);
  hp_matrix* m = nullptr;
  if (spec.rfind("map:", 0) == 0) {
    check(hp_algebra_map(a, spec.substr(4).c_str(), &m));
  } else {
    check(hp_matrix_parse(read_text(spec).c_str(), params_or_null(), &m));
  }
  return MatrixH(m);
}

int finish_report(hp_status s, hp_report*& raw) {
  check(s);
  Report r(raw);
  std::vector<const char*> in;
  for (const auto& x : g.inputs) in.push_back(x.c_str());
  char* text = nullptr;
  check(hp_report_render(r.get(), g.json ? 1 : 0, g.command.c_str(), in.data(), in.size(), &text));
  emit(take(text));
  return hp_report_passed(r.get()) ? 0 : 1;
}

int finish_algebra(hp_status s, hp_algebra*& raw) {
  check(s);
  Algebra a(raw);
  char* text = nullptr;
  check(hp_algebra_serialize(a.get(), &text));
  emit(take(text));
  return 0;
}

struct Args {
  std::string cls;
  std::string alg, alg2, mod, mod2, matrix, matrix2, coalg;
  std::string op = "dot";
  std::string commuting;
  std::string alpha_h, yau, compose;
  unsigned derived = 0;
  int type = 1;
  bool consequences = false, intersection = false, symmetry = false;
  bool compatible = false, morphism = false;
  std::string multiplicative, derivation, morphism_to, ops = "dot,bracket";
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks and constructions for Hom-Poisson type algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--params", g.params, "parameter binding k=v,k2=v2");
  app.add_flag("--json", g.json, "structured report output");
  app.add_option("--max-witnesses", g.max_witnesses, "witness cap per report");
  app.add_option("-o", g.output, "write the result to FILE");

  Args x;
  std::function<int()> run;
  auto sub = [&](CLI::App* parent, const char* name, const char* help, std::function<int()> fn) {
    CLI::App* c = parent->add_subcommand(name, help);
    c->callback([&run, fn] { run = fn; });
    return c;
  };
  auto cls_opt = [&](CLI::App* c, bool required = true) {
    auto* o = c->add_option("--class", x.cls, "algebra class");
    if (required) o->required();
  };

  auto* c_check = sub(&app, "check", "check an algebra", [&] {
    Algebra a = load_algebra(x.alg);
    hp_report* r = nullptr;
    if (x.consequences) return finish_report(hp_check_consequences(a.get(), &r), r);
    if (x.intersection) return finish_report(hp_check_poisson_intersection(a.get(), &r), r);
    if (!x.multiplicative.empty()) return finish_report(hp_check_multiplicative(a.get(), x.multiplicative.c_str(), &r), r);
    if (!x.derivation.empty()) {
      MatrixH d = load_matrix(x.derivation, a.get());
      return finish_report(hp_check_derivation(a.get(), x.op.c_str(), d.get(), &r), r);
    }
    if (!x.morphism_to.empty()) {
      Algebra b = load_algebra(x.morphism_to);
      MatrixH f = load_matrix(x.matrix, a.get());
      return finish_report(hp_check_morphism(a.get(), b.get(), f.get(), x.ops.c_str(), &r), r);
    }
    if (x.cls.empty()) {
      std::cerr << "error: check needs --class or one of the auxiliary checks\n";
      throw Failure{2};
    }
    return finish_report(hp_check_class(a.get(), x.cls.c_str(), &r), r);
  });
  cls_opt(c_check, false);
  c_check->add_option("algebra", x.alg)->required();
  c_check->add_flag("--consequences", x.consequences, "consequences of the transposed identities");
  c_check->add_flag("--intersection", x.intersection, "Hom-Poisson and transposed intersection");
  c_check->add_option("--multiplicative", x.multiplicative, "check that alpha is multiplicative for OP");
  c_check->add_option("--derivation", x.derivation, "check that MATRIX is an alpha-derivation of --op");
  c_check->add_option("--op", x.op, "operation name");
  c_check->add_option("--morphism-to", x.morphism_to, "check --map as a morphism into this algebra");
  c_check->add_option("--map", x.matrix, "matrix file or map:NAME");
  c_check->add_option("--ops", x.ops, "comma-separated operations preserved by the morphism");

  auto* c_twist = sub(&app, "twist", "twisting constructions", [&] {
    Algebra a = load_algebra(x.alg);
    const int modes = !x.alpha_h.empty() + !x.yau.empty() + !x.compose.empty() + (x.derived > 0);
    if (modes != 1) {
      std::cerr << "error: twist needs exactly one of --yau, --compose, --alpha-h, --derived\n";
      throw Failure{2};
    }
    hp_algebra* out = nullptr;
    if (!x.alpha_h.empty()) return finish_algebra(hp_alpha_h_twist(a.get(), x.alpha_h.c_str(), &out), out);
    if (x.cls.empty()) {
      std::cerr << "error: twist needs --class\n";
      throw Failure{2};
    }
    if (x.derived > 0)
      return finish_algebra(hp_derived_algebra(a.get(), x.cls.c_str(), x.derived, x.type, &out), out);
    const bool yau = !x.yau.empty();
    MatrixH gm = load_matrix(yau ? x.yau : x.compose, a.get());
    return finish_algebra(yau ? hp_yau_twist(a.get(), x.cls.c_str(), gm.get(), &out)
                              : hp_compose_twist(a.get(), x.cls.c_str(), gm.get(), &out),
                          out);
  });
  cls_opt(c_twist, false);
  c_twist->add_option("algebra", x.alg)->required();
  c_twist->add_option("--alpha-h", x.alpha_h, "twist by left multiplication with h (e.g. e1+e2)");
  c_twist->add_option("--yau", x.yau, "Yau twist along a morphism");
  c_twist->add_option("--compose", x.compose, "compose the twist with a morphism");
  c_twist->add_option("--derived", x.derived, "derived algebra of order N");
  c_twist->add_option("--type", x.type, "derived algebra type (1 or 2)");

  auto* c_tensor = sub(&app, "tensor", "tensor product", [&] {
    Algebra a = load_algebra(x.alg), b = load_algebra(x.alg2);
    hp_algebra* out = nullptr;
    return finish_algebra(hp_tensor_product(a.get(), b.get(), x.cls.c_str(), &out), out);
  });
  cls_opt(c_tensor);
  c_tensor->add_option("first", x.alg)->required();
  c_tensor->add_option("second", x.alg2)->required();

  auto* c_sub = sub(&app, "subadjacent", "sub-adjacent algebra of a pre-Lie type algebra", [&] {
    Algebra a = load_algebra(x.alg);
    hp_algebra* out = nullptr;
    return finish_algebra(hp_sub_adjacent(a.get(), x.cls.c_str(), &out), out);
  });
  cls_opt(c_sub);
  c_sub->add_option("algebra", x.alg)->required();

  auto* c_br = sub(&app, "bracketd", "bracket from one or two derivations", [&] {
    Algebra a = load_algebra(x.alg);
    MatrixH d1 = load_matrix(x.matrix, a.get());
    hp_algebra* out = nullptr;
    if (x.matrix2.empty()) return finish_algebra(hp_bracket_from_derivation(a.get(), d1.get(), &out), out);
    MatrixH d2 = load_matrix(x.matrix2, a.get());
    return finish_algebra(hp_bracket_from_two_derivations(a.get(), d1.get(), d2.get(), &out), out);
  });
  c_br->add_option("algebra", x.alg)->required();
  c_br->add_option("--derivation", x.matrix, "matrix file or map:NAME")->required();
  c_br->add_option("--second", x.matrix2, "second commuting derivation");

  auto* c_semi = sub(&app, "semidirect", "semidirect product with a representation", [&] {
    Algebra a = load_algebra(x.alg);
    Module m = load_module(x.mod, a.get(), x.cls);
    hp_algebra* out = nullptr;
    return finish_algebra(hp_semidirect_product(a.get(), m.get(), x.cls.c_str(), &out), out);
  });
  cls_opt(c_semi);
  c_semi->add_option("algebra", x.alg)->required();
  c_semi->add_option("module", x.mod, "module file or 'regular'")->required();

  auto* c_rep = sub(&app, "checkrep", "check a representation", [&] {
    Algebra a = load_algebra(x.alg);
    Module m = load_module(x.mod, a.get(), x.cls);
    hp_report* r = nullptr;
    return finish_report(hp_check_module(a.get(), m.get(), x.cls.c_str(), &r), r);
  });
  cls_opt(c_rep);
  c_rep->add_option("algebra", x.alg)->required();
  c_rep->add_option("module", x.mod, "module file or 'regular'")->required();

  std::string dual_out;
  auto* c_dual = sub(&app, "dualrep", "dual representation of a transposed representation", [&] {
    Algebra a = load_algebra(x.alg);
    Module m = load_module(x.mod, a.get(), "transposed-hom-poisson");
    hp_module* d = nullptr;
    hp_report* r = nullptr;
    check(hp_dual_representation(a.get(), m.get(), &d, &r));
    Module dual(d);
    if (!dual_out.empty()) {
      char* text = nullptr;
      check(hp_module_serialize(dual.get(), &text));
      std::ofstream out(dual_out, std::ios::binary);
      if (!(out << take(text))) {
        std::cerr << "error: cannot write '" << dual_out << "'\n";
        throw Failure{2};
      }
    }
    return finish_report(HP_OK, r);
  });
  c_dual->add_option("algebra", x.alg)->required();
  c_dual->add_option("module", x.mod, "module file or 'regular'")->required();
  c_dual->add_option("--dual-out", dual_out, "write the dual module to FILE");

  auto* c_matched = app.add_subcommand("matched", "matched pairs");
  c_matched->require_subcommand(1);
  auto matched_inputs = [&](CLI::App* c) {
    cls_opt(c);
    c->add_option("a", x.alg)->required();
    c->add_option("b", x.alg2)->required();
    c->add_option("a_on_b", x.mod, "module: A acting on B")->required();
    c->add_option("b_on_a", x.mod2, "module: B acting on A")->required();
  };
  auto load_pair = [&](Algebra& a, Algebra& b, Module& ab, Module& ba) {
    a = load_algebra(x.alg);
    b = load_algebra(x.alg2);
    ab = load_module(x.mod, a.get(), x.cls);
    ba = load_module(x.mod2, b.get(), x.cls);
  };
  auto* c_mcheck = sub(c_matched, "check", "check a matched pair", [&] {
    Algebra a, b;
    Module ab, ba;
    load_pair(a, b, ab, ba);
    hp_report* r = nullptr;
    if (x.symmetry)
      return finish_report(hp_check_double_symmetry(a.get(), b.get(), ab.get(), ba.get(), x.cls.c_str(), &r), r);
    return finish_report(hp_check_matched_pair(a.get(), b.get(), ab.get(), ba.get(), x.cls.c_str(), &r), r);
  });
  matched_inputs(c_mcheck);
  c_mcheck->add_flag("--symmetry", x.symmetry, "check the block-swap isomorphism of the doubles");
  auto* c_mdouble = sub(c_matched, "double", "build the double", [&] {
    Algebra a, b;
    Module ab, ba;
    load_pair(a, b, ab, ba);
    hp_algebra* out = nullptr;
    return finish_algebra(hp_build_double(a.get(), b.get(), ab.get(), ba.get(), x.cls.c_str(), &out), out);
  });
  matched_inputs(c_mdouble);

  auto* c_manin = sub(&app, "manin", "Manin triple check of A + A*", [&] {
    Algebra a = load_algebra(x.alg), s = load_algebra(x.alg2);
    hp_report* r = nullptr;
    return finish_report(hp_check_manin_triple(a.get(), s.get(), &r), r);
  });
  c_manin->add_option("algebra", x.alg)->required();
  c_manin->add_option("dual", x.alg2)->required();

  auto* c_bi = sub(&app, "bialgebra", "bialgebra conditions", [&] {
    Algebra a = load_algebra(x.alg);
    g.inputs.push_back(x.coalg);
    hp_coalgebra* c = nullptr;
    check(hp_coalgebra_parse(read_text(x.coalg).c_str(), params_or_null(), &c));
    CoalgebraH co(c);
    hp_report* r = nullptr;
    return finish_report(hp_check_bialgebra(a.get(), co.get(), &r), r);
  });
  c_bi->add_option("algebra", x.alg)->required();
  c_bi->add_option("coalgebra", x.coalg)->required();

  auto* c_eq = sub(&app, "equivalence", "bialgebra, matched pair and Manin triple verdicts", [&] {
    Algebra a = load_algebra(x.alg), s = load_algebra(x.alg2);
    hp_report* r = nullptr;
    return finish_report(hp_equivalence_report(a.get(), s.get(), &r), r);
  });
  c_eq->add_option("algebra", x.alg)->required();
  c_eq->add_option("dual", x.alg2)->required();

  auto* c_oop = app.add_subcommand("oop", "O-operators");
  c_oop->require_subcommand(1);
  auto oop_inputs = [&](CLI::App* c, bool cls_required) {
    cls_opt(c, cls_required);
    c->add_option("algebra", x.alg)->required();
    c->add_option("module", x.mod, "module file or 'regular'")->required();
    c->add_option("operator", x.matrix, "matrix file or map:NAME")->required();
  };
  auto* c_ocheck = sub(c_oop, "check", "check an O-operator", [&] {
    Algebra a = load_algebra(x.alg);
    Module m = load_module(x.mod, a.get(), x.cls);
    MatrixH t = load_matrix(x.matrix, a.get());
    hp_report* r = nullptr;
    if (x.morphism)
      return finish_report(hp_o_operator_is_morphism(a.get(), m.get(), t.get(), x.cls.c_str(), &r), r);
    return finish_report(hp_check_o_operator(a.get(), m.get(), t.get(), x.cls.c_str(), &r), r);
  });
  oop_inputs(c_ocheck, true);
  c_ocheck->add_flag("--morphism", x.morphism, "check T as a morphism from the induced structure");
  auto* c_oinduce = sub(c_oop, "induce", "structure induced by an O-operator", [&] {
    if (x.cls.empty()) x.cls = "transposed-hom-poisson";
    Algebra a = load_algebra(x.alg);
    Module m = load_module(x.mod, a.get(), x.cls);
    MatrixH t = load_matrix(x.matrix, a.get());
    hp_algebra* out = nullptr;
    if (x.compatible) return finish_algebra(hp_compatible_pre_lie(a.get(), m.get(), t.get(), &out), out);
    return finish_algebra(hp_induced_products(a.get(), m.get(), t.get(), x.cls.c_str(), &out), out);
  });
  oop_inputs(c_oinduce, false);
  c_oinduce->add_flag("--compatible", x.compatible, "compatible structure on A from an invertible operator");

  auto* c_rb = app.add_subcommand("rb", "Rota-Baxter operators");
  c_rb->require_subcommand(1);
  auto* c_rcheck = sub(c_rb, "check", "check a Rota-Baxter operator", [&] {
    Algebra a = load_algebra(x.alg);
    MatrixH rm = load_matrix(x.matrix, a.get());
    hp_report* r = nullptr;
    return finish_report(hp_check_rota_baxter(a.get(), rm.get(), x.cls.c_str(), &r), r);
  });
  cls_opt(c_rcheck);
  c_rcheck->add_option("algebra", x.alg)->required();
  c_rcheck->add_option("operator", x.matrix, "matrix file or map:NAME")->required();
  auto* c_rinduce = sub(c_rb, "induce", "structure induced by a Rota-Baxter operator", [&] {
    Algebra a = load_algebra(x.alg);
    MatrixH rm = load_matrix(x.matrix, a.get());
    hp_algebra* out = nullptr;
    return finish_algebra(hp_rota_baxter_induced(a.get(), rm.get(), &out), out);
  });
  c_rinduce->add_option("algebra", x.alg)->required();
  c_rinduce->add_option("operator", x.matrix, "matrix file or map:NAME")->required();

  auto* c_der = sub(&app, "derivations", "basis of the derivations of an operation", [&] {
    Algebra a = load_algebra(x.alg);
    hp_matrix_list* l = nullptr;
    check(hp_derivation_space(a.get(), x.op.c_str(), x.commuting.empty() ? nullptr : x.commuting.c_str(), &l));
    MatrixList list(l);
    char* text = nullptr;
    check(hp_matrix_list_serialize(list.get(), "D", &text));
    emit(take(text));
    return 0;
  });
  c_der->add_option("algebra", x.alg)->required();
  c_der->add_option("--op", x.op, "operation name (default dot)");
  c_der->add_option("--commuting", x.commuting, "also commute with this map (e.g. alpha)");

  auto* c_cat = app.add_subcommand("catalog", "built-in example algebras");
  c_cat->require_subcommand(1);
  sub(c_cat, "list", "list the entries", [&] {
    char* text = nullptr;
    check(hp_catalog_list(&text));
    emit(take(text));
    return 0;
  });
  std::string cat_id;
  auto* c_show = sub(c_cat, "show", "print an entry as a document", [&] {
    char* text = nullptr;
    check(hp_catalog_show(cat_id.c_str(), params_or_null(), &text));
    emit(take(text));
    return 0;
  });
  c_show->add_option("id", cat_id)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  for (CLI::App* s = &app; !s->get_subcommands().empty();) {
    s = s->get_subcommands().front();
    g.command += (g.command.empty() ? "" : " ") + s->get_name();
  }
  hp_set_max_witnesses(g.max_witnesses);
  try {
    return run ? run() : 2;
  } catch (const Failure& f) {
    return f.code;
  }
}
