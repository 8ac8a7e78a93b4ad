#include "hompois/hompois.h"

#include "catalog/catalog.hpp"
#include "constructions/constructions.hpp"
#include "core/error.hpp"
#include "duality/duality.hpp"
#include "operators/operators.hpp"

#include <json.hpp>

#include <cstring>
#include <optional>
#include <sstream>

using namespace hompois;

struct hp_algebra {
  AlgebraPresentation v;
};
struct hp_module {
  ModulePresentation v;
};
struct hp_matrix {
  Matrix v;
};
struct hp_matrix_list {
  std::vector<hp_matrix> v;
};
struct hp_coalgebra {
  Coalgebra v;
};
struct hp_report {
  CheckReport v;
};

namespace {

thread_local std::string g_error;
thread_local std::optional<CheckReport> g_report;
thread_local std::size_t g_max_witnesses = kDefaultMaxWitnesses;

CheckOptions options() { return CheckOptions{g_max_witnesses}; }

hp_status status_of(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return HP_ERR_PARSE;
    case ErrorKind::Dimension: return HP_ERR_DIMENSION;
    case ErrorKind::Missing: return HP_ERR_MISSING;
    case ErrorKind::Unbound: return HP_ERR_UNBOUND;
    case ErrorKind::Argument: return HP_ERR_ARGUMENT;
    case ErrorKind::Precondition: return HP_ERR_PRECONDITION;
    case ErrorKind::Postcondition: return HP_ERR_POSTCONDITION;
  }
  return HP_ERR_INTERNAL;
}

template <class F>
hp_status guard(F&& f) {
  g_error.clear();
  g_report.reset();
  try {
    f();
    return HP_OK;
  } catch (const Error& e) {
    g_error = e.what();
    if (e.report()) g_report = *e.report();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    g_error = e.what();
    return HP_ERR_INTERNAL;
  }
}

void null_check(const void* p, const char* what) {
  if (p == nullptr) throw Error(ErrorKind::Argument, std::string(what) + " is null");
}

char* dup(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ParameterBinding binding(const char* params) { return parse_binding(params ? params : ""); }

AlgebraClass cls_of(const char* name) {
  null_check(name, "class name");
  return parse_class(name);
}

template <class T>
void put(T** out, T* value) {
  null_check(out, "output pointer");
  *out = value;
}

void put_report(hp_report** out, CheckReport r) { put(out, new hp_report{std::move(r)}); }
void put_algebra(hp_algebra** out, AlgebraPresentation a) { put(out, new hp_algebra{std::move(a)}); }
void put_module(hp_module** out, ModulePresentation m) { put(out, new hp_module{std::move(m)}); }

MatchedPairData pair_of(const hp_algebra* a, const hp_algebra* b, const hp_module* ab, const hp_module* ba) {
  null_check(a, "algebra A");
  null_check(b, "algebra B");
  null_check(ab, "action of A on B");
  null_check(ba, "action of B on A");
  return {a->v, b->v, ab->v, ba->v};
}

using ojson = nlohmann::ordered_json;

std::vector<std::size_t> one_based(const std::vector<std::size_t>& t) {
  std::vector<std::size_t> out(t);
  for (auto& x : out) ++x;
  return out;
}

ojson report_json(const CheckReport& r) {
  ojson j;
  j["name"] = r.name();
  j["verdict"] = r.passed() ? "pass" : "fail";
  j["evaluated"] = r.evaluated();
  j["failures"] = r.failures();
  ojson ws = ojson::array();
  for (const auto& w : r.witnesses()) {
    ojson res = ojson::array();
    for (const auto& c : w.residual) res.push_back(c.get_str());
    ws.push_back({{"identity", w.identity}, {"tuple", one_based(w.tuple)}, {"residual", res}});
  }
  j["witnesses"] = ws;
  ojson flags = ojson::object();
  for (const auto& [k, v] : r.flags()) flags[k] = v;
  j["flags"] = flags;
  j["notes"] = r.notes();
  ojson subs = ojson::array();
  for (const auto& s : r.sub_reports()) subs.push_back(report_json(s));
  j["sub_reports"] = subs;
  return j;
}

std::string tuple_text(const std::vector<std::size_t>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i] + 1);
  return s + ")";
}

std::string vec_text(const Vec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s + "]";
}

// Witnesses are listed once at the top; sub-reports show their summaries.
void report_text(std::ostream& os, const CheckReport& r, int depth, bool witnesses) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  os << pad << (r.name().empty() ? "report" : r.name()) << ": " << (r.passed() ? "PASS" : "FAIL") << " (evaluated "
     << r.evaluated() << ", failures " << r.failures() << ")\n";
  for (const auto& [k, v] : r.flags()) os << pad << "  flag " << k << " = " << (v ? "true" : "false") << "\n";
  for (const auto& n : r.notes()) os << pad << "  note: " << n << "\n";
  if (witnesses) {
    for (const auto& w : r.witnesses())
      os << pad << "  witness " << w.identity << " at " << tuple_text(w.tuple) << ": residual " << vec_text(w.residual)
         << "\n";
    if (r.failures() > r.witnesses().size())
      os << pad << "  (" << r.failures() - r.witnesses().size() << " further failures not listed)\n";
  }
  for (const auto& s : r.sub_reports()) report_text(os, s, depth + 1, false);
}

}  // namespace

extern "C" {

const char* hp_last_error(void) { return g_error.c_str(); }

hp_report* hp_last_error_report(void) { return g_report ? new hp_report{*g_report} : nullptr; }

void hp_set_max_witnesses(size_t n) { g_max_witnesses = n == 0 ? kDefaultMaxWitnesses : n; }

void hp_string_free(char* s) { delete[] s; }

hp_status hp_algebra_parse(const char* text, const char* params, hp_algebra** out) {
  return guard([&] {
    null_check(text, "text");
    put_algebra(out, instantiate(parse_algebra_document(text), binding(params)));
  });
}

hp_status hp_algebra_serialize(const hp_algebra* a, char** out) {
  return guard([&] {
    null_check(a, "algebra");
    put(out, dup(serialize(to_document(a->v))));
  });
}

size_t hp_algebra_dim(const hp_algebra* a) { return a ? a->v.dim : 0; }

hp_status hp_algebra_map(const hp_algebra* a, const char* name, hp_matrix** out) {
  return guard([&] {
    null_check(a, "algebra");
    null_check(name, "map name");
    put(out, new hp_matrix{a->v.map(name)});
  });
}

void hp_algebra_free(hp_algebra* a) { delete a; }

hp_status hp_module_parse(const char* text, const char* params, hp_module** out) {
  return guard([&] {
    null_check(text, "text");
    put_module(out, instantiate(parse_module_document(text), binding(params)));
  });
}

hp_status hp_module_serialize(const hp_module* m, char** out) {
  return guard([&] {
    null_check(m, "module");
    put(out, dup(serialize(to_document(m->v))));
  });
}

void hp_module_free(hp_module* m) { delete m; }

hp_status hp_matrix_parse(const char* text, const char* params, hp_matrix** out) {
  return guard([&] {
    null_check(text, "text");
    put(out, new hp_matrix{instantiate(parse_matrix_document(text), binding(params))});
  });
}

hp_status hp_matrix_serialize(const hp_matrix* m, char** out) {
  return guard([&] {
    null_check(m, "matrix");
    put(out, dup(serialize(to_document(m->v))));
  });
}

void hp_matrix_free(hp_matrix* m) { delete m; }

size_t hp_matrix_list_size(const hp_matrix_list* l) { return l ? l->v.size() : 0; }

const hp_matrix* hp_matrix_list_get(const hp_matrix_list* l, size_t i) {
  return l && i < l->v.size() ? &l->v[i] : nullptr;
}

hp_status hp_matrix_list_serialize(const hp_matrix_list* l, const char* key, char** out) {
  return guard([&] {
    null_check(l, "matrix list");
    ojson j;
    j["count"] = l->v.size();
    ojson items = ojson::array();
    for (const auto& m : l->v) {
      items.push_back(ojson::parse(serialize(to_document(m.v, key ? key : "map"))));
    }
    j["basis"] = items;
    put(out, dup(j.dump(2) + "\n"));
  });
}

void hp_matrix_list_free(hp_matrix_list* l) { delete l; }

hp_status hp_coalgebra_parse(const char* text, const char* params, hp_coalgebra** out) {
  return guard([&] {
    null_check(text, "text");
    put(out, new hp_coalgebra{instantiate(parse_coalgebra_document(text), binding(params))});
  });
}

hp_status hp_coalgebra_serialize(const hp_coalgebra* c, char** out) {
  return guard([&] {
    null_check(c, "coalgebra");
    put(out, dup(serialize(to_document(c->v))));
  });
}

void hp_coalgebra_free(hp_coalgebra* c) { delete c; }

int hp_report_passed(const hp_report* r) { return r && r->v.passed() ? 1 : 0; }

size_t hp_report_failures(const hp_report* r) { return r ? r->v.failures() : 0; }

hp_status hp_report_render(const hp_report* r, int as_json, const char* command, const char* const* inputs,
                           size_t n_inputs, char** out) {
  return guard([&] {
    null_check(r, "report");
    if (as_json) {
      ojson j;
      j["command"] = command ? command : "";
      ojson in = ojson::array();
      for (size_t i = 0; i < n_inputs; ++i) in.push_back(inputs[i] ? inputs[i] : "");
      j["inputs"] = in;
      const ojson body = report_json(r->v);
      for (auto it = body.begin(); it != body.end(); ++it) {
        if (it.key() != "name") j[it.key()] = it.value();
      }
      j["report"] = r->v.name();
      put(out, dup(j.dump(2) + "\n"));
    } else {
      std::ostringstream os;
      os << "verdict: " << (r->v.passed() ? "pass" : "fail") << "\n";
      report_text(os, r->v, 0, true);
      put(out, dup(os.str()));
    }
  });
}

void hp_report_free(hp_report* r) { delete r; }

hp_status hp_check_class(const hp_algebra* a, const char* cls, hp_report** out) {
  return guard([&] {
    null_check(a, "algebra");
    put_report(out, check_class(a->v, cls_of(cls), options()));
  });
}

hp_status hp_check_consequences(const hp_algebra* a, hp_report** out) {
  return guard([&] {
    null_check(a, "algebra");
    put_report(out, check_transposed_consequences(a->v, options()));
  });
}

hp_status hp_check_poisson_intersection(const hp_algebra* a, hp_report** out) {
  return guard([&] {
    null_check(a, "algebra");
    put_report(out, check_poisson_intersection(a->v, options()));
  });
}

hp_status hp_check_multiplicative(const hp_algebra* a, const char* op, hp_report** out) {
  return guard([&] {
    null_check(a, "algebra");
    null_check(op, "op name");
    put_report(out, check_multiplicative(a->v, op, ops::alpha, options()));
  });
}

hp_status hp_check_derivation(const hp_algebra* a, const char* op, const hp_matrix* d, hp_report** out) {
  return guard([&] {
    null_check(a, "algebra");
    null_check(op, "op name");
    null_check(d, "derivation");
    put_report(out, check_derivation(a->v, op, d->v, options()));
  });
}

hp_status hp_check_morphism(const hp_algebra* src, const hp_algebra* dst, const hp_matrix* f, const char* op_list,
                            hp_report** out) {
  return guard([&] {
    null_check(src, "source algebra");
    null_check(dst, "target algebra");
    null_check(f, "map");
    null_check(op_list, "op list");
    std::vector<std::string> names;
    std::stringstream ss(op_list);
    for (std::string item; std::getline(ss, item, ',');) {
      if (!item.empty()) names.push_back(item);
    }
    put_report(out, check_morphism(src->v, dst->v, f->v, names, options()));
  });
}

hp_status hp_yau_twist(const hp_algebra* a, const char* cls, const hp_matrix* g, hp_algebra** out) {
  return guard([&] {
    null_check(a, "algebra");
    null_check(g, "twist");
    put_algebra(out, yau_twist(a->v, cls_of(cls), g->v, options()));
  });
}

hp_status hp_compose_twist(const hp_algebra* a, const char* cls, const hp_matrix* g, hp_algebra** out) {
  return guard([&] {
    null_check(a, "algebra");
    null_check(g, "twist");
    put_algebra(out, compose_twist(a->v, cls_of(cls), g->v, options()));
  });
}

hp_status hp_derived_algebra(const hp_algebra* a, const char* cls, unsigned n, int type, hp_algebra** out) {
  return guard([&] {
    null_check(a, "algebra");
    put_algebra(out, derived_algebra(a->v, cls_of(cls), n, type, options()));
  });
}

hp_status hp_alpha_h_twist(const hp_algebra* a, const char* h, hp_algebra** out) {
  return guard([&] {
    null_check(a, "algebra");
    null_check(h, "element h");
    put_algebra(out, alpha_h_twist(a->v, parse_vector(h, a->v.basis), options()));
  });
}

hp_status hp_bracket_from_derivation(const hp_algebra* a, const hp_matrix* d, hp_algebra** out) {
  return guard([&] {
    null_check(a, "algebra");
    null_check(d, "derivation");
    put_algebra(out, bracket_from_derivation(a->v, d->v, options()));
  });
}

hp_status hp_bracket_from_two_derivations(const hp_algebra* a, const hp_matrix* d1, const hp_matrix* d2,
                                          hp_algebra** out) {
  return guard([&] {
    null_check(a, "algebra");
    null_check(d1, "first derivation");
    null_check(d2, "second derivation");
    put_algebra(out, bracket_from_two_derivations(a->v, d1->v, d2->v, options()));
  });
}

hp_status hp_tensor_product(const hp_algebra* a1, const hp_algebra* a2, const char* cls, hp_algebra** out) {
  return guard([&] {
    null_check(a1, "first algebra");
    null_check(a2, "second algebra");
    put_algebra(out, tensor_product(a1->v, a2->v, cls_of(cls), options()));
  });
}

hp_status hp_sub_adjacent(const hp_algebra* a, const char* cls, hp_algebra** out) {
  return guard([&] {
    null_check(a, "algebra");
    put_algebra(out, sub_adjacent(a->v, cls_of(cls), options()));
  });
}

hp_status hp_twisting_report(const hp_algebra* a, const hp_matrix* g, hp_report** out) {
  return guard([&] {
    null_check(a, "algebra");
    null_check(g, "twist");
    put_report(out, twisting_report(a->v, g->v, options()));
  });
}

hp_status hp_check_module(const hp_algebra* a, const hp_module* m, const char* cls, hp_report** out) {
  return guard([&] {
    null_check(a, "algebra");
    null_check(m, "module");
    put_report(out, check_module(a->v, m->v, cls_of(cls), options()));
  });
}

hp_status hp_regular_module(const hp_algebra* a, const char* cls, hp_module** out) {
  return guard([&] {
    null_check(a, "algebra");
    put_module(out, regular_module(a->v, cls_of(cls)));
  });
}

hp_status hp_semidirect_product(const hp_algebra* a, const hp_module* m, const char* cls, hp_algebra** out) {
  return guard([&] {
    null_check(a, "algebra");
    null_check(m, "module");
    put_algebra(out, semidirect_product(a->v, m->v, cls_of(cls), options()));
  });
}

hp_status hp_dual_representation(const hp_algebra* a, const hp_module* m, hp_module** dual, hp_report** report) {
  return guard([&] {
    null_check(a, "algebra");
    null_check(m, "module");
    null_check(dual, "output pointer");
    null_check(report, "output pointer");
    DualRepresentation d = dual_representation(a->v, m->v, options());
    *dual = new hp_module{std::move(d.dual)};
    *report = new hp_report{std::move(d.report)};
  });
}

hp_status hp_bimodule_from_morphism(const hp_algebra* src, const hp_algebra* dst, const hp_matrix* f,
                                    hp_module** out) {
  return guard([&] {
    null_check(src, "source algebra");
    null_check(dst, "target algebra");
    null_check(f, "morphism");
    put_module(out, bimodule_from_morphism(src->v, dst->v, f->v, options()));
  });
}

hp_status hp_twisted_bimodule(const hp_algebra* a, const hp_module* m, const hp_matrix* g_alg, const hp_matrix* g_mod,
                              hp_algebra** alg_out, hp_module** mod_out) {
  return guard([&] {
    null_check(a, "algebra");
    null_check(m, "module");
    null_check(g_alg, "algebra twist");
    null_check(g_mod, "module twist");
    null_check(alg_out, "output pointer");
    null_check(mod_out, "output pointer");
    TwistedBimodule t = twisted_bimodule(a->v, m->v, g_alg->v, g_mod->v, options());
    *alg_out = new hp_algebra{std::move(t.algebra)};
    *mod_out = new hp_module{std::move(t.module)};
  });
}

hp_status hp_rep_commutator(const hp_algebra* a, const hp_module* m, const char* cls, hp_module** out) {
  return guard([&] {
    null_check(a, "algebra");
    null_check(m, "module");
    put_module(out, rep_commutator(a->v, m->v, cls_of(cls), options()));
  });
}

hp_status hp_check_matched_pair(const hp_algebra* a, const hp_algebra* b, const hp_module* ab, const hp_module* ba,
                                const char* cls, hp_report** out) {
  return guard([&] { put_report(out, check_matched_pair(pair_of(a, b, ab, ba), cls_of(cls), options())); });
}

hp_status hp_build_double(const hp_algebra* a, const hp_algebra* b, const hp_module* ab, const hp_module* ba,
                          const char* cls, hp_algebra** out) {
  return guard([&] { put_algebra(out, build_double(pair_of(a, b, ab, ba), cls_of(cls), options())); });
}

hp_status hp_check_double_symmetry(const hp_algebra* a, const hp_algebra* b, const hp_module* ab, const hp_module* ba,
                                   const char* cls, hp_report** out) {
  return guard([&] { put_report(out, check_double_symmetry(pair_of(a, b, ab, ba), cls_of(cls), options())); });
}

hp_status hp_coadjoint_actions(const hp_algebra* a, hp_module** out) {
  return guard([&] {
    null_check(a, "algebra");
    put_module(out, coadjoint_actions(a->v));
  });
}

hp_status hp_check_invariant_form(const hp_algebra* a, const hp_matrix* form, hp_report** out) {
  return guard([&] {
    null_check(a, "algebra");
    null_check(form, "form");
    put_report(out, check_invariant_form(a->v, form->v, options()));
  });
}

hp_status hp_build_double_dual(const hp_algebra* a, const hp_algebra* a_star, hp_algebra** out) {
  return guard([&] {
    null_check(a, "algebra");
    null_check(a_star, "dual algebra");
    put_algebra(out, build_double_dual(a->v, a_star->v, options()));
  });
}

hp_status hp_check_manin_triple(const hp_algebra* a, const hp_algebra* a_star, hp_report** out) {
  return guard([&] {
    null_check(a, "algebra");
    null_check(a_star, "dual algebra");
    put_report(out, check_manin_triple(a->v, a_star->v, options()));
  });
}

hp_status hp_check_bialgebra(const hp_algebra* a, const hp_coalgebra* c, hp_report** out) {
  return guard([&] {
    null_check(a, "algebra");
    null_check(c, "coalgebra");
    put_report(out, check_bialgebra_conditions(a->v, c->v.coop("delta"), c->v.coop("Delta"), options()));
  });
}

hp_status hp_equivalence_report(const hp_algebra* a, const hp_algebra* a_star, hp_report** out) {
  return guard([&] {
    null_check(a, "algebra");
    null_check(a_star, "dual algebra");
    put_report(out, equivalence_report(a->v, a_star->v, options()));
  });
}

hp_status hp_check_o_operator(const hp_algebra* a, const hp_module* m, const hp_matrix* t, const char* cls,
                              hp_report** out) {
  return guard([&] {
    null_check(a, "algebra");
    null_check(m, "module");
    null_check(t, "operator");
    put_report(out, check_o_operator(a->v, m->v, t->v, cls_of(cls), options()));
  });
}

hp_status hp_check_rota_baxter(const hp_algebra* a, const hp_matrix* r, const char* cls, hp_report** out) {
  return guard([&] {
    null_check(a, "algebra");
    null_check(r, "operator");
    put_report(out, check_rota_baxter(a->v, r->v, cls_of(cls), options()));
  });
}

hp_status hp_induced_products(const hp_algebra* a, const hp_module* m, const hp_matrix* t, const char* cls,
                              hp_algebra** out) {
  return guard([&] {
    null_check(a, "algebra");
    null_check(m, "module");
    null_check(t, "operator");
    put_algebra(out, induced_products(a->v, m->v, t->v, cls_of(cls), options()));
  });
}

hp_status hp_o_operator_is_morphism(const hp_algebra* a, const hp_module* m, const hp_matrix* t, const char* cls,
                                    hp_report** out) {
  return guard([&] {
    null_check(a, "algebra");
    null_check(m, "module");
    null_check(t, "operator");
    put_report(out, o_operator_is_morphism(a->v, m->v, t->v, cls_of(cls), options()));
  });
}

hp_status hp_compatible_pre_lie(const hp_algebra* a, const hp_module* m, const hp_matrix* t, hp_algebra** out) {
  return guard([&] {
    null_check(a, "algebra");
    null_check(m, "module");
    null_check(t, "operator");
    put_algebra(out, compatible_pre_lie_from_invertible(a->v, m->v, t->v, options()));
  });
}

hp_status hp_rota_baxter_induced(const hp_algebra* a, const hp_matrix* r, hp_algebra** out) {
  return guard([&] {
    null_check(a, "algebra");
    null_check(r, "operator");
    put_algebra(out, rota_baxter_induced(a->v, r->v, options()));
  });
}

hp_status hp_derivation_space(const hp_algebra* a, const char* op, const char* commuting_with, hp_matrix_list** out) {
  return guard([&] {
    null_check(a, "algebra");
    null_check(op, "op name");
    std::optional<std::string> with;
    if (commuting_with) with = commuting_with;
    auto list = std::make_unique<hp_matrix_list>();
    for (auto& d : derivation_space(a->v, op, with, options())) list->v.push_back({std::move(d)});
    put(out, list.release());
  });
}

size_t hp_catalog_size(void) { return catalog_list().size(); }

const char* hp_catalog_id(size_t i) {
  const auto& l = catalog_list();
  return i < l.size() ? l[i].id.c_str() : nullptr;
}

hp_status hp_catalog_list(char** out) {
  return guard([&] {
    std::string s;
    for (const auto& e : catalog_list()) {
      s += e.id + "\t" + to_string(e.cls) + "\t" + e.description + "\n";
    }
    put(out, dup(s));
  });
}

hp_status hp_catalog_show(const char* id, const char* params, char** out) {
  return guard([&] {
    null_check(id, "catalog id");
    const CatalogEntry& e = catalog_get(id);
    put(out, dup(params ? serialize(to_document(instantiate(e.document, binding(params))))
                        : serialize(e.document)));
  });
}

hp_status hp_catalog_algebra(const char* id, const char* params, hp_algebra** out) {
  return guard([&] {
    null_check(id, "catalog id");
    put_algebra(out, catalog_instantiate(id, binding(params)));
  });
}

hp_status hp_catalog_class(const char* id, const char** cls) {
  return guard([&] {
    null_check(id, "catalog id");
    null_check(cls, "output pointer");
    *cls = to_string(catalog_get(id).cls);
  });
}

}  // extern "C"
