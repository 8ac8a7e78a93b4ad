#include "axioms/axioms.hpp"

#include "core/error.hpp"
#include "core/sweep.hpp"

namespace hompois {

namespace {

struct Basis {
  std::vector<Vec> e;
  std::vector<Vec> ae;  // α(e_i)

  Basis(std::size_t n, const Matrix& alpha) {
    for (std::size_t i = 0; i < n; ++i) {
      e.push_back(basis_vec(n, i));
      ae.push_back(alpha.column(i));
    }
  }
};

void check_alpha(const AlgebraPresentation& a) {
  a.validate();
  a.alpha();
}

// Families shared by the commutative Hom-associative checker and its
// untwisted variant.
void assoc_families(CheckReport& rep, const BilinearMap& mu, const Matrix& alpha, bool commutativity) {
  const std::size_t n = mu.dim();
  Basis b(n, alpha);
  if (commutativity) {
    sweep(rep, "commutativity", {n, n}, [&](const auto& t) { return mu.product(t[0], t[1]) - mu.product(t[1], t[0]); });
  }
  sweep(rep, "hom_associativity", {n, n, n}, [&](const auto& t) {
    return mu.apply(mu.product(t[0], t[1]), b.ae[t[2]]) - mu.apply(b.ae[t[0]], mu.product(t[1], t[2]));
  });
}

void lie_families(CheckReport& rep, const BilinearMap& br, const Matrix& alpha) {
  const std::size_t n = br.dim();
  Basis b(n, alpha);
  sweep(rep, "skew_symmetry", {n, n}, [&](const auto& t) { return br.product(t[0], t[1]) + br.product(t[1], t[0]); });
  sweep(rep, "hom_jacobi", {n, n, n}, [&](const auto& t) {
    return br.apply(b.ae[t[0]], br.product(t[1], t[2])) + br.apply(b.ae[t[1]], br.product(t[2], t[0])) +
           br.apply(b.ae[t[2]], br.product(t[0], t[1]));
  });
}

void leibniz_family(CheckReport& rep, const BilinearMap& mu, const Matrix& d) {
  const std::size_t n = mu.dim();
  sweep(rep, "derivation_leibniz", {n, n}, [&](const auto& t) {
    const auto x = t[0], y = t[1];
    return d.apply(mu.product(x, y)) - mu.apply(d.column(x), basis_vec(n, y)) - mu.apply(basis_vec(n, x), d.column(y));
  });
}

}  // namespace

const char* to_string(AlgebraClass c) {
  switch (c) {
    case AlgebraClass::CommHomAssociative: return "comm-hom-assoc";
    case AlgebraClass::HomLie: return "hom-lie";
    case AlgebraClass::HomPoisson: return "hom-poisson";
    case AlgebraClass::TransposedHomPoisson: return "transposed-hom-poisson";
    case AlgebraClass::HomPreLie: return "hom-pre-lie";
    case AlgebraClass::HomPreLiePoisson: return "hom-pre-lie-poisson";
  }
  return "?";
}

AlgebraClass parse_class(const std::string& name) {
  for (auto c : {AlgebraClass::CommHomAssociative, AlgebraClass::HomLie, AlgebraClass::HomPoisson,
                 AlgebraClass::TransposedHomPoisson, AlgebraClass::HomPreLie, AlgebraClass::HomPreLiePoisson}) {
    if (name == to_string(c)) return c;
  }
  if (name == "transposed-poisson") return AlgebraClass::TransposedHomPoisson;
  throw Error(ErrorKind::Argument, "unknown algebra class '" + name + "'");
}

std::vector<std::string> class_ops(AlgebraClass c) {
  switch (c) {
    case AlgebraClass::CommHomAssociative: return {ops::dot};
    case AlgebraClass::HomLie: return {ops::bracket};
    case AlgebraClass::HomPoisson:
    case AlgebraClass::TransposedHomPoisson: return {ops::dot, ops::bracket};
    case AlgebraClass::HomPreLie: return {ops::star};
    case AlgebraClass::HomPreLiePoisson: return {ops::dot, ops::star};
  }
  return {};
}

CheckReport check_comm_hom_assoc(const AlgebraPresentation& a, const CheckOptions& o) {
  check_alpha(a);
  CheckReport rep("comm_hom_assoc", o.max_witnesses);
  assoc_families(rep, a.op(ops::dot), a.alpha(), true);
  return rep;
}

CheckReport check_hom_lie(const AlgebraPresentation& a, const CheckOptions& o) {
  check_alpha(a);
  CheckReport rep("hom_lie", o.max_witnesses);
  lie_families(rep, a.op(ops::bracket), a.alpha());
  return rep;
}

CheckReport check_hom_poisson(const AlgebraPresentation& a, const CheckOptions& o) {
  check_alpha(a);
  const auto& mu = a.op(ops::dot);
  const auto& br = a.op(ops::bracket);
  const std::size_t n = a.dim;
  Basis b(n, a.alpha());
  CheckReport rep("hom_poisson", o.max_witnesses);
  rep.absorb(check_comm_hom_assoc(a, o));
  rep.absorb(check_hom_lie(a, o));
  sweep(rep, "hom_poisson_compatibility", {n, n, n}, [&](const auto& t) {
    return br.apply(b.ae[t[0]], mu.product(t[1], t[2])) - mu.apply(b.ae[t[1]], br.product(t[0], t[2])) -
           mu.apply(b.ae[t[2]], br.product(t[0], t[1]));
  });
  return rep;
}

CheckReport check_transposed_hom_poisson(const AlgebraPresentation& a, const CheckOptions& o) {
  check_alpha(a);
  const auto& mu = a.op(ops::dot);
  const auto& br = a.op(ops::bracket);
  const std::size_t n = a.dim;
  Basis b(n, a.alpha());
  CheckReport rep("transposed_hom_poisson", o.max_witnesses);
  rep.absorb(check_comm_hom_assoc(a, o));
  rep.absorb(check_hom_lie(a, o));
  sweep(rep, "transposed_hom_leibniz", {n, n, n}, [&](const auto& t) {
    const auto x = t[0], y = t[1], z = t[2];
    return Scalar(2) * mu.apply(b.ae[z], br.product(x, y)) - br.apply(mu.product(z, x), b.ae[y]) -
           br.apply(b.ae[x], mu.product(z, y));
  });
  return rep;
}

CheckReport check_hom_pre_lie(const AlgebraPresentation& a, const CheckOptions& o) {
  check_alpha(a);
  const auto& st = a.op(ops::star);
  const std::size_t n = a.dim;
  Basis b(n, a.alpha());
  CheckReport rep("hom_pre_lie", o.max_witnesses);
  sweep(rep, "hom_pre_lie", {n, n, n}, [&](const auto& t) {
    const auto x = t[0], y = t[1], z = t[2];
    return st.apply(st.product(x, y), b.ae[z]) - st.apply(b.ae[x], st.product(y, z)) -
           st.apply(st.product(y, x), b.ae[z]) + st.apply(b.ae[y], st.product(x, z));
  });
  return rep;
}

CheckReport check_hom_pre_lie_poisson(const AlgebraPresentation& a, const CheckOptions& o) {
  check_alpha(a);
  const auto& mu = a.op(ops::dot);
  const auto& st = a.op(ops::star);
  const std::size_t n = a.dim;
  Basis b(n, a.alpha());
  CheckReport rep("hom_pre_lie_poisson", o.max_witnesses);
  rep.absorb(check_comm_hom_assoc(a, o));
  rep.absorb(check_hom_pre_lie(a, o));
  sweep(rep, "pre_lie_poisson_1", {n, n, n}, [&](const auto& t) {
    return st.apply(mu.product(t[0], t[1]), b.ae[t[2]]) - mu.apply(b.ae[t[0]], st.product(t[1], t[2]));
  });
  sweep(rep, "pre_lie_poisson_2", {n, n, n}, [&](const auto& t) {
    const auto x = t[0], y = t[1], z = t[2];
    return mu.apply(st.product(x, y), b.ae[z]) - mu.apply(st.product(y, x), b.ae[z]) -
           st.apply(b.ae[x], mu.product(y, z)) + st.apply(b.ae[y], mu.product(x, z));
  });
  return rep;
}

CheckReport check_class(const AlgebraPresentation& a, AlgebraClass c, const CheckOptions& o) {
  switch (c) {
    case AlgebraClass::CommHomAssociative: return check_comm_hom_assoc(a, o);
    case AlgebraClass::HomLie: return check_hom_lie(a, o);
    case AlgebraClass::HomPoisson: return check_hom_poisson(a, o);
    case AlgebraClass::TransposedHomPoisson: return check_transposed_hom_poisson(a, o);
    case AlgebraClass::HomPreLie: return check_hom_pre_lie(a, o);
    case AlgebraClass::HomPreLiePoisson: return check_hom_pre_lie_poisson(a, o);
  }
  throw Error(ErrorKind::Argument, "unknown algebra class");
}

CheckReport check_multiplicative(const AlgebraPresentation& a, const std::string& op, const std::string& map,
                                 const CheckOptions& o) {
  a.validate();
  const auto& mu = a.op(op);
  const auto& f = a.map(map);
  const std::size_t n = a.dim;
  CheckReport rep("multiplicative", o.max_witnesses);
  sweep(rep, "multiplicativity", {n, n}, [&](const auto& t) {
    return f.apply(mu.product(t[0], t[1])) - mu.apply(f.column(t[0]), f.column(t[1]));
  });
  return rep;
}

CheckReport check_derivation(const AlgebraPresentation& a, const std::string& op, const Matrix& d,
                             const CheckOptions& o) {
  check_alpha(a);
  const std::size_t n = a.dim;
  if (d.rows() != n || d.cols() != n) throw Error(ErrorKind::Dimension, "derivation must be " + std::to_string(n) + "x" + std::to_string(n));
  const auto& mu = a.op(op);
  const Matrix& alpha = a.alpha();
  const Matrix ad = alpha * d;
  const Matrix da = d * alpha;
  CheckReport rep("derivation", o.max_witnesses);
  sweep(rep, "derivation_twist_commutation", {n}, [&](const auto& t) { return ad.column(t[0]) - da.column(t[0]); });
  leibniz_family(rep, mu, d);
  return rep;
}

CheckReport check_leibniz(const AlgebraPresentation& a, const std::string& op, const Matrix& d, const CheckOptions& o) {
  a.validate();
  const std::size_t n = a.dim;
  if (d.rows() != n || d.cols() != n) throw Error(ErrorKind::Dimension, "derivation must be " + std::to_string(n) + "x" + std::to_string(n));
  CheckReport rep("leibniz", o.max_witnesses);
  leibniz_family(rep, a.op(op), d);
  return rep;
}

CheckReport check_morphism(const AlgebraPresentation& src, const AlgebraPresentation& dst, const Matrix& f,
                           const std::vector<std::string>& op_names, const CheckOptions& o) {
  src.validate();
  dst.validate();
  if (f.rows() != dst.dim || f.cols() != src.dim) {
    throw Error(ErrorKind::Dimension, "morphism must be " + std::to_string(dst.dim) + "x" + std::to_string(src.dim));
  }
  const std::size_t n = src.dim;
  CheckReport rep("morphism", o.max_witnesses);
  const Matrix fa = f * src.alpha();
  const Matrix af = dst.alpha() * f;
  sweep(rep, "morphism_twist", {n}, [&](const auto& t) { return fa.column(t[0]) - af.column(t[0]); });
  for (const auto& name : op_names) {
    const auto& mu = src.op(name);
    const auto& nu = dst.op(name);
    sweep(rep, "morphism_" + name, {n, n}, [&](const auto& t) {
      return f.apply(mu.product(t[0], t[1])) - nu.apply(f.column(t[0]), f.column(t[1]));
    });
  }
  return rep;
}

CheckReport check_transposed_consequences(const AlgebraPresentation& a, const CheckOptions& o) {
  check_alpha(a);
  const auto& mu = a.op(ops::dot);
  const auto& br = a.op(ops::bracket);
  const std::size_t n = a.dim;
  Basis b(n, a.alpha());
  CheckReport rep("transposed_consequences", o.max_witnesses);
  sweep(rep, "cyclic_annihilation", {n, n, n}, [&](const auto& t) {
    const auto x = t[0], y = t[1], z = t[2];
    return mu.apply(b.ae[x], br.product(y, z)) + mu.apply(b.ae[y], br.product(z, x)) +
           mu.apply(b.ae[z], br.product(x, y));
  });
  const bool untwisted = a.alpha().is_identity();
  rep.set_flag("alpha_is_identity", untwisted);
  if (untwisted) {
    sweep(rep, "four_variable", {n, n, n, n}, [&](const auto& t) {
      const auto x = t[0], y = t[1], z = t[2], w = t[3];
      return br.apply(mu.product(x, z), mu.product(y, w)) + br.apply(mu.product(x, w), mu.product(y, z)) -
             Scalar(2) * mu.apply(mu.product(z, w), br.product(x, y));
    });
  } else {
    rep.add_note("four-variable identity skipped: alpha is not the identity");
  }
  return rep;
}

CheckReport check_poisson_intersection(const AlgebraPresentation& a, const CheckOptions& o) {
  check_alpha(a);
  const auto& mu = a.op(ops::dot);
  const auto& br = a.op(ops::bracket);
  const std::size_t n = a.dim;
  Basis b(n, a.alpha());

  CheckReport hp = check_hom_poisson(a, o);
  CheckReport tp = check_transposed_hom_poisson(a, o);
  CheckReport ann("annihilation", o.max_witnesses);
  sweep(ann, "annihilation_dot_bracket", {n, n, n},
        [&](const auto& t) { return mu.apply(b.ae[t[0]], br.product(t[1], t[2])); });
  sweep(ann, "annihilation_bracket_dot", {n, n, n},
        [&](const auto& t) { return br.apply(mu.product(t[0], t[1]), b.ae[t[2]]); });

  const bool hypotheses = check_comm_hom_assoc(a, o).passed() && check_hom_lie(a, o).passed();
  const bool both = hp.passed() && tp.passed();
  const bool holds = both == ann.passed();

  CheckReport rep("poisson_intersection", o.max_witnesses);
  rep.set_flag("is_hom_poisson", hp.passed());
  rep.set_flag("is_transposed", tp.passed());
  rep.set_flag("annihilation", ann.passed());
  rep.set_flag("hypotheses", hypotheses);
  rep.set_flag("biconditional_holds", holds);
  if (!hypotheses) rep.add_note("biconditional vacuous: dot is not commutative Hom-associative or bracket is not Hom-Lie");
  if (hypotheses && !holds) {
    // The failing side supplies the witnesses.
    if (both) {
      rep.absorb(std::move(ann));
      rep.attach(std::move(hp));
      rep.attach(std::move(tp));
    } else {
      rep.absorb(std::move(hp));
      rep.absorb(std::move(tp));
      rep.attach(std::move(ann));
    }
  } else {
    rep.attach(std::move(hp));
    rep.attach(std::move(tp));
    rep.attach(std::move(ann));
  }
  return rep;
}

CheckReport check_associative(const AlgebraPresentation& a, const std::string& op, const CheckOptions& o) {
  a.validate();
  CheckReport rep("associative", o.max_witnesses);
  assoc_families(rep, a.op(op), Matrix::identity(a.dim), false);
  return rep;
}

CheckReport check_lie(const AlgebraPresentation& a, const std::string& op, const CheckOptions& o) {
  a.validate();
  CheckReport rep("lie", o.max_witnesses);
  lie_families(rep, a.op(op), Matrix::identity(a.dim));
  return rep;
}

}  // namespace hompois
