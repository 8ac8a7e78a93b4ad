#include "constructions/constructions.hpp"

#include "core/error.hpp"

namespace hompois {

namespace {

void require_untwisted(const AlgebraPresentation& a, const char* who) {
  if (!a.alpha().is_identity()) {
    CheckReport rep("untwisted", 1);
    const Matrix diff = a.alpha() - Matrix::identity(a.dim);
    for (std::size_t c = 0; c < a.dim; ++c) rep.record("alpha_is_identity", {c}, diff.column(c));
    throw Error(ErrorKind::Precondition, std::string(who) + ": input twist is not the identity", rep);
  }
}

void require_square(const Matrix& m, std::size_t n, const char* what) {
  if (m.rows() != n || m.cols() != n) {
    throw Error(ErrorKind::Dimension, std::string(what) + " must be " + std::to_string(n) + "x" + std::to_string(n));
  }
}

AlgebraPresentation with_ops_composed(const AlgebraPresentation& a, AlgebraClass cls, const Matrix& g,
                                      const Matrix& twist) {
  AlgebraPresentation out = a;
  for (const auto& name : class_ops(cls)) out.ops[name] = compose(g, a.op(name));
  out.maps[ops::alpha] = twist;
  return out;
}

}  // namespace

BilinearMap commutator(const BilinearMap& op) { return op - opposite(op); }

Matrix left_multiplication(const AlgebraPresentation& a, const Vec& h) {
  if (h.size() != a.dim) throw Error(ErrorKind::Dimension, "element has the wrong length");
  return a.op(ops::dot).left(h);
}

AlgebraPresentation yau_twist(const AlgebraPresentation& a, AlgebraClass cls, const Matrix& g, const CheckOptions& o) {
  a.validate();
  require_square(g, a.dim, "twisting map");
  require_untwisted(a, "yau_twist");
  require(check_class(a, cls, o), "yau_twist: input is not an algebra of the requested class");
  require(check_morphism(a, a, g, class_ops(cls), o), "yau_twist: map is not a morphism of the algebra");
  AlgebraPresentation out = with_ops_composed(a, cls, g, g);
  ensure(check_class(out, cls, o), "yau_twist: twisted algebra fails its class check");
  return out;
}

AlgebraPresentation compose_twist(const AlgebraPresentation& a, AlgebraClass cls, const Matrix& g,
                                  const CheckOptions& o) {
  a.validate();
  require_square(g, a.dim, "twisting map");
  require(check_class(a, cls, o), "compose_twist: input is not an algebra of the requested class");
  // The morphism check includes g∘α = α∘g.
  require(check_morphism(a, a, g, class_ops(cls), o), "compose_twist: map is not a morphism commuting with alpha");
  AlgebraPresentation out = with_ops_composed(a, cls, g, a.alpha() * g);
  ensure(check_class(out, cls, o), "compose_twist: output fails its class check");
  return out;
}

AlgebraPresentation derived_algebra(const AlgebraPresentation& a, AlgebraClass cls, unsigned n, int type,
                                    const CheckOptions& o) {
  if (n < 1) throw Error(ErrorKind::Argument, "derived_algebra: n must be at least 1");
  if (type != 1 && type != 2) throw Error(ErrorKind::Argument, "derived_algebra: type must be 1 or 2");
  if (type == 2 && n >= 32) throw Error(ErrorKind::Argument, "derived_algebra: n too large for type 2");
  a.validate();
  CheckReport mult("multiplicative", o.max_witnesses);
  for (const auto& name : class_ops(cls)) {
    CheckReport r = check_multiplicative(a, name, ops::alpha, o);
    CheckReport named("multiplicative_" + name, o.max_witnesses);
    named.absorb(std::move(r));
    mult.absorb(std::move(named));
  }
  require(mult, "derived_algebra: alpha is not multiplicative");
  const unsigned long e = type == 1 ? n : (1UL << n) - 1;
  return compose_twist(a, cls, power(a.alpha(), e), o);
}

AlgebraPresentation alpha_h_twist(const AlgebraPresentation& a, const Vec& h, const CheckOptions& o) {
  a.validate();
  require_untwisted(a, "alpha_h_twist");
  require(check_transposed_hom_poisson(a, o), "alpha_h_twist: input is not a transposed Poisson algebra");
  AlgebraPresentation out = a;
  out.maps[ops::alpha] = left_multiplication(a, h);
  ensure(check_transposed_hom_poisson(out, o), "alpha_h_twist: output fails the transposed check");
  return out;
}

AlgebraPresentation bracket_from_derivation(const AlgebraPresentation& a, const Matrix& d, const CheckOptions& o) {
  a.validate();
  require_square(d, a.dim, "derivation");
  require(check_comm_hom_assoc(a, o), "bracket_from_derivation: input is not commutative Hom-associative");
  require(check_derivation(a, ops::dot, d, o), "bracket_from_derivation: map is not a derivation");
  const auto& mu = a.op(ops::dot);
  const std::size_t n = a.dim;
  BilinearMap br(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec v = mu.apply(basis_vec(n, i), d.column(j)) - mu.apply(d.column(i), basis_vec(n, j));
      for (std::size_t k = 0; k < n; ++k) br.set(i, j, k, v[k]);
    }
  AlgebraPresentation out = a;
  out.ops[ops::bracket] = br;
  ensure(check_transposed_hom_poisson(out, o), "bracket_from_derivation: output fails the transposed check");
  return out;
}

AlgebraPresentation bracket_from_two_derivations(const AlgebraPresentation& a, const Matrix& d1, const Matrix& d2,
                                                 const CheckOptions& o) {
  a.validate();
  require_square(d1, a.dim, "first derivation");
  require_square(d2, a.dim, "second derivation");
  require(check_comm_hom_assoc(a, o), "bracket_from_two_derivations: input is not commutative Hom-associative");
  require(check_derivation(a, ops::dot, d1, o), "bracket_from_two_derivations: first map is not a derivation");
  require(check_derivation(a, ops::dot, d2, o), "bracket_from_two_derivations: second map is not a derivation");
  const Matrix c = d1 * d2 - d2 * d1;
  if (!c.is_zero()) {
    CheckReport rep("commuting", o.max_witnesses);
    for (std::size_t j = 0; j < a.dim; ++j) rep.record("derivations_commute", {j}, c.column(j));
    throw Error(ErrorKind::Precondition, "bracket_from_two_derivations: derivations do not commute", rep);
  }
  const auto& mu = a.op(ops::dot);
  const std::size_t n = a.dim;
  BilinearMap br(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec v = mu.apply(d1.column(i), d2.column(j)) - mu.apply(d1.column(j), d2.column(i));
      for (std::size_t k = 0; k < n; ++k) br.set(i, j, k, v[k]);
    }
  AlgebraPresentation out = a;
  out.ops[ops::bracket] = br;
  ensure(check_hom_poisson(out, o), "bracket_from_two_derivations: output fails the Hom-Poisson check");
  return out;
}

AlgebraPresentation tensor_product(const AlgebraPresentation& a1, const AlgebraPresentation& a2, AlgebraClass cls,
                                   const CheckOptions& o) {
  if (cls != AlgebraClass::TransposedHomPoisson && cls != AlgebraClass::HomPreLiePoisson) {
    throw Error(ErrorKind::Argument, "tensor_product supports the transposed and pre-Lie Poisson classes only");
  }
  a1.validate();
  a2.validate();
  require(check_class(a1, cls, o), "tensor_product: first factor fails its class check");
  require(check_class(a2, cls, o), "tensor_product: second factor fails its class check");
  const std::size_t n1 = a1.dim, n2 = a2.dim, n = n1 * n2;
  // (op1 ⊗ op2)(e_i ⊗ f_p, e_j ⊗ f_q) = op1(e_i, e_j) ⊗ op2(f_p, f_q)
  auto tens = [&](const BilinearMap& m1, const BilinearMap& m2) {
    BilinearMap out(n);
    for (const auto& x : m1.entries())
      for (const auto& y : m2.entries()) out.add(x.i * n2 + y.i, x.j * n2 + y.j, x.k * n2 + y.k, x.c * y.c);
    return out;
  };
  const auto& dot1 = a1.op(ops::dot);
  const auto& dot2 = a2.op(ops::dot);
  AlgebraPresentation out(n);
  out.ops[ops::dot] = tens(dot1, dot2);
  if (cls == AlgebraClass::TransposedHomPoisson) {
    out.ops[ops::bracket] = tens(a1.op(ops::bracket), dot2) + tens(dot1, a2.op(ops::bracket));
  } else {
    out.ops[ops::star] = tens(a1.op(ops::star), dot2) + tens(dot1, a2.op(ops::star));
  }
  out.maps[ops::alpha] = kronecker(a1.alpha(), a2.alpha());
  ensure(check_class(out, cls, o), "tensor_product: output fails its class check");
  return out;
}

AlgebraPresentation sub_adjacent(const AlgebraPresentation& a, AlgebraClass class_in, const CheckOptions& o) {
  AlgebraClass target;
  if (class_in == AlgebraClass::HomPreLie) {
    target = AlgebraClass::HomLie;
  } else if (class_in == AlgebraClass::HomPreLiePoisson) {
    target = AlgebraClass::TransposedHomPoisson;
  } else {
    throw Error(ErrorKind::Argument, "sub_adjacent takes a Hom-pre-Lie or Hom-pre-Lie Poisson algebra");
  }
  a.validate();
  require(check_class(a, class_in, o), "sub_adjacent: input fails its class check");
  AlgebraPresentation out = a;
  out.ops.erase(ops::star);
  out.ops[ops::bracket] = commutator(a.op(ops::star));
  ensure(check_class(out, target, o), "sub_adjacent: output fails its class check");
  return out;
}

CheckReport twisting_report(const AlgebraPresentation& a, const Matrix& g, const CheckOptions& o) {
  a.validate();
  require_square(g, a.dim, "twisting map");
  require_untwisted(a, "twisting_report");
  std::vector<std::string> present;
  for (const auto& name : {ops::dot, ops::bracket}) {
    if (a.has_op(name)) present.push_back(name);
  }
  if (present.empty()) throw Error(ErrorKind::Missing, "twisting_report needs a dot or a bracket");
  require(check_morphism(a, a, g, present, o), "twisting_report: map is not a morphism of the algebra");

  AlgebraPresentation tw = a;
  bool trivial = true;
  for (const auto& name : present) {
    tw.ops[name] = compose(g, a.op(name));
    trivial = trivial && tw.ops[name].is_zero();
  }
  tw.maps[ops::alpha] = g;

  CheckReport rep("twisting", o.max_witnesses);
  rep.set_flag("trivial", trivial);
  bool assoc = true, jacobi = true;
  if (a.has_op(ops::dot)) {
    CheckReport r = check_associative(tw, ops::dot, o);
    assoc = r.passed();
    rep.attach(std::move(r));
  }
  if (a.has_op(ops::bracket)) {
    CheckReport r = check_lie(tw, ops::bracket, o);
    jacobi = r.passed();
    rep.attach(std::move(r));
  }
  rep.set_flag("dot_associative", assoc);
  rep.set_flag("bracket_jacobi", jacobi);
  rep.set_flag("not_rigid", !assoc || !jacobi);
  return rep;
}

}  // namespace hompois
