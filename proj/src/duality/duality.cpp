#include "duality/duality.hpp"

#include "core/error.hpp"
#include "core/sweep.hpp"

namespace hompois {

namespace {

std::vector<Matrix> transposed_family(const BilinearMap& mu, const Scalar& sign) {
  const std::size_t n = mu.dim();
  std::vector<Matrix> fam;
  for (std::size_t i = 0; i < n; ++i) fam.push_back(sign * mu.left(basis_vec(n, i)).transpose());
  return fam;
}

std::vector<std::string> starred(const std::vector<std::string>& basis) {
  std::vector<std::string> out;
  for (const auto& b : basis) out.push_back(b + "*");
  return out;
}

// Matrix with column i = Δ(e_i), of shape n² × n.
Matrix comult_matrix(const Comultiplication& c) {
  const std::size_t n = c.dim();
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < n; ++i) cols.push_back(c.apply(basis_vec(n, i)));
  return Matrix::from_columns(cols, n * n);
}

// τ ⊗ id on A ⊗ A ⊗ A.
Vec swap_first_two(const Vec& t, std::size_t n) {
  Vec out(t.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[(j * n + i) * n + k] = t[(i * n + j) * n + k];
  return out;
}

void gate_pair(const AlgebraPresentation& a, const AlgebraPresentation& a_star, const CheckOptions& o) {
  a.validate();
  a_star.validate();
  if (a.dim != a_star.dim) throw Error(ErrorKind::Dimension, "A and A* must have the same dimension");
  require(check_transposed_hom_poisson(a, o), "A fails the transposed Hom-Poisson check");
  require(check_transposed_hom_poisson(a_star, o), "A* fails the transposed Hom-Poisson check");
}

}  // namespace

Matrix dual_map(const Matrix& f) {
  if (!f.square()) throw Error(ErrorKind::Dimension, "dual_map takes a square matrix");
  return f.transpose();
}

ModulePresentation coadjoint_actions(const AlgebraPresentation& a) {
  a.validate();
  ModulePresentation m(a.dim, a.dim);
  m.basis = starred(a.basis);
  m.actions[acts::s] = transposed_family(a.op(ops::dot), Scalar(-1));
  m.actions[acts::rho] = transposed_family(a.op(ops::bracket), Scalar(1));
  m.beta = dual_map(a.alpha());
  return m;
}

MatchedPairData coadjoint_pair(const AlgebraPresentation& a, const AlgebraPresentation& a_star) {
  if (a.dim != a_star.dim) throw Error(ErrorKind::Dimension, "A and A* must have the same dimension");
  auto acting = [](const AlgebraPresentation& p, const AlgebraPresentation& q) {
    ModulePresentation m = coadjoint_actions(p);
    for (auto& s : m.actions[acts::s]) s = -s;
    m.basis = q.basis;
    m.beta = q.alpha();
    return m;
  };
  return {a, a_star, acting(a, a_star), acting(a_star, a)};
}

CheckReport check_invariant_form(const AlgebraPresentation& a, const Matrix& form, const CheckOptions& o) {
  a.validate();
  const std::size_t n = a.dim;
  if (form.rows() != n || form.cols() != n) {
    throw Error(ErrorKind::Dimension, "bilinear form must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  const Matrix& alpha = a.alpha();
  auto pair = [&](const Vec& u, const Vec& v) {
    Scalar s = 0;
    const Vec bv = form.apply(v);
    for (std::size_t i = 0; i < n; ++i) s += u[i] * bv[i];
    return Vec{s};
  };
  if (!a.has_op(ops::dot) && !a.has_op(ops::bracket)) {
    throw Error(ErrorKind::Missing, "invariant form needs a dot or a bracket");
  }
  CheckReport rep("invariant_form", o.max_witnesses);
  for (const auto& name : {ops::dot, ops::bracket}) {
    if (!a.has_op(name)) continue;
    const auto& mu = a.op(name);
    sweep(rep, "invariance_" + name, {n, n, n}, [&](const auto& t) {
      return pair(mu.product(t[0], t[1]), alpha.column(t[2])) - pair(alpha.column(t[0]), mu.product(t[1], t[2]));
    });
  }
  return rep;
}

Matrix standard_form(std::size_t dim_a) {
  Matrix b(2 * dim_a, 2 * dim_a);
  for (std::size_t i = 0; i < dim_a; ++i) {
    b(i, dim_a + i) = 1;
    b(dim_a + i, i) = 1;
  }
  return b;
}

AlgebraPresentation build_double_dual(const AlgebraPresentation& a, const AlgebraPresentation& a_star,
                                      const CheckOptions& o) {
  gate_pair(a, a_star, o);
  return assemble_double(coadjoint_pair(a, a_star), AlgebraClass::TransposedHomPoisson);
}

CheckReport check_manin_triple(const AlgebraPresentation& a, const AlgebraPresentation& a_star,
                               const CheckOptions& o) {
  const AlgebraPresentation d = build_double_dual(a, a_star, o);
  const std::size_t n = a.dim;
  CheckReport rep("manin_triple", o.max_witnesses);
  {
    CheckReport r("double", o.max_witnesses);
    r.absorb(check_transposed_hom_poisson(d, o));
    rep.absorb(std::move(r));
  }
  // Closure: products inside a block have no component in the other block.
  CheckReport closed("subalgebras", o.max_witnesses);
  auto off_block = [&](const Vec& v, std::size_t offset) {
    Vec out(n);
    const std::size_t other = offset == 0 ? n : 0;
    for (std::size_t k = 0; k < n; ++k) out[k] = v[other + k];
    return out;
  };
  for (std::size_t offset : {std::size_t{0}, n}) {
    const std::string block = offset == 0 ? "a" : "a_star";
    for (const auto& name : {ops::dot, ops::bracket}) {
      const auto& mu = d.op(name);
      sweep(closed, "closed_" + block + "_" + name, {n, n},
            [&](const auto& t) { return off_block(mu.product(offset + t[0], offset + t[1]), offset); });
    }
    sweep(closed, "closed_" + block + "_alpha", {n},
          [&](const auto& t) { return off_block(d.alpha().column(offset + t[0]), offset); });
  }
  rep.absorb(std::move(closed));
  const Matrix b = standard_form(n);
  rep.absorb(check_invariant_form(d, b, o));
  bool iso = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) iso = iso && sgn(b(i, j)) == 0 && sgn(b(n + i, n + j)) == 0;
  rep.set_flag("form_symmetric", b == b.transpose());
  rep.set_flag("form_nondegenerate", sgn(determinant(b)) != 0);
  rep.set_flag("blocks_isotropic", iso);
  return rep;
}

BilinearMap dualize_comultiplication(const Comultiplication& c) {
  const std::size_t n = c.dim();
  BilinearMap out(n);
  for (const auto& e : c.coefficients().entries()) out.set(e.j, e.k, e.i, e.c);
  return out;
}

Comultiplication codualize_product(const BilinearMap& product) {
  Comultiplication c(product.dim());
  for (const auto& e : product.entries()) c.set(e.k, e.i, e.j, e.c);
  return c;
}

CheckReport check_bialgebra_conditions(const AlgebraPresentation& a, const Comultiplication& delta,
                                       const Comultiplication& Delta, const CheckOptions& o) {
  a.validate();
  const std::size_t n = a.dim;
  if (delta.dim() != n || Delta.dim() != n) throw Error(ErrorKind::Dimension, "comultiplications must match the algebra dimension");
  require(check_transposed_hom_poisson(a, o), "bialgebra: algebra fails the transposed Hom-Poisson check");
  const auto& dot = a.op(ops::dot);
  const auto& br = a.op(ops::bracket);
  const Matrix& al = a.alpha();
  auto S = [&](const Vec& x) { return dot.left(x); };
  auto ad = [&](const Vec& x) { return br.left(x); };
  auto e = [&](std::size_t i) { return basis_vec(n, i); };
  auto ae = [&](std::size_t i) { return al.column(i); };
  auto dl = [&](const Vec& x) { return delta.apply(x); };
  auto DL = [&](const Vec& x) { return Delta.apply(x); };

  CheckReport rep("bialgebra", o.max_witnesses);
  rep.add_note("mixed_Delta read with the parenthesis closed after ad(alpha x): (ad(ax) (x) a + a (x) ad(ax)) Delta(y)");
  sweep(rep, "lie_cocycle", {n, n}, [&](const auto& t) {
    const Vec x = e(t[0]), y = e(t[1]);
    return dl(br.product(t[0], t[1])) - tensor_apply(ad(x), al, dl(y)) - tensor_apply(al, ad(x), dl(y)) +
           tensor_apply(ad(y), al, dl(x)) + tensor_apply(al, ad(y), dl(x));
  });
  sweep(rep, "assoc_cocycle", {n, n}, [&](const auto& t) {
    const Vec x = e(t[0]), y = e(t[1]);
    return DL(dot.product(t[0], t[1])) - tensor_apply(S(ae(t[0])), al, DL(y)) - tensor_apply(al, S(ae(t[1])), DL(x));
  });
  sweep(rep, "mixed_delta", {n, n}, [&](const auto& t) {
    const Vec x = e(t[0]), y = e(t[1]);
    return dl(dot.product(t[0], t[1])) - tensor_apply(S(ae(t[1])), al, dl(x)) - tensor_apply(S(ae(t[0])), al, dl(y)) +
           tensor_apply(al, ad(x), DL(y)) + tensor_apply(al, ad(y), DL(x));
  });
  sweep(rep, "mixed_Delta", {n, n}, [&](const auto& t) {
    const Vec x = e(t[0]), y = e(t[1]);
    const Matrix adx = ad(ae(t[0]));
    const Matrix sy = S(ae(t[1]));
    return DL(br.product(t[0], t[1])) - tensor_apply(adx, al, DL(y)) - tensor_apply(al, adx, DL(y)) -
           tensor_apply(sy, al, dl(x)) + tensor_apply(al, sy, dl(x));
  });
  const Matrix dm = comult_matrix(delta);
  const Matrix Dm = comult_matrix(Delta);
  const Matrix lhs = kronecker(al, Dm);
  const Matrix rhs1 = kronecker(dm, al);
  const Matrix rhs2 = kronecker(al, dm);
  sweep(rep, "coalgebra_compat", {n}, [&](const auto& t) {
    const Vec x = e(t[0]);
    return lhs.apply(dl(x)) - rhs1.apply(DL(x)) - swap_first_two(rhs2.apply(DL(x)), n);
  });

  AlgebraPresentation dual(n);
  dual.basis = starred(a.basis);
  dual.ops[ops::dot] = dualize_comultiplication(Delta);
  dual.ops[ops::bracket] = dualize_comultiplication(delta);
  dual.maps[ops::alpha] = dual_map(al);
  {
    CheckReport r("coassociative", o.max_witnesses);
    r.absorb(check_comm_hom_assoc(dual, o));
    rep.absorb(std::move(r));
  }
  {
    CheckReport r("hom_lie_coalgebra", o.max_witnesses);
    r.absorb(check_hom_lie(dual, o));
    rep.absorb(std::move(r));
  }
  return rep;
}

CheckReport equivalence_report(const AlgebraPresentation& a, const AlgebraPresentation& a_star, const CheckOptions& o) {
  gate_pair(a, a_star, o);
  {
    CheckReport tw("dual_twist", o.max_witnesses);
    const Matrix diff = a_star.alpha() - dual_map(a.alpha());
    sweep(tw, "dual_twist", {a.dim}, [&](const auto& t) { return diff.column(t[0]); });
    require(tw, "equivalence: the twist of A* must be the transpose of the twist of A");
  }
  CheckReport bialg("bialgebra", o.max_witnesses);
  bialg.absorb(check_bialgebra_conditions(a, codualize_product(a_star.op(ops::bracket)),
                                          codualize_product(a_star.op(ops::dot)), o));
  CheckReport mp("matched_pair", o.max_witnesses);
  try {
    mp.absorb(check_matched_pair(coadjoint_pair(a, a_star), AlgebraClass::TransposedHomPoisson, o));
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::Precondition || !err.report()) throw;
    mp.add_note(std::string("action sets rejected: ") + err.what());
    mp.absorb(*err.report());
  }
  CheckReport manin("manin", o.max_witnesses);
  manin.absorb(check_manin_triple(a, a_star, o));

  const bool v1 = bialg.passed(), v2 = mp.passed(), v3 = manin.passed();
  const bool agree = v1 == v2 && v2 == v3;
  CheckReport rep("equivalence", o.max_witnesses);
  rep.set_flag("bialgebra", v1);
  rep.set_flag("matched_pair", v2);
  rep.set_flag("manin_triple", v3);
  rep.set_flag("verdicts_agree", agree);
  for (auto* r : {&bialg, &mp, &manin}) {
    if (!agree && !r->passed()) {
      rep.absorb(std::move(*r));
    } else {
      rep.attach(std::move(*r));
    }
  }
  return rep;
}

}  // namespace hompois
