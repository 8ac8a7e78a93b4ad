#include "operators/operators.hpp"

#include "constructions/constructions.hpp"
#include "core/error.hpp"
#include "core/sweep.hpp"

namespace hompois {

namespace {

bool uses_dot(AlgebraClass cls) {
  return cls == AlgebraClass::CommHomAssociative || cls == AlgebraClass::TransposedHomPoisson;
}
bool uses_bracket(AlgebraClass cls) {
  return cls == AlgebraClass::HomLie || cls == AlgebraClass::TransposedHomPoisson;
}

void check_operator_class(AlgebraClass cls) {
  if (!uses_dot(cls) && !uses_bracket(cls)) {
    throw Error(ErrorKind::Argument, std::string("O-operators are defined for comm-hom-assoc, hom-lie and "
                                                 "transposed-hom-poisson, not ") + to_string(cls));
  }
}

void check_operator_shape(const AlgebraPresentation& a, const ModulePresentation& m, const Matrix& t) {
  if (t.rows() != a.dim || t.cols() != m.module_dim) {
    throw Error(ErrorKind::Dimension, "operator must be " + std::to_string(a.dim) + "x" + std::to_string(m.module_dim));
  }
}

// Basis products on V: (u, v) -> f(u, v).
template <class F>
BilinearMap table(std::size_t n, F&& f) {
  BilinearMap mu(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec v = f(i, j);
      for (std::size_t k = 0; k < n; ++k) mu.set(i, j, k, v[k]);
    }
  return mu;
}

}  // namespace

CheckReport check_o_operator(const AlgebraPresentation& a, const ModulePresentation& m, const Matrix& t,
                             AlgebraClass cls, const CheckOptions& o) {
  check_operator_class(cls);
  a.validate();
  m.validate();
  check_operator_shape(a, m, t);
  require(check_module(a, m, cls, o), "O-operator: module fails its representation check");
  const std::size_t nv = m.module_dim;
  CheckReport rep("o_operator", o.max_witnesses);
  const Matrix tw = a.alpha() * t - t * m.beta;
  sweep(rep, "o_twist", {nv}, [&](const auto& s) { return tw.column(s[0]); });
  if (uses_dot(cls)) {
    const auto& mu = a.op(ops::dot);
    sweep(rep, "o_dot", {nv, nv}, [&](const auto& s) {
      const Vec tu = t.column(s[0]), tv = t.column(s[1]);
      return mu.apply(tu, tv) - t.apply(m.act(acts::s, tu).column(s[1]) + m.act(acts::s, tv).column(s[0]));
    });
  }
  if (uses_bracket(cls)) {
    const auto& br = a.op(ops::bracket);
    sweep(rep, "o_bracket", {nv, nv}, [&](const auto& s) {
      const Vec tu = t.column(s[0]), tv = t.column(s[1]);
      return br.apply(tu, tv) - t.apply(m.act(acts::rho, tu).column(s[1]) - m.act(acts::rho, tv).column(s[0]));
    });
  }
  return rep;
}

CheckReport check_rota_baxter(const AlgebraPresentation& a, const Matrix& r, AlgebraClass cls, const CheckOptions& o) {
  check_operator_class(cls);
  a.validate();
  if (r.rows() != a.dim || r.cols() != a.dim) throw Error(ErrorKind::Dimension, "Rota-Baxter operator must be square");
  CheckReport rep("rota_baxter", o.max_witnesses);
  rep.absorb(check_o_operator(a, regular_module(a, cls), r, cls, o));
  return rep;
}

AlgebraPresentation induced_products(const AlgebraPresentation& a, const ModulePresentation& m, const Matrix& t,
                                     AlgebraClass cls, const CheckOptions& o) {
  require(check_o_operator(a, m, t, cls, o), "induced_products: map is not an O-operator");
  const std::size_t nv = m.module_dim;
  AlgebraPresentation out(nv);
  out.basis = m.basis;
  out.maps[ops::alpha] = m.beta;
  if (uses_dot(cls)) {
    out.ops[ops::dot] = table(nv, [&](std::size_t u, std::size_t v) {
      return m.act(acts::s, t.column(u)).column(v) + m.act(acts::s, t.column(v)).column(u);
    });
  }
  if (uses_bracket(cls)) {
    out.ops[ops::star] = table(nv, [&](std::size_t u, std::size_t v) { return m.act(acts::rho, t.column(u)).column(v); });
  }
  AlgebraClass target = AlgebraClass::HomPreLiePoisson;
  if (cls == AlgebraClass::CommHomAssociative) target = AlgebraClass::CommHomAssociative;
  if (cls == AlgebraClass::HomLie) target = AlgebraClass::HomPreLie;
  ensure(check_class(out, target, o), "induced_products: induced structure fails its class check");
  return out;
}

CheckReport o_operator_is_morphism(const AlgebraPresentation& a, const ModulePresentation& m, const Matrix& t,
                                   AlgebraClass cls, const CheckOptions& o) {
  AlgebraPresentation v = induced_products(a, m, t, cls, o);
  std::vector<std::string> names;
  if (v.has_op(ops::dot)) names.push_back(ops::dot);
  if (v.has_op(ops::star)) {
    v.ops[ops::bracket] = commutator(v.op(ops::star));
    v.ops.erase(ops::star);
    names.push_back(ops::bracket);
  }
  CheckReport rep("o_operator_morphism", o.max_witnesses);
  rep.absorb(check_morphism(v, a, t, names, o));
  return rep;
}

AlgebraPresentation compatible_pre_lie_from_invertible(const AlgebraPresentation& a, const ModulePresentation& m,
                                                       const Matrix& t, const CheckOptions& o) {
  a.validate();
  m.validate();
  check_operator_shape(a, m, t);
  if (!t.square() || sgn(determinant(t)) == 0) throw Error(ErrorKind::Argument, "operator is not invertible");
  require(check_o_operator(a, m, t, AlgebraClass::TransposedHomPoisson, o),
          "compatible_pre_lie_from_invertible: map is not an O-operator");
  const Matrix ti = inverse(t);
  const std::size_t n = a.dim;
  AlgebraPresentation out(n);
  out.basis = a.basis;
  out.maps = a.maps;
  out.ops[ops::dot] = table(n, [&](std::size_t x, std::size_t y) {
    return t.apply(m.action(acts::s)[x].apply(ti.column(y)) + m.action(acts::s)[y].apply(ti.column(x)));
  });
  out.ops[ops::star] =
      table(n, [&](std::size_t x, std::size_t y) { return t.apply(m.action(acts::rho)[x].apply(ti.column(y))); });

  CheckReport post("compatible_pre_lie", o.max_witnesses);
  post.absorb(check_hom_pre_lie_poisson(out, o));
  const BilinearMap br = commutator(out.op(ops::star));
  sweep(post, "sub_adjacent_dot", {n, n},
        [&](const auto& s) { return out.op(ops::dot).product(s[0], s[1]) - a.op(ops::dot).product(s[0], s[1]); });
  sweep(post, "sub_adjacent_bracket", {n, n},
        [&](const auto& s) { return br.product(s[0], s[1]) - a.op(ops::bracket).product(s[0], s[1]); });
  ensure(post, "compatible_pre_lie_from_invertible: sub-adjacent structure does not reproduce the input");
  return out;
}

AlgebraPresentation rota_baxter_induced(const AlgebraPresentation& a, const Matrix& r, const CheckOptions& o) {
  require(check_rota_baxter(a, r, AlgebraClass::TransposedHomPoisson, o),
          "rota_baxter_induced: map is not a Rota-Baxter operator");
  const std::size_t n = a.dim;
  const auto& dot = a.op(ops::dot);
  const auto& br = a.op(ops::bracket);
  AlgebraPresentation out(n);
  out.basis = a.basis;
  out.maps[ops::alpha] = a.alpha();
  out.ops[ops::dot] = table(n, [&](std::size_t x, std::size_t y) {
    return dot.apply(r.column(x), basis_vec(n, y)) + dot.apply(basis_vec(n, x), r.column(y));
  });
  out.ops[ops::star] = table(n, [&](std::size_t x, std::size_t y) { return br.apply(r.column(x), basis_vec(n, y)); });

  AlgebraPresentation sub = out;
  sub.ops.erase(ops::star);
  sub.ops[ops::bracket] = commutator(out.op(ops::star));
  CheckReport post("rota_baxter_induced", o.max_witnesses);
  post.absorb(check_transposed_hom_poisson(sub, o));
  post.absorb(check_morphism(sub, a, r, {ops::dot, ops::bracket}, o));
  ensure(post, "rota_baxter_induced: induced structure fails its checks");
  return out;
}

std::vector<Matrix> derivation_space(const AlgebraPresentation& a, const std::string& op,
                                     const std::optional<std::string>& commuting_with, const CheckOptions& o) {
  a.validate();
  const auto& mu = a.op(op);
  const std::size_t n = a.dim, unknowns = n * n;
  auto var = [n](std::size_t r, std::size_t c) { return r * n + c; };
  std::vector<Vec> rows;
  // D(e_i e_j) - D(e_i) e_j - e_i D(e_j), component k.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec row(unknowns);
        for (std::size_t m = 0; m < n; ++m) {
          row[var(k, m)] += mu.at(i, j, m);
          row[var(m, i)] -= mu.at(m, j, k);
          row[var(m, j)] -= mu.at(i, m, k);
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
  if (commuting_with) {
    const Matrix& g = a.map(*commuting_with);
    if (!g.square() || g.rows() != n) throw Error(ErrorKind::Dimension, "commuting map has the wrong shape");
    // (gD - Dg)[r][c]
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        Vec row(unknowns);
        for (std::size_t m = 0; m < n; ++m) {
          row[var(m, c)] += g(r, m);
          row[var(r, m)] -= g(m, c);
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
  }
  Matrix system(rows.size(), unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < unknowns; ++c) system(r, c) = rows[r][c];
  std::vector<Vec> kernel;
  if (rows.empty()) {
    for (std::size_t c = 0; c < unknowns; ++c) kernel.push_back(basis_vec(unknowns, c));
  } else {
    kernel = nullspace(system);
  }
  std::vector<Matrix> out;
  if (kernel.empty()) return out;
  Matrix basis(kernel.size(), unknowns);
  for (std::size_t r = 0; r < kernel.size(); ++r)
    for (std::size_t c = 0; c < unknowns; ++c) basis(r, c) = kernel[r][c];
  const Matrix reduced = rref(basis);
  for (std::size_t r = 0; r < reduced.rows(); ++r) {
    Matrix d(n, n);
    bool zero = true;
    for (std::size_t c = 0; c < unknowns; ++c) {
      d(c / n, c % n) = reduced(r, c);
      zero = zero && sgn(reduced(r, c)) == 0;
    }
    if (!zero) out.push_back(std::move(d));
  }
  CheckReport post("derivation_space", o.max_witnesses);
  for (const auto& d : out) {
    if (commuting_with && *commuting_with == ops::alpha) {
      post.absorb(check_derivation(a, op, d, o));
    } else {
      post.absorb(check_leibniz(a, op, d, o));
    }
  }
  ensure(post, "derivation_space: a basis element fails the derivation check");
  return out;
}

}  // namespace hompois
