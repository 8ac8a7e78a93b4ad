#pragma once

#include "catalog/catalog.hpp"
#include "constructions/constructions.hpp"
#include "core/error.hpp"
#include "core/format.hpp"
#include "duality/duality.hpp"
#include "operators/operators.hpp"

#include <functional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

namespace fx {

using namespace hompois;

inline Scalar q(const char* s) { return parse_rational(s); }

// Rows as written on paper; column c is the image of e_{c+1}.
inline Matrix mat(std::initializer_list<std::initializer_list<Scalar>> rows) {
  const std::size_t r = rows.size(), c = rows.begin()->size();
  Matrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (const auto& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

using Entries = std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>>;

inline BilinearMap table(std::size_t n, const Entries& es) {
  BilinearMap mu(n);
  for (const auto& [i, j, k, c] : es) mu.set(i, j, k, c);
  return mu;
}

inline AlgebraPresentation algebra(std::size_t n, std::vector<std::pair<std::string, Entries>> ops_, Matrix alpha) {
  AlgebraPresentation a(n);
  for (auto& [name, es] : ops_) a.ops[name] = table(n, es);
  a.maps[ops::alpha] = std::move(alpha);
  return a;
}

inline AlgebraPresentation cat(const std::string& id, const ParameterBinding& b = {}) {
  return catalog_instantiate(id, b);
}

inline ParameterBinding bind(std::initializer_list<std::pair<const char*, const char*>> kv) {
  ParameterBinding b;
  for (const auto& [k, v] : kv) b[k] = parse_rational(v);
  return b;
}

// THP2 with e1.e1 = +e1: the nearest transposed Hom-Poisson structure to the
// stored fixture.
inline AlgebraPresentation thp2v(const Scalar& lambda) {
  return algebra(2,
                 {{ops::dot, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}}},
                  {ops::bracket, {{0, 1, 1, lambda}, {1, 0, 1, -lambda}}}},
                 -Matrix::identity(2));
}

// TP2 with {e1,e2} = e1.
inline AlgebraPresentation tp2v() {
  return algebra(2,
                 {{ops::dot, {{0, 1, 0, 1}, {1, 0, 0, 1}, {1, 1, 1, 1}}},
                  {ops::bracket, {{0, 1, 0, 1}, {1, 0, 0, -1}}}},
                 Matrix::identity(2));
}

// ---- naive expansion oracle -------------------------------------------------
// Products of arbitrary vectors by full double sums over structure constants;
// nothing here goes through BilinearMap::apply or the sweep machinery.

inline Vec mul(const BilinearMap& mu, const Vec& x, const Vec& y) {
  const std::size_t n = mu.dim();
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(y[j]) == 0) continue;
      for (std::size_t k = 0; k < n; ++k) out[k] += x[i] * y[j] * mu.at(i, j, k);
    }
  }
  return out;
}

inline Vec app(const Matrix& m, const Vec& x) {
  Vec out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * x[c];
  return out;
}

inline Vec add(Vec a, const Vec& b, const Scalar& s = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
  return a;
}

inline bool zero(const Vec& v) {
  for (const auto& c : v)
    if (sgn(c) != 0) return false;
  return true;
}

// Seeded rational vectors with small numerators and denominators.
class Rng {
 public:
  explicit Rng(unsigned seed) : g_(seed) {}
  Scalar rational() {
    std::uniform_int_distribution<int> num(-7, 7), den(1, 5);
    Scalar s(num(g_), den(g_));
    s.canonicalize();
    return s;
  }
  Vec vec(std::size_t n) {
    Vec v(n);
    for (auto& c : v) c = rational();
    return v;
  }
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(g_); }
  bool coin() { return std::uniform_int_distribution<int>(0, 1)(g_) == 1; }

 private:
  std::mt19937 g_;
};

// One identity as a function of argument vectors; the arity says how many.
struct Identity {
  std::string name;
  std::size_t arity;
  std::function<Vec(const std::vector<Vec>&)> residual;
};

inline std::vector<Identity> comm_assoc_ids(const AlgebraPresentation& a) {
  const auto& mu = a.op(ops::dot);
  const Matrix& al = a.alpha();
  return {
      {"commutativity", 2, [&](const auto& v) { return add(mul(mu, v[0], v[1]), mul(mu, v[1], v[0]), -1); }},
      {"hom_associativity", 3,
       [&](const auto& v) {
         return add(mul(mu, mul(mu, v[0], v[1]), app(al, v[2])), mul(mu, app(al, v[0]), mul(mu, v[1], v[2])), -1);
       }},
  };
}

inline std::vector<Identity> lie_ids(const AlgebraPresentation& a) {
  const auto& br = a.op(ops::bracket);
  const Matrix& al = a.alpha();
  return {
      {"skew_symmetry", 2, [&](const auto& v) { return add(mul(br, v[0], v[1]), mul(br, v[1], v[0])); }},
      {"hom_jacobi", 3,
       [&](const auto& v) {
         Vec s = mul(br, app(al, v[0]), mul(br, v[1], v[2]));
         s = add(s, mul(br, app(al, v[1]), mul(br, v[2], v[0])));
         return add(s, mul(br, app(al, v[2]), mul(br, v[0], v[1])));
       }},
  };
}

inline Identity hom_poisson_compat(const AlgebraPresentation& a) {
  const auto& mu = a.op(ops::dot);
  const auto& br = a.op(ops::bracket);
  const Matrix& al = a.alpha();
  return {"hom_poisson_compatibility", 3, [&](const auto& v) {
            Vec s = mul(br, app(al, v[0]), mul(mu, v[1], v[2]));
            s = add(s, mul(mu, app(al, v[1]), mul(br, v[0], v[2])), -1);
            return add(s, mul(mu, app(al, v[2]), mul(br, v[0], v[1])), -1);
          }};
}

inline Identity transposed_leibniz(const AlgebraPresentation& a) {
  const auto& mu = a.op(ops::dot);
  const auto& br = a.op(ops::bracket);
  const Matrix& al = a.alpha();
  return {"transposed_hom_leibniz", 3, [&](const auto& v) {
            const Vec &x = v[0], &y = v[1], &z = v[2];
            Vec s = add(Vec(a.dim), mul(mu, app(al, z), mul(br, x, y)), 2);
            s = add(s, mul(br, mul(mu, z, x), app(al, y)), -1);
            return add(s, mul(br, app(al, x), mul(mu, z, y)), -1);
          }};
}

inline Identity pre_lie_id(const AlgebraPresentation& a) {
  const auto& st = a.op(ops::star);
  const Matrix& al = a.alpha();
  return {"hom_pre_lie", 3, [&](const auto& v) {
            const Vec &x = v[0], &y = v[1], &z = v[2];
            Vec s = add(mul(st, mul(st, x, y), app(al, z)), mul(st, app(al, x), mul(st, y, z)), -1);
            s = add(s, mul(st, mul(st, y, x), app(al, z)), -1);
            return add(s, mul(st, app(al, y), mul(st, x, z)));
          }};
}

inline std::vector<Identity> plp_compat(const AlgebraPresentation& a) {
  const auto& mu = a.op(ops::dot);
  const auto& st = a.op(ops::star);
  const Matrix& al = a.alpha();
  return {
      {"pre_lie_poisson_1", 3,
       [&](const auto& v) {
         return add(mul(st, mul(mu, v[0], v[1]), app(al, v[2])), mul(mu, app(al, v[0]), mul(st, v[1], v[2])), -1);
       }},
      {"pre_lie_poisson_2", 3,
       [&](const auto& v) {
         const Vec &x = v[0], &y = v[1], &z = v[2];
         Vec s = add(mul(mu, mul(st, x, y), app(al, z)), mul(mu, mul(st, y, x), app(al, z)), -1);
         s = add(s, mul(st, app(al, x), mul(mu, y, z)), -1);
         return add(s, mul(st, app(al, y), mul(mu, x, z)));
       }},
  };
}

// Every identity of the class, in the naive form.
inline std::vector<Identity> class_ids(const AlgebraPresentation& a, AlgebraClass c) {
  std::vector<Identity> out;
  auto extend = [&](std::vector<Identity> more) {
    for (auto& m : more) out.push_back(std::move(m));
  };
  switch (c) {
    case AlgebraClass::CommHomAssociative: extend(comm_assoc_ids(a)); break;
    case AlgebraClass::HomLie: extend(lie_ids(a)); break;
    case AlgebraClass::HomPoisson:
      extend(comm_assoc_ids(a));
      extend(lie_ids(a));
      out.push_back(hom_poisson_compat(a));
      break;
    case AlgebraClass::TransposedHomPoisson:
      extend(comm_assoc_ids(a));
      extend(lie_ids(a));
      out.push_back(transposed_leibniz(a));
      break;
    case AlgebraClass::HomPreLie: out.push_back(pre_lie_id(a)); break;
    case AlgebraClass::HomPreLiePoisson:
      extend(comm_assoc_ids(a));
      out.push_back(pre_lie_id(a));
      extend(plp_compat(a));
      break;
  }
  return out;
}

// True iff the identity vanishes on `trials` seeded random vector tuples.
inline bool holds_on_random(const Identity& id, std::size_t n, Rng& rng, int trials = 20) {
  for (int t = 0; t < trials; ++t) {
    std::vector<Vec> args;
    for (std::size_t k = 0; k < id.arity; ++k) args.push_back(rng.vec(n));
    if (!zero(id.residual(args))) return false;
  }
  return true;
}

inline bool class_holds_on_random(const AlgebraPresentation& a, AlgebraClass c, Rng& rng, int trials = 20) {
  for (const auto& id : class_ids(a, c))
    if (!holds_on_random(id, a.dim, rng, trials)) return false;
  return true;
}

// Evaluates the identity at basis vectors.
inline Vec at_basis(const Identity& id, std::size_t n, const std::vector<std::size_t>& tuple) {
  std::vector<Vec> args;
  for (auto i : tuple) args.push_back(basis_vec(n, i));
  return id.residual(args);
}

// Every catalog entry at three bindings (0, 1 and 3/2 for each parameter).
inline std::vector<std::pair<std::string, AlgebraPresentation>> catalog_instances() {
  std::vector<std::pair<std::string, AlgebraPresentation>> out;
  for (const auto& e : catalog_list()) {
    if (e.document.params.empty()) {
      out.emplace_back(e.id, instantiate(e.document, {}));
      continue;
    }
    for (const char* v : {"0", "1", "3/2"}) {
      ParameterBinding b;
      for (const auto& p : e.document.params) b[p] = parse_rational(v);
      out.emplace_back(e.id + "@" + v, instantiate(e.document, b));
    }
  }
  return out;
}

inline AlgebraClass class_of(const std::string& instance_id) {
  return catalog_get(instance_id.substr(0, instance_id.find('@'))).cls;
}

// Sparse random edit: one to three structure constants or twist entries
// replaced by small rationals.
inline AlgebraPresentation perturb(AlgebraPresentation a, Rng& rng) {
  std::vector<std::string> names;
  for (const auto& [name, op] : a.ops) names.push_back(name);
  const std::size_t n = a.dim;
  const std::size_t edits = 1 + rng.index(3);
  for (std::size_t e = 0; e < edits; ++e) {
    if (rng.index(5) == 0) {
      a.maps[ops::alpha](rng.index(n), rng.index(n)) = rng.rational();
      continue;
    }
    auto& mu = a.ops[names[rng.index(names.size())]];
    mu.set(rng.index(n), rng.index(n), rng.index(n), rng.rational());
  }
  return a;
}

}  // namespace fx
