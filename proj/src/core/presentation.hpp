#pragma once

#include "core/linalg.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace hompois {

namespace ops {
inline const std::string dot = "dot";
inline const std::string bracket = "bracket";
inline const std::string star = "star";
inline const std::string alpha = "alpha";
}  // namespace ops

namespace acts {
inline const std::string s = "s";
inline const std::string rho = "rho";
inline const std::string l = "l";
inline const std::string r = "r";
}  // namespace acts

struct TensorEntry {
  std::size_t i, j, k;
  Scalar c;
};

/// Structure constants op(e_i, e_j) = sum_k c(i, j, k) e_k, stored densely.
class BilinearMap {
 public:
  explicit BilinearMap(std::size_t dim = 0) : dim_(dim), c_(dim * dim * dim) {}

  std::size_t dim() const { return dim_; }
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const { return c_[idx(i, j, k)]; }
  void set(std::size_t i, std::size_t j, std::size_t k, const Scalar& v) { c_[idx(i, j, k)] = v; }
  void add(std::size_t i, std::size_t j, std::size_t k, const Scalar& v) { c_[idx(i, j, k)] += v; }

  Vec product(std::size_t i, std::size_t j) const;
  Vec apply(const Vec& x, const Vec& y) const;
  // Matrix of y -> op(x, y), resp. x -> op(x, y).
  Matrix left(const Vec& x) const;
  Matrix right(const Vec& y) const;

  bool is_zero() const;
  std::vector<TensorEntry> entries() const;  // nonzero, lexicographic
  bool operator==(const BilinearMap& o) const = default;

 private:
  std::size_t idx(std::size_t i, std::size_t j, std::size_t k) const { return (i * dim_ + j) * dim_ + k; }
  std::size_t dim_;
  std::vector<Scalar> c_;
};

// g ∘ op.
BilinearMap compose(const Matrix& g, const BilinearMap& op);
BilinearMap operator+(const BilinearMap& a, const BilinearMap& b);
BilinearMap operator-(const BilinearMap& a, const BilinearMap& b);
BilinearMap operator*(const Scalar& s, const BilinearMap& a);
// (x, y) -> op(y, x)
BilinearMap opposite(const BilinearMap& op);
// x ⊗ y -> op(x, y) as a dim × dim² matrix (column i * dim + j).
Matrix as_matrix(const BilinearMap& op);
// Inverse of as_matrix.
BilinearMap from_matrix(const Matrix& m);

std::vector<std::string> default_basis(std::size_t dim, const std::string& prefix = "e");
// Names for a direct sum; falls back to e1..en when the halves collide.
std::vector<std::string> concat_basis(const std::vector<std::string>& a, const std::vector<std::string>& b);

struct AlgebraPresentation {
  std::size_t dim = 0;
  std::vector<std::string> basis;
  std::map<std::string, BilinearMap> ops;
  std::map<std::string, Matrix> maps;

  AlgebraPresentation() = default;
  explicit AlgebraPresentation(std::size_t d) : dim(d), basis(default_basis(d)) {}

  bool has_op(const std::string& name) const { return ops.count(name) != 0; }
  bool has_map(const std::string& name) const { return maps.count(name) != 0; }
  const BilinearMap& op(const std::string& name) const;
  const Matrix& map(const std::string& name) const;
  const Matrix& alpha() const { return map(ops::alpha); }

  // Shape consistency of every op and square map; throws Dimension.
  void validate() const;
  bool operator==(const AlgebraPresentation& o) const = default;
};

/// Action families indexed by algebra basis: actions[name][i] is the matrix of
/// name(e_i) on the module.
struct ModulePresentation {
  std::size_t algebra_dim = 0;
  std::size_t module_dim = 0;
  std::vector<std::string> basis;
  std::map<std::string, std::vector<Matrix>> actions;
  Matrix beta;

  ModulePresentation() = default;
  ModulePresentation(std::size_t adim, std::size_t mdim)
      : algebra_dim(adim), module_dim(mdim), basis(default_basis(mdim, "v")), beta(Matrix::identity(mdim)) {}

  bool has_action(const std::string& name) const { return actions.count(name) != 0; }
  const std::vector<Matrix>& action(const std::string& name) const;
  // name(x) for an algebra vector x.
  Matrix act(const std::string& name, const Vec& x) const;

  void validate() const;
  bool operator==(const ModulePresentation& o) const = default;
};

/// Δ(e_i) = sum_{j,k} c(i, j, k) e_j ⊗ e_k. Tensors in A ⊗ A are vectors of
/// length dim² indexed by j * dim + k.
class Comultiplication {
 public:
  explicit Comultiplication(std::size_t dim = 0) : c_(dim) {}
  explicit Comultiplication(BilinearMap c) : c_(std::move(c)) {}

  std::size_t dim() const { return c_.dim(); }
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const { return c_.at(i, j, k); }
  void set(std::size_t i, std::size_t j, std::size_t k, const Scalar& v) { c_.set(i, j, k, v); }
  Vec apply(const Vec& x) const;
  const BilinearMap& coefficients() const { return c_; }
  bool operator==(const Comultiplication& o) const = default;

 private:
  BilinearMap c_;
};

struct Coalgebra {
  std::size_t dim = 0;
  std::map<std::string, Comultiplication> coops;  // canonical: "delta", "Delta"
  const Comultiplication& coop(const std::string& name) const;
};

// (f ⊗ g) applied to a tensor of length rows(f)... with the j * dim + k layout.
Vec tensor_apply(const Matrix& f, const Matrix& g, const Vec& t);
Vec tensor_vec(const Vec& x, const Vec& y);

}  // namespace hompois
