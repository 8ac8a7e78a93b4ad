#include "core/presentation.hpp"

#include "core/error.hpp"

#include <set>

namespace hompois {

static void check_len(const Vec& x, std::size_t n, const char* what) {
  if (x.size() != n) {
    throw Error(ErrorKind::Dimension, std::string(what) + ": expected length " + std::to_string(n) +
                                          ", got " + std::to_string(x.size()));
  }
}

Vec BilinearMap::product(std::size_t i, std::size_t j) const {
  Vec r(dim_);
  for (std::size_t k = 0; k < dim_; ++k) r[k] = at(i, j, k);
  return r;
}

Vec BilinearMap::apply(const Vec& x, const Vec& y) const {
  check_len(x, dim_, "bilinear map argument");
  check_len(y, dim_, "bilinear map argument");
  Vec r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        const Scalar& c = at(i, j, k);
        if (sgn(c) != 0) r[k] += xy * c;
      }
    }
  }
  return r;
}

Matrix BilinearMap::left(const Vec& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec col = apply(x, basis_vec(dim_, j));
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = col[k];
  }
  return m;
}

Matrix BilinearMap::right(const Vec& y) const {
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    Vec col = apply(basis_vec(dim_, i), y);
    for (std::size_t k = 0; k < dim_; ++k) m(k, i) = col[k];
  }
  return m;
}

bool BilinearMap::is_zero() const {
  for (const auto& c : c_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

std::vector<TensorEntry> BilinearMap::entries() const {
  std::vector<TensorEntry> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (sgn(at(i, j, k)) != 0) out.push_back({i, j, k, at(i, j, k)});
  return out;
}

BilinearMap compose(const Matrix& g, const BilinearMap& op) {
  const std::size_t n = op.dim();
  if (g.rows() != n || g.cols() != n) throw Error(ErrorKind::Dimension, "composition with a map of the wrong shape");
  BilinearMap out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec v = g.apply(op.product(i, j));
      for (std::size_t k = 0; k < n; ++k) out.set(i, j, k, v[k]);
    }
  return out;
}

BilinearMap operator+(const BilinearMap& a, const BilinearMap& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::Dimension, "sum of bilinear maps of different dimension");
  BilinearMap out(a);
  for (const auto& e : b.entries()) out.add(e.i, e.j, e.k, e.c);
  return out;
}

BilinearMap operator-(const BilinearMap& a, const BilinearMap& b) { return a + Scalar(-1) * b; }

BilinearMap operator*(const Scalar& s, const BilinearMap& a) {
  BilinearMap out(a.dim());
  for (const auto& e : a.entries()) out.set(e.i, e.j, e.k, s * e.c);
  return out;
}

BilinearMap opposite(const BilinearMap& op) {
  BilinearMap out(op.dim());
  for (const auto& e : op.entries()) out.set(e.j, e.i, e.k, e.c);
  return out;
}

Matrix as_matrix(const BilinearMap& op) {
  const std::size_t n = op.dim();
  Matrix m(n, n * n);
  for (const auto& e : op.entries()) m(e.k, e.i * n + e.j) = e.c;
  return m;
}

BilinearMap from_matrix(const Matrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n * n) throw Error(ErrorKind::Dimension, "product matrix must be n x n^2");
  BilinearMap out(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t c = 0; c < n * n; ++c)
      if (sgn(m(k, c)) != 0) out.set(c / n, c % n, k, m(k, c));
  return out;
}

std::vector<std::string> default_basis(std::size_t dim, const std::string& prefix) {
  std::vector<std::string> b;
  for (std::size_t i = 0; i < dim; ++i) b.push_back(prefix + std::to_string(i + 1));
  return b;
}

std::vector<std::string> concat_basis(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  out.insert(out.end(), b.begin(), b.end());
  std::set<std::string> seen(out.begin(), out.end());
  if (seen.size() != out.size()) return default_basis(out.size());
  return out;
}

const BilinearMap& AlgebraPresentation::op(const std::string& name) const {
  auto it = ops.find(name);
  if (it == ops.end()) throw Error(ErrorKind::Missing, "missing op '" + name + "'");
  return it->second;
}

const Matrix& AlgebraPresentation::map(const std::string& name) const {
  auto it = maps.find(name);
  if (it == maps.end()) throw Error(ErrorKind::Missing, "missing map '" + name + "'");
  return it->second;
}

void AlgebraPresentation::validate() const {
  if (!basis.empty() && basis.size() != dim) throw Error(ErrorKind::Dimension, "basis has the wrong length");
  for (const auto& [name, op] : ops) {
    if (op.dim() != dim) throw Error(ErrorKind::Dimension, "op '" + name + "' has the wrong dimension");
  }
  for (const auto& [name, m] : maps) {
    if (m.rows() != dim || m.cols() != dim) {
      throw Error(ErrorKind::Dimension, "map '" + name + "' is not " + std::to_string(dim) + "x" + std::to_string(dim));
    }
  }
}

const std::vector<Matrix>& ModulePresentation::action(const std::string& name) const {
  auto it = actions.find(name);
  if (it == actions.end()) throw Error(ErrorKind::Missing, "missing action '" + name + "'");
  return it->second;
}

Matrix ModulePresentation::act(const std::string& name, const Vec& x) const {
  const auto& fam = action(name);
  check_len(x, algebra_dim, "action argument");
  Matrix m(module_dim, module_dim);
  for (std::size_t i = 0; i < algebra_dim; ++i) {
    if (sgn(x[i]) != 0) m = m + x[i] * fam[i];
  }
  return m;
}

void ModulePresentation::validate() const {
  if (!basis.empty() && basis.size() != module_dim) throw Error(ErrorKind::Dimension, "module basis has the wrong length");
  if (beta.rows() != module_dim || beta.cols() != module_dim) throw Error(ErrorKind::Dimension, "beta has the wrong shape");
  for (const auto& [name, fam] : actions) {
    if (fam.size() != algebra_dim) {
      throw Error(ErrorKind::Dimension, "action '" + name + "' needs " + std::to_string(algebra_dim) + " matrices");
    }
    for (const auto& m : fam) {
      if (m.rows() != module_dim || m.cols() != module_dim) {
        throw Error(ErrorKind::Dimension, "action '" + name + "' matrix has the wrong shape");
      }
    }
  }
}

Vec Comultiplication::apply(const Vec& x) const {
  const std::size_t n = dim();
  check_len(x, n, "comultiplication argument");
  Vec t(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(at(i, j, k)) != 0) t[j * n + k] += x[i] * at(i, j, k);
  }
  return t;
}

const Comultiplication& Coalgebra::coop(const std::string& name) const {
  auto it = coops.find(name);
  if (it == coops.end()) throw Error(ErrorKind::Missing, "missing comultiplication '" + name + "'");
  return it->second;
}

Vec tensor_apply(const Matrix& f, const Matrix& g, const Vec& t) {
  if (t.size() != f.cols() * g.cols()) throw Error(ErrorKind::Dimension, "tensor length mismatch");
  return kronecker(f, g).apply(t);
}

Vec tensor_vec(const Vec& x, const Vec& y) {
  Vec t(x.size() * y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) t[i * y.size() + j] = x[i] * y[j];
  }
  return t;
}

}  // namespace hompois
