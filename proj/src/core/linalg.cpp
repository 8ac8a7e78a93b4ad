#include "core/linalg.hpp"

#include "core/error.hpp"

#include <regex>
#include <utility>

namespace hompois {

Scalar parse_rational(std::string_view text) {
  static const std::regex pattern("-?[0-9]+(/[1-9][0-9]*)?");
  std::string s(text);
  if (!std::regex_match(s, pattern)) {
    throw Error(ErrorKind::Parse, "not a rational literal: '" + s + "'");
  }
  Scalar q(s, 10);
  q.canonicalize();
  return q;
}

std::string to_string(const Scalar& s) {
  Scalar q(s);
  q.canonicalize();
  return q.get_str(10);
}

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec basis_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

static void same_length(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::Dimension, "vector length mismatch: " + std::to_string(a.size()) +
                                          " vs " + std::to_string(b.size()));
  }
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec r(a);
  r += b;
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  Vec r(a);
  r -= b;
  return r;
}

Vec operator*(const Scalar& s, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

Vec& operator+=(Vec& a, const Vec& b) {
  same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vec& operator-=(Vec& a, const Vec& b) {
  same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

void axpy(Vec& a, const Scalar& s, const Vec& b) {
  same_length(a, b);
  if (sgn(s) == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(b[i]) != 0) a[i] += s * b[i];
  }
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const Vec& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw Error(ErrorKind::Dimension, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) {
    throw Error(ErrorKind::Dimension, "cannot apply " + std::to_string(rows_) + "x" +
                                          std::to_string(cols_) + " matrix to vector of length " +
                                          std::to_string(x.size()));
  }
  Vec y(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (sgn(x[c]) == 0) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& m = (*this)(r, c);
      if (sgn(m) != 0) y[r] += m * x[c];
    }
  }
  return y;
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorKind::Dimension, "matrix product shape mismatch");
  Matrix p(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(r, k);
      if (sgn(a) == 0) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) {
        if (sgn(o(k, c)) != 0) p(r, c) += a * o(k, c);
      }
    }
  }
  return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::Dimension, "matrix sum shape mismatch");
  Matrix s(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] += o.data_[i];
  return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::Dimension, "matrix difference shape mismatch");
  Matrix s(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] -= o.data_[i];
  return s;
}

Matrix Matrix::operator-() const {
  Matrix s(*this);
  for (auto& x : s.data_) x = -x;
  return s;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
  Matrix r(m);
  for (auto& x : r.data_) x *= s;
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  if (!square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

Matrix power(const Matrix& m, unsigned long e) {
  if (!m.square()) throw Error(ErrorKind::Dimension, "power of a non-square matrix");
  Matrix result = Matrix::identity(m.rows());
  Matrix base = m;
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Scalar determinant(Matrix m) {
  if (!m.square()) throw Error(ErrorKind::Dimension, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      Scalar f = m(r, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  if (!m.square()) throw Error(ErrorKind::Dimension, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  std::vector<std::size_t> pivots;
  Matrix red = rref(aug, &pivots);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw Error(ErrorKind::Argument, "matrix is singular");
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red(r, n + c);
  return inv;
}

Matrix rref(Matrix m, std::vector<std::size_t>* pivots) {
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(row, k));
    }
    Scalar lead = m(row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(row, k) /= lead;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, c)) == 0) continue;
      Scalar f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= f * m(row, k);
    }
    piv.push_back(c);
    ++row;
  }
  if (pivots) *pivots = std::move(piv);
  return m;
}

std::vector<Vec> nullspace(const Matrix& m) {
  std::vector<std::size_t> piv;
  Matrix red = rref(m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -red(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix s(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) s(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) s(a.rows() + r, a.cols() + c) = b(r, c);
  return s;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t r1 = 0; r1 < a.rows(); ++r1)
    for (std::size_t c1 = 0; c1 < a.cols(); ++c1) {
      if (sgn(a(r1, c1)) == 0) continue;
      for (std::size_t r2 = 0; r2 < b.rows(); ++r2)
        for (std::size_t c2 = 0; c2 < b.cols(); ++c2)
          k(r1 * b.rows() + r2, c1 * b.cols() + c2) = a(r1, c1) * b(r2, c2);
    }
  return k;
}

}  // namespace hompois
