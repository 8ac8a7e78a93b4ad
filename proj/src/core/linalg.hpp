#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace hompois {

using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

// Parses a rational literal of the form -?[0-9]+(/[1-9][0-9]*)? and returns it
// in lowest terms. Throws Error(Parse) on anything else.
Scalar parse_rational(std::string_view text);
// Lowest-terms rendering, "p/q" or "p".
std::string to_string(const Scalar& s);

Vec zero_vec(std::size_t n);
Vec basis_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& s, const Vec& v);
Vec& operator+=(Vec& a, const Vec& b);
Vec& operator-=(Vec& a, const Vec& b);
// a += s * b
void axpy(Vec& a, const Scalar& s, const Vec& b);

/// Dense rational matrix. Column c holds the image of basis vector c.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const Vec& d);
  static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec apply(const Vec& x) const;
  Vec column(std::size_t c) const;
  Matrix transpose() const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  friend Matrix operator*(const Scalar& s, const Matrix& m);

  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const Matrix& o) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix power(const Matrix& m, unsigned long e);
Scalar determinant(Matrix m);
// Throws Error(Argument) when m is singular or not square.
Matrix inverse(const Matrix& m);

// Reduced row echelon form; pivot columns chosen left to right.
Matrix rref(Matrix m, std::vector<std::size_t>* pivots = nullptr);
// Basis of the kernel, one vector per free column, read off the rref.
std::vector<Vec> nullspace(const Matrix& m);

// Block diagonal a ⊕ b.
Matrix direct_sum(const Matrix& a, const Matrix& b);
// Kronecker product under the (i, j) -> i * b.rows + j ordering.
Matrix kronecker(const Matrix& a, const Matrix& b);

}  // namespace hompois
