#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "holozeta/laurent.hpp"
#include "holozeta/rational.hpp"

namespace holozeta {

// Dense rational matrix, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static QMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Rational const& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend QMatrix operator*(QMatrix const& a, QMatrix const& b);
  friend bool operator==(QMatrix const& a, QMatrix const& b) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

// Gauss-Jordan inverse; nullopt when singular. Throws DimensionError if not square.
std::optional<QMatrix> inverse(QMatrix const& m);
Rational det(QMatrix const& m);

// Dense matrix of Laurent polynomials, row-major.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static PolyMatrix identity(std::size_t n);
  static PolyMatrix scalar(LaurentPoly const& p) {
    PolyMatrix m(1, 1);
    m(0, 0) = p;
    return m;
  }
  // rho * t^alpha.
  static PolyMatrix from_rational(QMatrix const& rho, std::int64_t alpha = 0);
  static PolyMatrix from_rows(std::vector<std::vector<LaurentPoly>> const& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  LaurentPoly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  LaurentPoly const& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  LaurentPoly trace() const;
  PolyMatrix transposed() const;
  // Copies m into this matrix with its top-left corner at (r0, c0).
  void set_block(std::size_t r0, std::size_t c0, PolyMatrix const& m);
  PolyMatrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;
  // Removes one row and one column.
  PolyMatrix minor_matrix(std::size_t row, std::size_t col) const;

  PolyMatrix& operator+=(PolyMatrix const& o);
  PolyMatrix& operator-=(PolyMatrix const& o);
  friend PolyMatrix operator+(PolyMatrix a, PolyMatrix const& b) { return a += b; }
  friend PolyMatrix operator-(PolyMatrix a, PolyMatrix const& b) { return a -= b; }
  friend PolyMatrix operator*(PolyMatrix const& a, PolyMatrix const& b);
  friend PolyMatrix operator*(LaurentPoly const& s, PolyMatrix m);
  PolyMatrix operator-() const;
  friend bool operator==(PolyMatrix const& a, PolyMatrix const& b) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<LaurentPoly> data_;
};

// Fraction-free Gaussian elimination over Q[t] after clearing negative powers
// row by row. The empty matrix has determinant 1.
LaurentPoly det(PolyMatrix const& m);
// Laplace expansion along the first row; exponential cost, kept as a cross-check.
LaurentPoly det_cofactor(PolyMatrix const& m);
// Inverse when det is a unit of Q[t, 1/t]; nullopt otherwise.
std::optional<PolyMatrix> inverse(PolyMatrix const& m);
// Coefficients c_0..c_n of det(I - s*W) as a polynomial in s.
std::vector<LaurentPoly> det_one_minus_coefficients(PolyMatrix const& w);

// "[[a, b], [c, d]]"; a bare polynomial is read as a 1x1 matrix.
std::string to_string(PolyMatrix const& m);
PolyMatrix parse_poly_matrix(std::string_view text);
std::string to_string(QMatrix const& m);
QMatrix parse_rational_matrix(std::string_view text);

}  // namespace holozeta
