#pragma once

#include <cstddef>
#include <vector>

#include "holozeta/laurent.hpp"
#include "holozeta/matrix.hpp"

namespace holozeta {

// Power series in an auxiliary variable u with Laurent-polynomial
// coefficients, truncated after u^order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}
  static TruncatedSeries one(std::size_t order);
  // Coefficients beyond the order are dropped.
  static TruncatedSeries from_coefficients(std::vector<LaurentPoly> const& c, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  LaurentPoly const& operator[](std::size_t k) const { return coeffs_[k]; }
  LaurentPoly& operator[](std::size_t k) { return coeffs_[k]; }

  // Requires the constant term to be a unit.
  TruncatedSeries inverse() const;
  // Requires a zero constant term.
  TruncatedSeries exp() const;

  friend TruncatedSeries operator*(TruncatedSeries const& a, TruncatedSeries const& b);
  friend TruncatedSeries operator+(TruncatedSeries const& a, TruncatedSeries const& b);
  friend bool operator==(TruncatedSeries const& a, TruncatedSeries const& b) = default;

 private:
  std::vector<LaurentPoly> coeffs_;
};

// 1 / det(I - u M) through u^order, via exp(sum_k tr(M^k) u^k / k).
TruncatedSeries series_det_inverse(PolyMatrix const& m, std::size_t order);

}  // namespace holozeta
