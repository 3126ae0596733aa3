#include "holozeta/series.hpp"

#include <algorithm>

#include "holozeta/error.hpp"

namespace holozeta {

TruncatedSeries TruncatedSeries::one(std::size_t order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::from_coefficients(std::vector<LaurentPoly> const& c, std::size_t order) {
  TruncatedSeries s(order);
  for (std::size_t k = 0; k < std::min(c.size(), order + 1); ++k) s.coeffs_[k] = c[k];
  return s;
}

TruncatedSeries operator*(TruncatedSeries const& a, TruncatedSeries const& b) {
  if (a.order() != b.order()) throw DimensionError("series orders differ");
  TruncatedSeries c(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= a.order(); ++j)
      if (!b.coeffs_[j].is_zero()) c.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return c;
}

TruncatedSeries operator+(TruncatedSeries const& a, TruncatedSeries const& b) {
  if (a.order() != b.order()) throw DimensionError("series orders differ");
  TruncatedSeries c = a;
  for (std::size_t k = 0; k <= a.order(); ++k) c.coeffs_[k] += b.coeffs_[k];
  return c;
}

TruncatedSeries TruncatedSeries::inverse() const {
  auto c0inv = coeffs_[0].unit_inverse();
  if (!c0inv) throw ValidationError("series constant term is not a unit");
  TruncatedSeries r(order());
  r.coeffs_[0] = *c0inv;
  for (std::size_t n = 1; n <= order(); ++n) {
    LaurentPoly acc;
    for (std::size_t k = 1; k <= n; ++k)
      if (!coeffs_[k].is_zero() && !r.coeffs_[n - k].is_zero()) acc += coeffs_[k] * r.coeffs_[n - k];
    if (!acc.is_zero()) r.coeffs_[n] = -(acc * *c0inv);
  }
  return r;
}

TruncatedSeries TruncatedSeries::exp() const {
  if (!coeffs_[0].is_zero()) throw ValidationError("exp of series with nonzero constant term");
  // E' = S' E gives n E_n = sum_k k S_k E_{n-k}.
  TruncatedSeries e(order());
  e.coeffs_[0] = 1;
  for (std::size_t n = 1; n <= order(); ++n) {
    LaurentPoly acc;
    for (std::size_t k = 1; k <= n; ++k)
      if (!coeffs_[k].is_zero())
        acc += LaurentPoly(Rational(static_cast<long>(k))) * coeffs_[k] * e.coeffs_[n - k];
    e.coeffs_[n] = LaurentPoly(Rational(1, static_cast<long>(n))) * acc;
  }
  return e;
}

TruncatedSeries series_det_inverse(PolyMatrix const& m, std::size_t order) {
  if (!m.is_square()) throw DimensionError("series_det_inverse needs a square matrix");
  TruncatedSeries log_series(order);
  PolyMatrix power = PolyMatrix::identity(m.rows());
  for (std::size_t k = 1; k <= order; ++k) {
    power = power * m;
    log_series[k] = LaurentPoly(Rational(1, static_cast<long>(k))) * power.trace();
  }
  return log_series.exp();
}

}  // namespace holozeta
