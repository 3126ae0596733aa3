#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "holozeta/rational.hpp"

namespace holozeta {

// Laurent polynomial in one variable t over the rationals.
//
// Stored densely from the lowest nonzero exponent; both end coefficients are
// nonzero, and the zero polynomial has no coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(Rational const& c);  // NOLINT: constants convert implicitly
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT
  LaurentPoly(int c) : LaurentPoly(Rational(c)) {}   // NOLINT

  static LaurentPoly monomial(Rational const& c, std::int64_t e);
  static LaurentPoly t(std::int64_t e = 1) { return monomial(1, e); }
  static LaurentPoly from_terms(std::vector<std::pair<std::int64_t, Rational>> const& terms);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // Exactly one nonzero term, i.e. a unit of Q[t, 1/t].
  bool is_unit() const;
  bool is_constant() const { return is_zero() || (low_ == 0 && coeffs_.size() == 1); }

  // Exponent range; undefined for the zero polynomial.
  std::int64_t low_degree() const { return low_; }
  std::int64_t high_degree() const { return low_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }

  Rational coeff(std::int64_t e) const;
  std::vector<std::pair<std::int64_t, Rational>> terms() const;
  std::size_t term_count() const;

  // Multiplies by t^k.
  LaurentPoly shifted(std::int64_t k) const;
  // Substitutes t -> 1/t.
  LaurentPoly reflected() const;
  // Evaluates at a rational point; t = 0 is rejected if negative powers occur.
  Rational evaluate(Rational const& x) const;

  // Exact quotient; throws ValidationError if the divisor does not divide.
  LaurentPoly exact_div(LaurentPoly const& divisor) const;
  // Inverse in Q[t, 1/t] when this is a unit.
  std::optional<LaurentPoly> unit_inverse() const;

  LaurentPoly& operator+=(LaurentPoly const& o);
  LaurentPoly& operator-=(LaurentPoly const& o);
  LaurentPoly& operator*=(LaurentPoly const& o) { return *this = *this * o; }
  friend LaurentPoly operator+(LaurentPoly a, LaurentPoly const& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, LaurentPoly const& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly const& a, LaurentPoly const& b);
  LaurentPoly operator-() const;
  friend bool operator==(LaurentPoly const& a, LaurentPoly const& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();

  std::int64_t low_ = 0;
  std::vector<Rational> coeffs_;
};

// Representative of p modulo units: lowest exponent 0, lowest coefficient 1.
// Throws ValidationError for zero.
LaurentPoly normalize_up_to_units(LaurentPoly const& p);
// Unit u with p == u * normalize_up_to_units(p).
LaurentPoly unit_part(LaurentPoly const& p);
bool equal_up_to_units(LaurentPoly const& a, LaurentPoly const& b);

// Terms in ascending exponent order, e.g. "1 - t + t^2", "-1/2*t^-1 + 3".
std::string to_string(LaurentPoly const& p);
// Accepts the output of to_string plus "t^{-1}", "3t", "3 t^2" and "+t".
LaurentPoly parse_laurent(std::string_view text);

}  // namespace holozeta
