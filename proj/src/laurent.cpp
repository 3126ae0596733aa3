#include "holozeta/laurent.hpp"

#include <algorithm>

#include "holozeta/error.hpp"
#include "holozeta/text.hpp"

namespace holozeta {

LaurentPoly::LaurentPoly(Rational const& c) {
  if (c != 0) coeffs_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(Rational const& c, std::int64_t e) {
  LaurentPoly p(c);
  if (!p.is_zero()) p.low_ = e;
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<std::pair<std::int64_t, Rational>> const& terms) {
  LaurentPoly p;
  for (auto const& [e, c] : terms) p += monomial(c, e);
  return p;
}

void LaurentPoly::trim() {
  std::size_t b = 0;
  while (b < coeffs_.size() && coeffs_[b] == 0) ++b;
  if (b == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  std::size_t e = coeffs_.size();
  while (coeffs_[e - 1] == 0) --e;
  if (b > 0 || e < coeffs_.size()) {
    coeffs_ = std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(b),
                                    coeffs_.begin() + static_cast<std::ptrdiff_t>(e));
    low_ += static_cast<std::int64_t>(b);
  }
}

bool LaurentPoly::is_unit() const { return coeffs_.size() == 1; }

Rational LaurentPoly::coeff(std::int64_t e) const {
  if (is_zero() || e < low_ || e > high_degree()) return 0;
  return coeffs_[static_cast<std::size_t>(e - low_)];
}

std::vector<std::pair<std::int64_t, Rational>> LaurentPoly::terms() const {
  std::vector<std::pair<std::int64_t, Rational>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<std::int64_t>(i), coeffs_[i]);
  return out;
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](Rational const& c) { return c != 0; }));
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += k;
  return p;
}

LaurentPoly LaurentPoly::reflected() const {
  LaurentPoly p;
  if (is_zero()) return p;
  p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  p.low_ = -high_degree();
  return p;
}

Rational LaurentPoly::evaluate(Rational const& x) const {
  if (is_zero()) return 0;
  if (x == 0) {
    if (low_ < 0) throw ValidationError("negative power evaluated at t = 0");
    return coeff(0);
  }
  Rational acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  Rational scale = 1;
  Rational base = low_ >= 0 ? x : Rational(1 / x);
  for (std::int64_t k = 0; k < (low_ >= 0 ? low_ : -low_); ++k) scale *= base;
  return acc * scale;
}

LaurentPoly& LaurentPoly::operator+=(LaurentPoly const& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  auto lo = std::min(low_, o.low_);
  auto hi = std::max(high_degree(), o.high_degree());
  std::vector<Rational> c(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[static_cast<std::size_t>(low_ - lo) + i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    c[static_cast<std::size_t>(o.low_ - lo) + i] += o.coeffs_[i];
  coeffs_ = std::move(c);
  low_ = lo;
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(LaurentPoly const& o) { return *this += -o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

LaurentPoly operator*(LaurentPoly const& a, LaurentPoly const& b) {
  LaurentPoly p;
  if (a.is_zero() || b.is_zero()) return p;
  p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  p.low_ = a.low_ + b.low_;
  p.trim();
  return p;
}

LaurentPoly LaurentPoly::exact_div(LaurentPoly const& divisor) const {
  if (divisor.is_zero()) throw ValidationError("division by zero polynomial");
  if (is_zero()) return {};
  // Long division from the top; both operands are shifted to start at t^0.
  std::vector<Rational> rem = coeffs_;
  auto const& d = divisor.coeffs_;
  if (rem.size() < d.size()) throw ValidationError("inexact polynomial division");
  std::vector<Rational> q(rem.size() - d.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational c = rem[k + d.size() - 1] / d.back();
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= c * d[j];
  }
  for (auto const& r : rem)
    if (r != 0) throw ValidationError("inexact polynomial division");
  LaurentPoly out;
  out.coeffs_ = std::move(q);
  out.low_ = low_ - divisor.low_;
  out.trim();
  return out;
}

std::optional<LaurentPoly> LaurentPoly::unit_inverse() const {
  if (!is_unit()) return std::nullopt;
  return monomial(Rational(1 / coeffs_[0]), -low_);
}

LaurentPoly unit_part(LaurentPoly const& p) {
  if (p.is_zero()) throw ValidationError("zero has no unit normal form");
  return LaurentPoly::monomial(p.coeff(p.low_degree()), p.low_degree());
}

LaurentPoly normalize_up_to_units(LaurentPoly const& p) {
  auto u = unit_part(p);
  return p * *u.unit_inverse();
}

bool equal_up_to_units(LaurentPoly const& a, LaurentPoly const& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return normalize_up_to_units(a) == normalize_up_to_units(b);
}

std::string to_string(LaurentPoly const& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto const& [e, c] : p.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "t";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

std::int64_t parse_exponent(Scanner& s) {
  if (s.consume('{')) {
    auto e = s.integer();
    if (!e) s.fail("expected exponent");
    s.expect('}');
    return *e;
  }
  if (s.consume('(')) {
    auto e = s.integer();
    if (!e) s.fail("expected exponent");
    s.expect(')');
    return *e;
  }
  auto e = s.integer();
  if (!e) s.fail("expected exponent");
  return *e;
}

}  // namespace

LaurentPoly parse_laurent(std::string_view text) {
  Scanner s(text);
  LaurentPoly out;
  bool first = true;
  while (true) {
    int sign = 1;
    if (s.consume('-')) {
      sign = -1;
    } else if (!s.consume('+') && !first) {
      break;
    }
    if (s.at_end()) s.fail("expected term");
    Rational c = 1;
    bool have_coeff = false;
    if (auto q = s.unsigned_rational()) {
      c = *q;
      have_coeff = true;
    }
    std::int64_t e = 0;
    bool star = have_coeff && s.consume('*');
    if (s.peek() == 't') {
      s.consume('t');
      e = 1;
      if (s.consume('^')) e = parse_exponent(s);
    } else if (!have_coeff || star) {
      s.fail("expected coefficient or 't'");
    }
    out += LaurentPoly::monomial(sign * c, e);
    first = false;
  }
  if (!s.at_end()) s.fail("unexpected character '" + std::string(1, s.peek()) + "'");
  return out;
}

}  // namespace holozeta
