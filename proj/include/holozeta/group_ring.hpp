#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "holozeta/rational.hpp"
#include "holozeta/word.hpp"

namespace holozeta {

// Element of the rational group ring of a free group: a finite sum of reduced
// words with nonzero rational coefficients.
class GroupRingElt {
 public:
  GroupRingElt() = default;
  explicit GroupRingElt(Word const& w, Rational const& c = 1);
  static GroupRingElt one() { return GroupRingElt(Word()); }
  static GroupRingElt constant(Rational const& c) { return GroupRingElt(Word(), c); }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::map<Word, Rational> const& terms() const noexcept { return terms_; }
  Rational coeff(Word const& w) const;
  // Sum of coefficients (image under the trivial representation).
  Rational augmentation() const;

  GroupRingElt& operator+=(GroupRingElt const& o);
  GroupRingElt& operator-=(GroupRingElt const& o);
  friend GroupRingElt operator+(GroupRingElt a, GroupRingElt const& b) { return a += b; }
  friend GroupRingElt operator-(GroupRingElt a, GroupRingElt const& b) { return a -= b; }
  friend GroupRingElt operator*(GroupRingElt const& a, GroupRingElt const& b);
  friend GroupRingElt operator*(Rational const& c, GroupRingElt a);
  GroupRingElt operator-() const;
  friend bool operator==(GroupRingElt const&, GroupRingElt const&) = default;

 private:
  void add_term(Word const& w, Rational const& c);
  std::map<Word, Rational> terms_;
};

// Fox derivative d w / d x_gen, computed from prefixes:
// d(uv) = du + u dv, d x = 1, d x^-1 = -x^-1.
GroupRingElt fox_derivative(Word const& w, std::size_t gen);
GroupRingElt fox_derivative(GroupRingElt const& e, std::size_t gen);

// Terms like "1 - x1 x2 x1^-1 + 2*x3"; "0" is zero.
std::string to_string(GroupRingElt const& e, Alphabet const& alphabet);
GroupRingElt parse_group_ring(std::string_view text, Alphabet const& alphabet);

}  // namespace holozeta
