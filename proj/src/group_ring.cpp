#include "holozeta/group_ring.hpp"

#include <cctype>

#include "holozeta/error.hpp"
#include "holozeta/text.hpp"

namespace holozeta {

GroupRingElt::GroupRingElt(Word const& w, Rational const& c) { add_term(w, c); }

void GroupRingElt::add_term(Word const& w, Rational const& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational GroupRingElt::coeff(Word const& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational GroupRingElt::augmentation() const {
  Rational s = 0;
  for (auto const& [w, c] : terms_) s += c;
  return s;
}

GroupRingElt& GroupRingElt::operator+=(GroupRingElt const& o) {
  for (auto const& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

GroupRingElt& GroupRingElt::operator-=(GroupRingElt const& o) {
  for (auto const& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

GroupRingElt operator*(GroupRingElt const& a, GroupRingElt const& b) {
  GroupRingElt out;
  for (auto const& [wa, ca] : a.terms_)
    for (auto const& [wb, cb] : b.terms_) out.add_term(wa * wb, ca * cb);
  return out;
}

GroupRingElt operator*(Rational const& c, GroupRingElt a) {
  if (c == 0) return {};
  for (auto& [w, x] : a.terms_) x *= c;
  return a;
}

GroupRingElt GroupRingElt::operator-() const { return Rational(-1) * *this; }

GroupRingElt fox_derivative(Word const& w, std::size_t gen) {
  GroupRingElt out;
  // Prefixes of a reduced word are reduced, so they are built incrementally.
  std::vector<Letter> prefix;
  prefix.reserve(w.size());
  for (auto const& l : w.letters()) {
    if (l.gen == gen) {
      if (l.exp > 0) {
        out += GroupRingElt(Word(prefix));
      } else {
        prefix.push_back(l);
        out -= GroupRingElt(Word(prefix));
        continue;
      }
    }
    prefix.push_back(l);
  }
  return out;
}

GroupRingElt fox_derivative(GroupRingElt const& e, std::size_t gen) {
  GroupRingElt out;
  for (auto const& [w, c] : e.terms()) out += c * fox_derivative(w, gen);
  return out;
}

std::string to_string(GroupRingElt const& e, Alphabet const& alphabet) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto const& [w, c] : e.terms()) {
    Rational mag = abs(c);
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    if (w.empty())
      out += mag.get_str();
    else if (mag == 1)
      out += to_string(w, alphabet);
    else
      out += mag.get_str() + "*" + to_string(w, alphabet);
  }
  return out;
}

GroupRingElt parse_group_ring(std::string_view text, Alphabet const& alphabet) {
  // Split into signed terms at top-level '+' / '-' that are not exponent signs.
  GroupRingElt out;
  std::size_t i = 0;
  bool first = true;
  while (true) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) {
      if (first) throw ParseError("empty group ring element");
      break;
    }
    int sign = 1;
    if (text[i] == '-' || text[i] == '+') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw ParseError("expected '+' or '-'", i);
    }
    std::size_t start = i;
    while (i < text.size() && !((text[i] == '+' || text[i] == '-') && text[i - 1] != '^' && text[i - 1] != '{' &&
                                text[i - 1] != '('))
      ++i;
    auto term = trim(text.substr(start, i - start));
    if (term.empty()) throw ParseError("empty term", start);
    Scanner s(term);
    Rational c = 1;
    if (auto q = s.unsigned_rational()) {
      c = *q;
      s.consume('*');
    }
    Word w = s.at_end() ? Word() : parse_word(s.rest(), alphabet);
    if (c == 0 && !first) throw ParseError("zero coefficient term", start);
    out += GroupRingElt(w, sign * c);
    first = false;
  }
  return out;
}

}  // namespace holozeta
