#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "holozeta/knot.hpp"
#include "holozeta/laurent.hpp"
#include "holozeta/weighted_graph.hpp"

namespace holozeta {

using QuandleTable = std::vector<std::vector<std::size_t>>;

// A failed condition and the elements where it fails.
struct Violation {
  std::string condition;
  std::vector<std::size_t> elements;
  friend bool operator==(Violation const&, Violation const&) = default;
};

// "(cond=3a, a=0, b=1, c=2)".
std::string to_string(Violation const& v);

// Every failure of the quandle axioms: "1" a*a = a, "2" right translations
// bijective, "3" (a*b)*c = (a*c)*(b*c). Entries out of range fail "range".
std::vector<Violation> quandle_violations(QuandleTable const& table);

// Finite quandle with a*b = table[a][b] and the inverse operation.
class FiniteQuandle {
 public:
  // Throws ValidationError naming the first violation.
  explicit FiniteQuandle(QuandleTable table);
  // a*b = 2b - a mod n.
  static FiniteQuandle dihedral(std::size_t n);
  // a*b = a.
  static FiniteQuandle trivial(std::size_t n);

  std::size_t size() const noexcept { return table_.size(); }
  std::size_t op(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inv(std::size_t a, std::size_t b) const { return inverse_[a][b]; }
  QuandleTable const& table() const noexcept { return table_; }

 private:
  QuandleTable table_, inverse_;
};

// n x n table of Laurent polynomials indexed by quandle elements.
using PolyTable = std::vector<std::vector<LaurentPoly>>;

struct AlexanderPair {
  PolyTable f1, f2;
  friend bool operator==(AlexanderPair const&, AlexanderPair const&) = default;
};

// f1 = u and f2 = 1 - u everywhere.
AlexanderPair constant_pair(std::size_t n, LaurentPoly const& u);
// f1(a,b) -> l(a*b)^-1 f1(a,b) l(a), f2(a,b) -> l(a*b)^-1 f2(a,b) l(b) for
// units l(a); maps Alexander pairs to Alexander pairs.
AlexanderPair twist_pair(FiniteQuandle const& q, AlexanderPair const& f, std::vector<LaurentPoly> const& lambda);

// Conditions "1" f1(a,a) + f2(a,a) = 1, "2" f1(a,b) a unit, and for all a,b,c
//   "3a" f1(a*b,c) f1(a,b) = f1(a*c,b*c) f1(a,c)
//   "3b" f1(a*b,c) f2(a,b) = f2(a*c,b*c) f1(b,c)
//   "3c" f2(a*b,c) = f1(a*c,b*c) f2(a,c) + f2(a*c,b*c) f2(b,c).
// Shape mismatches are reported as "shape".
std::vector<Violation> alexander_pair_violations(FiniteQuandle const& q, AlexanderPair const& f);
// Throws ValidationError naming the first violation.
void alexander_pair_check(FiniteQuandle const& q, AlexanderPair const& f);

// (a,x) * (b,y) = (a*b, f1(a,b) x + f2(a,b) y).
std::pair<std::size_t, LaurentPoly> derived_star(FiniteQuandle const& q, AlexanderPair const& f,
                                                 std::pair<std::size_t, LaurentPoly> const& p,
                                                 std::pair<std::size_t, LaurentPoly> const& r);

// Edge weights at a crossing with incoming under arc coloured a and over arc
// coloured b: the under arc feeds its continuation with g1(a,b) and the over
// arc with g2(a,b), for positive (pos) and negative (neg) crossings.
struct CrossingWeights {
  PolyTable g1_pos, g2_pos, g1_neg, g2_neg;
  friend bool operator==(CrossingWeights const&, CrossingWeights const&) = default;
};

// g1+ = f1^-1, g2+ = -f1^-1 f2, g1-(a,b) = f1(a*^-1 b, b), g2-(a,b) = f2(a*^-1 b, b).
// Throws ValidationError if an f1 entry is not a unit.
CrossingWeights f_twisted_weights(FiniteQuandle const& q, AlexanderPair const& f);

// Every instance of the conditions under which the Reidemeister moves leave
// the zeta function of the coloured graph unchanged, over all a, b, c:
//   "A"  g1-(a,a) + g2-(a,a) = 1
//   "B1" g1+(a,b) g1-(a*b,b) = 1
//   "B2" g2+(a,b) + g1+(a,b) g2-(a*b,b) = 0
//   "B3" g1-(a,b) g1+(a*^-1 b,b) = 1
//   "B4" g2-(a,b) + g1-(a,b) g2+(a*^-1 b,b) = 0
//   "C1" g1+(a,b) g1+(a*b,c) = g1+(a,c) g1+(a*c,b*c)
//   "C2" g2+(a,b) g1+(b,c) = g1+(a,c) g2+(a*c,b*c)
//   "C3" g1+(a,b) g2+(a*b,c) + g2+(a,b) g2+(b,c) = g2+(a,c)
std::vector<Violation> holonomy_violations(FiniteQuandle const& q, CrossingWeights const& g);

// f1(a,b) = g1-(a*b,b), f2(a,b) = g2-(a*b,b). Throws ValidationError if the
// holonomy conditions fail.
AlexanderPair recover_pair(FiniteQuandle const& q, CrossingWeights const& g);

// Colour of each arc, indexed like arc_names(d).
using Coloring = std::vector<std::size_t>;

// The colour leaving a crossing is in * over at positive crossings and
// in *^-1 over at negative ones. Returns the first crossing that fails.
std::optional<std::size_t> coloring_violation(FiniteQuandle const& q, KnotDiagram const& d, Coloring const& c);
// All colourings in lexicographic order.
std::vector<Coloring> enumerate_colorings(FiniteQuandle const& q, KnotDiagram const& d);

// One vertex per arc; every crossing but the last adds the edges
// in -> out with weight g1 and in -> over with weight g2.
MatrixGraph quandle_weighted_graph(FiniteQuandle const& q, KnotDiagram const& d, Coloring const& c,
                                   CrossingWeights const& g);

// Serial versions of the exhaustive searches.
namespace reference {
std::vector<Violation> alexander_pair_violations(FiniteQuandle const& q, AlexanderPair const& f);
std::vector<Violation> holonomy_violations(FiniteQuandle const& q, CrossingWeights const& g);
std::vector<Coloring> enumerate_colorings(FiniteQuandle const& q, KnotDiagram const& d);
}  // namespace reference

// Text forms. A quandle is its size followed by the rows of its table:
//   3
//   0 2 1
//   2 1 0
//   1 0 2
// Polynomial tables are labelled blocks of rows with entries separated by ';':
//   f1:
//   t; t
//   t; t
//   f2:
//   1 - t; 1 - t
//   1 - t; 1 - t
// Weights use the labels g1+, g2+, g1-, g2-.
// Reads the table without checking the axioms.
QuandleTable parse_quandle_table(std::string_view text);
FiniteQuandle parse_quandle(std::string_view text);
std::string to_string(FiniteQuandle const& q);
AlexanderPair parse_alexander_pair(std::string_view text);
std::string to_string(AlexanderPair const& f);
CrossingWeights parse_crossing_weights(std::string_view text);
std::string to_string(CrossingWeights const& g);
std::string to_string(Coloring const& c, KnotDiagram const& d);

}  // namespace holozeta
