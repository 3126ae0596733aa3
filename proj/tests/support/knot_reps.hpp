#pragma once

#include <vector>

#include "holozeta/error.hpp"
#include "holozeta/knot.hpp"
#include "holozeta/representation.hpp"
#include "holozeta/wirtinger.hpp"

namespace holozeta::testing {

// The three reflections of the symmetric group S3 acting on the plane
// spanned by e1 - e2 and e2 - e3.
inline std::vector<QMatrix> s3_reflections() {
  auto a = parse_rational_matrix("[[-1, 1], [0, 1]]");
  auto b = parse_rational_matrix("[[1, 0], [1, -1]]");
  return {a, b, a * b * a};
}

// Every representation of the knot group sending arcs to reflections of S3,
// found by checking all assignments against the crossing relations.
inline std::vector<Representation> s3_representations(KnotDiagram const& d, bool nontrivial_only = true) {
  auto refl = s3_reflections();
  auto names = arc_names(d);
  std::vector<Representation> out;
  std::vector<std::size_t> colour(names.size(), 0);
  while (true) {
    bool constant = true;
    for (auto c : colour) constant = constant && c == colour[0];
    if (!(nontrivial_only && constant)) {
      Representation rep(2);
      for (std::size_t i = 0; i < names.size(); ++i) rep.set(names[i], {refl[colour[i]], 1});
      try {
        check_knot_representation(d, rep);
        out.push_back(rep);
      } catch (ValidationError const&) {
      }
    }
    std::size_t i = 0;
    while (i < colour.size() && ++colour[i] == 3) colour[i++] = 0;
    if (i == colour.size()) break;
  }
  return out;
}

// Classical Alexander matrix written directly from the crossings: row a has
// 1 - t at the over arc and t, -1 at the incoming and outgoing under arcs of
// a positive crossing (-1, t for a negative one); entries of coinciding arcs add. Returns the determinant of the minor
// without the last row and column.
inline LaurentPoly classical_alexander(KnotDiagram const& d) {
  auto n = d.crossing_count();
  if (n <= 1) return 1;
  PolyMatrix m(n, n);
  auto t = LaurentPoly::t();
  for (std::size_t a = 0; a < n; ++a) {
    auto c = d.crossing(a);
    m(a, c.over) += LaurentPoly(1) - t;
    m(a, c.under_in) += c.sign > 0 ? t : LaurentPoly(-1);
    m(a, c.under_out) += c.sign > 0 ? LaurentPoly(-1) : t;
  }
  return det_cofactor(m.minor_matrix(n - 1, n - 1));
}

}  // namespace holozeta::testing
