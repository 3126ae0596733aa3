#include "holozeta/wirtinger.hpp"

#include "holozeta/error.hpp"
#include "holozeta/group_ring.hpp"
#include "holozeta/matrix.hpp"

namespace holozeta {

Relation crossing_relation(KnotDiagram const& d, std::size_t a) {
  auto c = d.crossing(a);
  int e = c.sign > 0 ? -1 : 1;
  std::vector<Letter> letters{{c.under_out, 1}, {c.over, e}, {c.under_in, -1}, {c.over, -e}};
  auto tracked = reduce_tracking(letters, 2);
  if (tracked.position) return {tracked.word, tracked.position};
  auto others = tracked.word.occurrences(c.under_in);
  if (others.empty()) return {tracked.word, std::nullopt};
  return {tracked.word, others.front()};
}

BasedPresentation wirtinger_presentation(KnotDiagram const& d) {
  std::vector<Relation> rels;
  for (std::size_t a = 0; a + 1 < d.crossing_count(); ++a) rels.push_back(crossing_relation(d, a));
  return BasedPresentation(arc_names(d), rels);
}

void check_knot_representation(KnotDiagram const& d, Representation const& rep) {
  auto names = arc_names(d);
  for (auto const& name : names)
    if (!rep.defines(name)) throw ValidationError("representation does not define " + name);
  Phi phi(rep, names);
  auto identity = QMatrix::identity(rep.dim());
  for (std::size_t a = 0; a < d.crossing_count(); ++a) {
    auto image = phi.word_image(crossing_relation(d, a).word);
    if (image.rho != identity || image.alpha != 0)
      throw ValidationError("representation does not respect the relation at crossing " + std::to_string(a + 1));
  }
}

PolyMatrix fox_matrix(BasedPresentation const& p, Representation const& rep) {
  auto const& gens = p.generators();
  auto k = rep.dim();
  Phi phi(rep, gens);
  PolyMatrix m(k * p.relations().size(), k * gens.size());
  for (std::size_t i = 0; i < p.relations().size(); ++i)
    for (std::size_t l = 0; l < gens.size(); ++l)
      m.set_block(i * k, l * k, phi(fox_derivative(p.relations()[i].word, l)));
  return m;
}

AlexanderResult twisted_alexander(KnotDiagram const& d, Representation const& rep, AlexanderRoute route) {
  check_knot_representation(d, rep);
  auto p = wirtinger_presentation(d);
  auto k = rep.dim();
  AlexanderResult r;
  r.certified = check_assumption(p, rep).all_certified();
  if (route == AlexanderRoute::Graph) {
    r.raw_numerator = zeta_reciprocal(build_group_weighted_graph(p), rep);
  } else {
    auto m = fox_matrix(p, rep);
    auto rows = m.rows();
    r.raw_numerator = rows == 0 ? LaurentPoly(1) : det(m.block(0, k, rows, m.cols() - k));
  }
  if (!r.raw_numerator.is_zero()) r.numerator = normalize_up_to_units(r.raw_numerator);
  auto x1 = Phi(rep, p.generators())(Word::generator(0));
  auto den = det(PolyMatrix::identity(k) - x1);
  r.denominator_vanishes = den.is_zero();
  if (!den.is_zero()) r.denominator = normalize_up_to_units(den);
  return r;
}

}  // namespace holozeta
