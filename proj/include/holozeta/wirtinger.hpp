#pragma once

#include <cstddef>
#include <string>

#include "holozeta/knot.hpp"
#include "holozeta/laurent.hpp"
#include "holozeta/presentation.hpp"
#include "holozeta/representation.hpp"

namespace holozeta {

// Relation at crossing a with over arc u: x_{a+1} u^-1 x_a^-1 u for a positive
// crossing and x_{a+1} u x_a^-1 u^-1 for a negative one, freely reduced and
// based at x_a, so that it solves to x_a = u^{+-1} x_{a+1} u^{-+1}. If the
// base letter cancels (a kink whose over arc is x_a), the remaining
// occurrence of x_a is used and the relation reads x_a = x_{a+1}.
Relation crossing_relation(KnotDiagram const& d, std::size_t a);

// Generators x1 .. xn, one relation per crossing except the last.
BasedPresentation wirtinger_presentation(KnotDiagram const& d);

// Throws ValidationError unless rep defines every arc generator and maps
// every crossing relation, including the omitted one, to the identity.
void check_knot_representation(KnotDiagram const& d, Representation const& rep);

// Fox matrix Phi(d r_i / d x_l) of a presentation, one block per entry.
PolyMatrix fox_matrix(BasedPresentation const& p, Representation const& rep);

enum class AlexanderRoute {
  Graph,   // det(I - A) of the group-weighted graph under rep
  Direct,  // the Fox matrix without the column of x1
};

struct AlexanderResult {
  LaurentPoly raw_numerator;
  LaurentPoly numerator;    // unit normal form, or zero
  LaurentPoly denominator;  // unit normal form of det(I - Phi(x1)), or zero
  bool denominator_vanishes = false;
  bool certified = false;  // check_assumption passed for every relation
};

AlexanderResult twisted_alexander(KnotDiagram const& d, Representation const& rep, AlexanderRoute route);

}  // namespace holozeta
