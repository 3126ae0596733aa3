#pragma once

#include <string>
#include <vector>

#include "holozeta/presentation.hpp"
#include "holozeta/transform.hpp"

namespace holozeta::fixtures {

// Local presentations around a triangle of three positive crossings, before
// and after the third Reidemeister move. Generators: xi, xi1, xi2 along the
// bottom strand, xj, xj1 along the middle strand, xk on top.
BasedPresentation r3_before();
BasedPresentation r3_after();
// Six moves taking r3_before() to r3_after().
std::string r3_tietze_script();
// The graph both sides reduce to, and the group-level scripts doing it.
GroupGraph r3_common_graph();
std::string r3_before_reduction();
std::string r3_after_reduction();
// A representation of the local group: xk, xj1, xi2 are free and get the
// given images; the others are determined by the relations of the chosen side.
Representation r3_representation(bool after, GeneratorImage const& k, GeneratorImage const& e,
                                 GeneratorImage const& c);

// Knot diagrams as KnotAtlas PD strings.
std::string trefoil_pd();
std::string figure_eight_pd();
// Three-strand braid words (generator k as +k or -k) whose closures are the
// trefoil and its image under one third move.
std::vector<int> r3_braid_before();
std::vector<int> r3_braid_after();

}  // namespace holozeta::fixtures
