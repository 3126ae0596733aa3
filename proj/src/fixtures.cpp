#include "holozeta/fixtures.hpp"

namespace holozeta::fixtures {

BasedPresentation r3_before() {
  return parse_presentation(
      "gens: xi xi1 xi2 xj xj1 xk\n"
      "rel: xi * xj * xi1^-1 * xj^-1  base: xi@0\n"
      "rel: xi1 * xk * xi2^-1 * xk^-1  base: xi1@0\n"
      "rel: xj * xk * xj1^-1 * xk^-1  base: xj@0\n");
}

BasedPresentation r3_after() {
  return parse_presentation(
      "gens: xi xi1 xi2 xj xj1 xk\n"
      "rel: xi * xk * xi1^-1 * xk^-1  base: xi@0\n"
      "rel: xi1 * xj1 * xi2^-1 * xj1^-1  base: xi1@0\n"
      "rel: xj * xk * xj1^-1 * xk^-1  base: xj@0\n");
}

std::string r3_tietze_script() {
  return "multiply r1 r2 by xj\n"
         "multiply r1 r3\n"
         "multiply r1 r3 by xk xj1 xi2 xk^-1 xj^-1 inverse\n"
         "remove-generator xi1\n"
         "add-generator xi1 = xj1 xi2 xj1^-1\n"
         "multiply r1 r3 by xk inverse\n";
}

GroupGraph r3_common_graph() {
  return parse_group_graph(
      "gens: xi xi1 xi2 xj xj1 xk\n"
      "vertex xi\nvertex xi2\nvertex xj\nvertex xj1\nvertex xk\n"
      "edge a xi -> xi2 weight=xj xk\n"
      "edge b xi -> xj1 weight=xk - xi xk\n"
      "edge c xi -> xk weight=1 - xi\n"
      "edge d xj -> xj1 weight=xk\n"
      "edge e xj -> xk weight=1 - xj\n");
}

std::string r3_before_reduction() {
  return "hub r1:xi1\n"
         "hub r1:xj\n"
         "merge c = r1:xi1.r2:xk r1:xj.r3:xk\n"
         "eliminate xi1 witness=xk xi2 xk^-1\n";
}

std::string r3_after_reduction() {
  return "hub r1:xi1\n"
         "eliminate xi1 witness=xj1 xi2 xj1^-1\n";
}

Representation r3_representation(bool after, GeneratorImage const& k, GeneratorImage const& e,
                                 GeneratorImage const& c) {
  Representation rep(k.rho.rows());
  rep.set("xk", k);
  rep.set("xj1", e);
  rep.set("xi2", c);
  Alphabet names{"xk", "xj1", "xi2"};
  Phi phi(rep, names);
  auto image = [&](char const* w) { return phi.word_image(parse_word(w, names)); };
  rep.set("xj", image("xk xj1 xk^-1"));
  rep.set("xi1", after ? image("xj1 xi2 xj1^-1") : image("xk xi2 xk^-1"));
  rep.set("xi", image("xk xj1 xi2 xj1^-1 xk^-1"));
  return rep;
}

std::string trefoil_pd() { return "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"; }

std::string figure_eight_pd() { return "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"; }

std::vector<int> r3_braid_before() { return {1, 2, 1, 2}; }

std::vector<int> r3_braid_after() { return {2, 1, 2, 2}; }

}  // namespace holozeta::fixtures
