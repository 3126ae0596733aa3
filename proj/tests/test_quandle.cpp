#include <doctest.h>

#include <set>

#include "holozeta/error.hpp"
#include "holozeta/fixtures.hpp"
#include "holozeta/presentation.hpp"
#include "holozeta/quandle.hpp"
#include "holozeta/wirtinger.hpp"
#include "support/random.hpp"
#include "support/random_knots.hpp"
#include "support/random_pairs.hpp"

using namespace holozeta;
using namespace holozeta::testing;

namespace {

KnotDiagram trefoil() { return parse_pd(fixtures::trefoil_pd()); }
KnotDiagram figure_eight() { return parse_pd(fixtures::figure_eight_pd()); }

LaurentPoly t() { return LaurentPoly::t(); }

std::multiset<std::string> normalized_zetas(FiniteQuandle const& q, KnotDiagram const& d, CrossingWeights const& g) {
  std::multiset<std::string> out;
  for (auto const& c : enumerate_colorings(q, d))
    out.insert(to_string(normalize_up_to_units(zeta_reciprocal(quandle_weighted_graph(q, d, c, g)))));
  return out;
}

// Colouring of d after an R1 kink inserted at passage `at`, read off c.
Coloring transport_after_kink(KnotDiagram const& d, KnotDiagram const& kinked, std::size_t at, Coloring const& c) {
  Coloring out(kinked.arc_count(), c[0]);
  for (std::size_t a = 0; a < d.crossing_count(); ++a) {
    auto p = d.under_position(a);
    out[kinked.arc_at(p >= at ? p + 2 : p)] = c[a];
  }
  return out;
}

}  // namespace

TEST_CASE("quandle axioms: dihedral and trivial quandles, witnesses for failures") {
  CHECK(quandle_violations(FiniteQuandle::dihedral(3).table()).empty());
  CHECK(quandle_violations(FiniteQuandle::dihedral(5).table()).empty());
  CHECK(quandle_violations(FiniteQuandle::trivial(4).table()).empty());
  auto r3 = FiniteQuandle::dihedral(3);
  CHECK(r3.table() == QuandleTable{{0, 2, 1}, {2, 1, 0}, {1, 0, 2}});
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) CHECK(r3.op(r3.inv(a, b), b) == a);

  auto idem = quandle_violations({{1, 0}, {0, 1}});
  REQUIRE_FALSE(idem.empty());
  CHECK(to_string(idem.front()) == "(cond=1, a=0)");
  auto bij = quandle_violations({{0, 0}, {0, 1}});
  CHECK(std::any_of(bij.begin(), bij.end(), [](Violation const& v) { return v.condition == "2"; }));
  // Idempotent and bijective but not distributive.
  QuandleTable nd{{0, 2, 1, 1}, {2, 1, 0, 0}, {1, 0, 2, 3}, {3, 3, 3, 2}};
  auto bad = quandle_violations(nd);
  CHECK(std::any_of(bad.begin(), bad.end(), [](Violation const& v) { return v.condition == "3"; }));
  CHECK_THROWS_AS(FiniteQuandle{nd}, ValidationError);
  CHECK(quandle_violations({{0, 5}, {0, 1}}).front().condition == "range");
}

TEST_CASE("quandle text round trip") {
  auto q = FiniteQuandle::dihedral(3);
  CHECK(to_string(q) == "3\n0 2 1\n2 1 0\n1 0 2\n");
  CHECK(parse_quandle(to_string(q)).table() == q.table());
  CHECK(parse_quandle("# R2\n2\n0 0\n1 1\n").table() == FiniteQuandle::trivial(2).table());
  CHECK_THROWS_AS(parse_quandle("2\n0 1\n1"), ParseError);
  CHECK_THROWS_AS(parse_quandle("2\n1 0\n0 1"), ValidationError);
}

TEST_CASE("alexander pairs: constant pairs and twists pass, broken pairs give witnesses") {
  auto r3 = FiniteQuandle::dihedral(3);
  auto tq = FiniteQuandle::trivial(4);
  for (auto const* q : {&r3, &tq}) {
    CHECK(alexander_pair_violations(*q, constant_pair(q->size(), 1)).empty());
    CHECK(alexander_pair_violations(*q, constant_pair(q->size(), t())).empty());
    for (int i = 0; i < 10; ++i) {
      auto f = random_alexander_pair(*q);
      CHECK(alexander_pair_violations(*q, f).empty());
      CHECK(reference::alexander_pair_violations(*q, f).empty());
    }
  }
  // f2 = 1 - t fails condition 1 once f1 = t is replaced by t^2.
  auto f = constant_pair(3, t());
  f.f1[0][0] = t() * t();
  auto found = alexander_pair_violations(r3, f);
  REQUIRE_FALSE(found.empty());
  CHECK(to_string(found.front()) == "(cond=1, a=0)");
  CHECK(found == reference::alexander_pair_violations(r3, f));
  CHECK_THROWS_WITH_AS(alexander_pair_check(r3, f), doctest::Contains("(cond=1, a=0)"), ValidationError);

  auto nonunit = constant_pair(3, t());
  nonunit.f1[1][2] = 1 + t();
  nonunit.f2[1][2] = -t();
  auto v = alexander_pair_violations(r3, nonunit);
  CHECK(std::any_of(v.begin(), v.end(), [](Violation const& x) { return to_string(x) == "(cond=2, a=1, b=2)"; }));
  CHECK(alexander_pair_violations(r3, AlexanderPair{}).front().condition == "shape");
}

TEST_CASE("alexander pairs: the derived operation is a quandle") {
  auto q = FiniteQuandle::dihedral(5);
  for (int trial = 0; trial < 5; ++trial) {
    auto f = random_alexander_pair(q);
    for (int i = 0; i < 20; ++i) {
      auto pick = [&] {
        return std::pair<std::size_t, LaurentPoly>{static_cast<std::size_t>(uniform(0, 4)), random_laurent()};
      };
      auto x = pick(), y = pick(), z = pick();
      CHECK(derived_star(q, f, x, x) == x);
      CHECK(derived_star(q, f, derived_star(q, f, x, y), z) ==
            derived_star(q, f, derived_star(q, f, x, z), derived_star(q, f, y, z)));
      // Right translation by y is inverted by solving for the first coordinate.
      auto r = derived_star(q, f, x, y);
      auto a = q.inv(r.first, y.first);
      auto inv = *f.f1[a][y.first].unit_inverse();
      CHECK(std::pair{a, inv * (r.second - f.f2[a][y.first] * y.second)} == x);
    }
  }
}

TEST_CASE("holonomy: f-twisted weights pass, recover the pair, perturbations fail") {
  auto r3 = FiniteQuandle::dihedral(3);
  auto tq = FiniteQuandle::trivial(4);
  for (auto const* q : {&r3, &tq}) {
    std::vector<AlexanderPair> pairs{constant_pair(q->size(), 1), constant_pair(q->size(), t())};
    for (int i = 0; i < 5; ++i) pairs.push_back(random_alexander_pair(*q));
    for (auto const& f : pairs) {
      auto g = f_twisted_weights(*q, f);
      CHECK(holonomy_violations(*q, g).empty());
      CHECK(recover_pair(*q, g) == f);
      for (int i = 0; i < 10; ++i) {
        auto bad = perturb(g);
        auto found = holonomy_violations(*q, bad);
        CHECK_FALSE(found.empty());
        CHECK(found == reference::holonomy_violations(*q, bad));
        CHECK_THROWS_AS(recover_pair(*q, bad), ValidationError);
      }
    }
  }
}

TEST_CASE("holonomy: weights of the constant pair (t, 1 - t)") {
  auto q = FiniteQuandle::trivial(1);
  auto g = f_twisted_weights(q, constant_pair(1, t()));
  CHECK(g.g1_pos[0][0] == LaurentPoly::t(-1));
  CHECK(g.g2_pos[0][0] == 1 - LaurentPoly::t(-1));
  CHECK(g.g1_neg[0][0] == t());
  CHECK(g.g2_neg[0][0] == 1 - t());
  // The B1 product fails when a positive weight is doubled.
  auto bad = g;
  bad.g1_pos[0][0] = bad.g1_pos[0][0] * 2;
  auto found = holonomy_violations(q, bad);
  REQUIRE_FALSE(found.empty());
  CHECK(to_string(found.front()) == "(cond=B1, a=0, b=0)");
  CHECK_THROWS_AS(f_twisted_weights(q, constant_pair(1, 1 + t())), ValidationError);
}

TEST_CASE("pair and weight text round trip") {
  auto q = FiniteQuandle::dihedral(3);
  auto f = random_alexander_pair(q);
  CHECK(parse_alexander_pair(to_string(f)) == f);
  auto g = f_twisted_weights(q, f);
  CHECK(parse_crossing_weights(to_string(g)) == g);
  CHECK(parse_alexander_pair("f1:\nt\nf2:\n1 - t\n") == constant_pair(1, t()));
  CHECK_THROWS_AS(parse_alexander_pair("f1:\nt; t\nf2:\n1 - t\n"), ParseError);
  CHECK_THROWS_AS(parse_alexander_pair("f1:\nt\n"), ParseError);
  CHECK_THROWS_AS(parse_alexander_pair("t\nf2:\n1\n"), ParseError);
}

TEST_CASE("colourings: counts by the dihedral quandles") {
  auto r3 = FiniteQuandle::dihedral(3);
  auto r5 = FiniteQuandle::dihedral(5);
  CHECK(enumerate_colorings(r3, trefoil()).size() == 9);
  CHECK(enumerate_colorings(r3, figure_eight()).size() == 3);
  CHECK(enumerate_colorings(r5, trefoil()).size() == 5);
  CHECK(enumerate_colorings(r5, figure_eight()).size() == 25);
  CHECK(enumerate_colorings(r3, KnotDiagram()).size() == 3);
  CHECK(enumerate_colorings(FiniteQuandle::trivial(4), trefoil()).size() == 4);
  for (auto const& c : enumerate_colorings(r3, trefoil())) CHECK_FALSE(coloring_violation(r3, trefoil(), c));
  CHECK(coloring_violation(r3, trefoil(), {0, 0, 1}).has_value());
  CHECK(to_string(Coloring{0, 2, 1}, trefoil()) == "x1=0 x2=2 x3=1");
  for (int i = 0; i < 10; ++i) {
    auto d = random_knot();
    CHECK(enumerate_colorings(r3, d) == reference::enumerate_colorings(r3, d));
    // Brute force over all assignments.
    std::size_t count = 0, arcs = d.arc_count(), total = 1;
    for (std::size_t k = 0; k < arcs; ++k) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      Coloring c(arcs);
      for (std::size_t k = 0, x = code; k < arcs; ++k, x /= 3) c[k] = x % 3;
      if (!coloring_violation(r3, d, c)) ++count;
    }
    CHECK(enumerate_colorings(r3, d).size() == count);
  }
}

TEST_CASE("quandle graph: classical Alexander polynomials from a constant colouring") {
  auto q = FiniteQuandle::trivial(1);
  auto g = f_twisted_weights(q, constant_pair(1, t()));
  auto zeta = [&](KnotDiagram const& d) {
    return normalize_up_to_units(zeta_reciprocal(quandle_weighted_graph(q, d, Coloring(d.arc_count(), 0), g)));
  };
  CHECK(zeta(trefoil()) == 1 - t() + t() * t());
  CHECK(zeta(figure_eight()) == 1 - 3 * t() + t() * t());
  CHECK(zeta(KnotDiagram()) == 1);
  auto graph = quandle_weighted_graph(q, trefoil(), {0, 0, 0}, g);
  CHECK(graph.vertices().size() == 3);
  CHECK(graph.edges().size() == 4);
  CHECK(graph.edge("c1:1").weight == PolyMatrix::scalar(t()));
  CHECK_THROWS_AS(quandle_weighted_graph(FiniteQuandle::dihedral(3), trefoil(), {0, 0, 1}, g), ValidationError);
}

TEST_CASE("quandle graph: the pair (1/t, 1 - 1/t) reproduces the abelian Wirtinger graph") {
  auto q = FiniteQuandle::trivial(1);
  auto g = f_twisted_weights(q, constant_pair(1, LaurentPoly::t(-1)));
  auto ab = Representation::abelianization();
  for (int i = 0; i < 20; ++i) {
    auto d = random_knot();
    auto quandle = zeta_reciprocal(quandle_weighted_graph(q, d, Coloring(d.arc_count(), 0), g));
    auto wirtinger = zeta_reciprocal(build_group_weighted_graph(wirtinger_presentation(d)), ab);
    CHECK(equal_up_to_units(quandle, wirtinger));
  }
}

TEST_CASE("quandle graph: R1 kinks change zeta by f1(a,a)^-sign or not at all") {
  auto q = FiniteQuandle::dihedral(3);
  for (int trial = 0; trial < 10; ++trial) {
    auto d = random_knot();
    auto f = random_alexander_pair(q);
    auto g = f_twisted_weights(q, f);
    for (int sign : {1, -1}) {
      for (auto kind : {MoveKind::R1_1, MoveKind::R1_2}) {
        ReidemeisterMove m;
        m.kind = kind;
        m.position = 0;
        m.sign = sign;
        auto kinked = reidemeister_apply(d, m);
        for (auto const& c : enumerate_colorings(q, d)) {
          auto ck = transport_after_kink(d, kinked, 0, c);
          REQUIRE_FALSE(coloring_violation(q, kinked, ck));
          auto before = zeta_reciprocal(quandle_weighted_graph(q, d, c, g));
          auto after = zeta_reciprocal(quandle_weighted_graph(q, kinked, ck, g));
          auto a = c[0];
          if (kind == MoveKind::R1_1) {
            CHECK(after == before);
          } else {
            auto factor = sign > 0 ? *f.f1[a][a].unit_inverse() : f.f1[a][a];
            CHECK(after == factor * before);
          }
        }
      }
    }
  }
}

TEST_CASE("quandle graph: the multiset of normalized zetas is invariant under moves") {
  auto q = FiniteQuandle::dihedral(3);
  for (int trial = 0; trial < 8; ++trial) {
    auto d = random_knot(6);
    auto g = f_twisted_weights(q, random_alexander_pair(q));
    auto expected = normalized_zetas(q, d, g);
    auto current = d;
    for (int step = 0; step < 4; ++step) {
      auto sites = r3_sites(current);
      if (!sites.empty() && uniform(0, 1)) {
        current = reidemeister_apply(current, sites[static_cast<std::size_t>(uniform(0, static_cast<int>(sites.size()) - 1))]);
      } else {
        current = reidemeister_apply(current, random_forward_move(current));
      }
      CHECK(normalized_zetas(q, current, g) == expected);
    }
  }
}
