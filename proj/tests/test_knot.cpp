#include <doctest.h>

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "holozeta/error.hpp"
#include "holozeta/fixtures.hpp"
#include "holozeta/knot.hpp"
#include "holozeta/wirtinger.hpp"
#include "support/knot_reps.hpp"
#include "support/random.hpp"
#include "support/random_knots.hpp"

using namespace holozeta;
using namespace holozeta::testing;

namespace {

KnotDiagram trefoil() { return parse_pd(fixtures::trefoil_pd()); }
KnotDiagram figure_eight() { return parse_pd(fixtures::figure_eight_pd()); }

LaurentPoly numerator(KnotDiagram const& d, Representation const& rep, AlexanderRoute route) {
  return twisted_alexander(d, rep, route).numerator;
}

std::multiset<std::string> s3_numerators(KnotDiagram const& d) {
  std::multiset<std::string> out;
  for (auto const& rep : s3_representations(d))
    out.insert(to_string(numerator(d, rep, AlexanderRoute::Graph)));
  return out;
}

}  // namespace

TEST_CASE("PD codes: trefoil, figure-eight, unknot") {
  auto t = trefoil();
  CHECK(t.crossing_count() == 3);
  CHECK(std::all_of(t.signs().begin(), t.signs().end(), [&](int s) { return s == t.signs()[0]; }));
  auto f = figure_eight();
  CHECK(f.crossing_count() == 4);
  CHECK(std::count(f.signs().begin(), f.signs().end(), 1) == 2);
  auto u = parse_pd("unknot");
  CHECK(u.crossing_count() == 0);
  CHECK(u.arc_count() == 1);
  CHECK(parse_pd("X[1,1,2,2]").crossing_count() == 1);
  CHECK(parse_pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]") == t);
  for (auto const& d : {t, f}) {
    for (auto const& c : d.crossings()) {
      CHECK(c.under_out == (c.under_in + 1) % d.crossing_count());
      CHECK(c.over < d.arc_count());
    }
    CHECK(parse_pd(to_pd(d)) == d);
    CHECK(parse_gauss(to_string(d)) == d);
    CHECK(parse_diagram(to_pd(d)) == d);
    CHECK(parse_diagram(to_string(d)) == d);
    CHECK(faces(d).size() == d.crossing_count() + 2);
  }
}

TEST_CASE("PD codes: malformed input") {
  CHECK_THROWS_AS(parse_pd(""), ParseError);
  CHECK_THROWS_AS(parse_pd("X[1,4,2,5] X[3,6,4,1]"), ParseError);  // open strands
  CHECK_THROWS_AS(parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,9]"), ParseError);
  CHECK_THROWS_AS(parse_pd("X[1,4,3,5] X[2,6,4,1] X[5,2,6,3]"), ParseError);
  CHECK_THROWS_AS(parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6"), ParseError);
  CHECK_THROWS_AS(parse_gauss("O1+ O2+ U1+ U2+"), ParseError);  // not planar
  CHECK_THROWS_AS(parse_gauss("O1+ U1-"), ParseError);
  CHECK_THROWS_AS(parse_gauss("O1+ U2+"), ParseError);
  CHECK_THROWS_AS(parse_gauss("Q1+"), ParseError);
  CHECK_THROWS_AS(parse_gauss(""), ParseError);
}

TEST_CASE("braid closures are planar and carry the braid signs") {
  auto t = braid_closure({1, 1, 1}, 2);
  CHECK(t.signs() == std::vector<int>{1, 1, 1});
  CHECK(braid_closure({-1, -1, -1}, 2).signs() == std::vector<int>{-1, -1, -1});
  CHECK(braid_closure({}, 1).crossing_count() == 0);
  CHECK_THROWS_AS(braid_closure({1, 1}, 2), ValidationError);
  CHECK_THROWS_AS(braid_closure({3}, 3), ValidationError);
  for (int trial = 0; trial < 200; ++trial) {
    auto strands = static_cast<std::size_t>(uniform(2, 5));
    auto w = random_braid(strands, uniform(1, 9));
    try {
      auto d = braid_closure(w, strands);
      CHECK(d.crossing_count() == w.size());
      CHECK(is_planar(d.code(), d.signs()));
      int sum = 0;
      for (auto s : d.signs()) sum += s;
      int expected = 0;
      for (auto g : w) expected += g > 0 ? 1 : -1;
      CHECK(sum == expected);
    } catch (ValidationError const& e) {
      CHECK(std::string(e.what()) == "braid closure has more than one component");
    }
  }
}

TEST_CASE("planarity: mirror images stay planar, flipped signs alone do not") {
  int flipped_nonplanar = 0;
  for (int trial = 0; trial < 50; ++trial) {
    auto d = random_knot();
    auto code = d.code();
    auto signs = d.signs();
    for (auto& p : code) p.over = !p.over;
    for (auto& s : signs) s = -s;
    CHECK(is_planar(code, signs));
    // Changing one crossing between over and under keeps planarity.
    auto one = d.code();
    for (auto& p : one)
      if (p.crossing == 0) p.over = !p.over;
    auto one_signs = d.signs();
    one_signs[0] = -one_signs[0];
    CHECK(is_planar(one, one_signs));
    auto bad = d.signs();
    bad[0] = -bad[0];
    if (!is_planar(d.code(), bad)) ++flipped_nonplanar;
  }
  CHECK(flipped_nonplanar > 0);
}

TEST_CASE("wirtinger presentation of the trefoil") {
  auto t = trefoil();
  auto p = wirtinger_presentation(t);
  CHECK(p.generators() == Alphabet{"x1", "x2", "x3"});
  REQUIRE(p.relations().size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(*p.base_generator(i) == i);
    auto s = solved_form(p, i);
    auto c = t.crossing(i);
    int e = c.sign;
    auto u = Word::generator(c.over, e);
    CHECK(s.rhs == u * Word::generator(c.under_out) * u.inverse());
  }
  CHECK(check_assumption(p, Representation::abelianization()).all_certified());
  auto g = build_group_weighted_graph(p);
  CHECK(g.vertices().size() == 3);
  CHECK(g.out_edges("x3").empty());
  CHECK(wirtinger_presentation(parse_pd("unknot")).relations().empty());
  auto f = wirtinger_presentation(figure_eight());
  CHECK(f.generators().size() == 4);
  CHECK(f.relations().size() == 3);
}

TEST_CASE("wirtinger relation at a kink reads x_a = x_{a+1}") {
  for (auto kind : {MoveKind::R1_1, MoveKind::R1_2})
    for (int sign : {1, -1}) {
      ReidemeisterMove m;
      m.kind = kind;
      m.sign = sign;
      auto d = reidemeister_apply(trefoil(), m);
      auto kink = r1_sites(d);
      REQUIRE(kink.size() == 1);
      auto a = kink[0].crossings[0];
      auto r = crossing_relation(d, a);
      REQUIRE(r.base);
      auto c = d.crossing(a);
      auto rhs = solve_for_base(r.word, *r.base);
      if (kind == MoveKind::R1_2) {
        CHECK(rhs == Word::generator(c.under_out));
      } else {
        CHECK(c.over == c.under_out);
        CHECK(rhs == Word::generator(c.under_out));
      }
    }
}

TEST_CASE("alexander polynomial: trefoil and figure-eight by both routes") {
  auto rep = Representation::abelianization();
  for (auto route : {AlexanderRoute::Graph, AlexanderRoute::Direct}) {
    auto t = twisted_alexander(trefoil(), rep, route);
    CHECK(t.numerator == parse_laurent("1 - t + t^2"));
    CHECK(t.denominator == parse_laurent("1 - t"));
    CHECK(t.certified);
    CHECK(numerator(figure_eight(), rep, route) == parse_laurent("1 - 3t + t^2"));
    CHECK(numerator(braid_closure({1, 1, 1}, 2), rep, route) == parse_laurent("1 - t + t^2"));
    CHECK(numerator(parse_pd("unknot"), rep, route) == LaurentPoly(1));
    CHECK(numerator(parse_pd("X[1,1,2,2]"), rep, route) == LaurentPoly(1));
  }
}

TEST_CASE("alexander polynomial: both routes match the classical Alexander matrix") {
  auto rep = Representation::abelianization();
  for (int trial = 0; trial < 60; ++trial) {
    auto d = random_knot(8);
    auto g = twisted_alexander(d, rep, AlexanderRoute::Graph);
    auto x = twisted_alexander(d, rep, AlexanderRoute::Direct);
    CHECK(g.numerator == x.numerator);
    CHECK(equal_up_to_units(g.raw_numerator, classical_alexander(d)));
    // Symmetric under t -> 1/t.
    CHECK(equal_up_to_units(g.numerator, g.numerator.reflected()));
    CHECK(abs(g.numerator.evaluate(1)) == 1);
  }
}

TEST_CASE("twisted alexander: S3 representations, direct sums and conjugation") {
  auto reps = s3_representations(trefoil());
  CHECK(reps.size() == 6);
  CHECK(s3_representations(figure_eight()).empty());
  auto rep = reps[0];
  auto g = twisted_alexander(trefoil(), rep, AlexanderRoute::Graph);
  auto x = twisted_alexander(trefoil(), rep, AlexanderRoute::Direct);
  CHECK(g.numerator == x.numerator);
  CHECK(g.denominator == parse_laurent("1 - t^2"));
  CHECK(g.certified);

  auto triv = Representation(1);
  for (auto const& name : arc_names(trefoil())) triv.set(name, {QMatrix::identity(1), 1});
  auto sum = direct_sum(triv, triv);
  auto z1 = twisted_alexander(trefoil(), triv, AlexanderRoute::Graph).raw_numerator;
  auto z2 = twisted_alexander(trefoil(), sum, AlexanderRoute::Graph).raw_numerator;
  CHECK(z2 == z1 * z1);
  auto mixed = direct_sum(triv, rep);
  CHECK(twisted_alexander(trefoil(), mixed, AlexanderRoute::Graph).raw_numerator == z1 * g.raw_numerator);

  for (int trial = 0; trial < 10; ++trial) {
    auto p = random_invertible_qmatrix(2);
    auto conj = conjugate(rep, p);
    CHECK(twisted_alexander(trefoil(), conj, AlexanderRoute::Graph).raw_numerator == g.raw_numerator);
    CHECK(twisted_alexander(trefoil(), conj, AlexanderRoute::Direct).numerator == x.numerator);
  }
  CHECK(conjugate(rep, QMatrix::identity(2)).explicit_images() == rep.explicit_images());

  Representation bad(2);
  auto refl = s3_reflections();
  for (auto const& name : arc_names(trefoil())) bad.set(name, {refl[0], 1});
  bad.set("x2", {refl[1], 1});
  CHECK_THROWS_AS(twisted_alexander(trefoil(), bad, AlexanderRoute::Graph), ValidationError);
  CHECK_THROWS_AS(twisted_alexander(trefoil(), Representation(1), AlexanderRoute::Graph), ValidationError);
}

TEST_CASE("twisted alexander: a vanishing denominator is reported") {
  Representation rep(1);
  rep.set_default({QMatrix::identity(1), 0});
  auto r = twisted_alexander(trefoil(), rep, AlexanderRoute::Direct);
  CHECK(r.denominator_vanishes);
  CHECK(r.denominator.is_zero());
}

TEST_CASE("R1: insertion and removal") {
  for (auto const& d : {trefoil(), figure_eight(), parse_pd("unknot")})
    for (auto kind : {MoveKind::R1_1, MoveKind::R1_2})
      for (int sign : {1, -1})
        for (std::size_t pos = 0; pos <= d.code().size(); ++pos) {
          ReidemeisterMove m;
          m.kind = kind;
          m.sign = sign;
          m.position = pos;
          auto e = reidemeister_apply(d, m);
          CHECK(e.crossing_count() == d.crossing_count() + 1);
          CHECK(e.arc_count() == d.crossing_count() + 1);
          bool restored = false;
          for (auto const& site : r1_sites(e)) {
            auto back = reidemeister_apply(e, site);
            if (same_diagram(back, d)) restored = true;
          }
          CHECK(restored);
        }
  ReidemeisterMove wrong;
  wrong.kind = MoveKind::R1_1;
  wrong.direction = Direction::Backward;
  wrong.crossings = {0};
  CHECK_THROWS_AS(reidemeister_apply(trefoil(), wrong), InvalidMove);
  wrong.crossings = {7};
  CHECK_THROWS_AS(reidemeister_apply(trefoil(), wrong), InvalidMove);
  ReidemeisterMove far;
  far.position = 99;
  CHECK_THROWS_AS(reidemeister_apply(trefoil(), far), InvalidMove);
}

TEST_CASE("R2: every insertion is undone by a removal, four variants occur") {
  for (auto const& d : {trefoil(), figure_eight(), braid_closure({1, -2, 1, -2}, 3)}) {
    auto options = r2_insertions(d);
    CHECK_FALSE(options.empty());
    std::set<std::pair<bool, bool>> variants;
    for (auto const& m : options) {
      variants.insert({m.first_over, m.parallel});
      auto e = reidemeister_apply(d, m);
      CHECK(e.crossing_count() == d.crossing_count() + 2);
      bool restored = false;
      for (auto const& site : r2_sites(e))
        if (same_diagram(reidemeister_apply(e, site), d)) restored = true;
      CHECK(restored);
      // The inverse move at the same site restores the original.
      auto again = reidemeister_apply(e, r2_sites(e).front());
      CHECK(again.crossing_count() == d.crossing_count());
    }
    CHECK(variants.size() == 4);
  }
  ReidemeisterMove same;
  same.kind = MoveKind::R2;
  same.position = same.second = 1;
  CHECK_THROWS_AS(reidemeister_apply(trefoil(), same), InvalidMove);
  ReidemeisterMove none;
  none.kind = MoveKind::R2;
  none.direction = Direction::Backward;
  none.crossings = {0, 1};
  CHECK_THROWS_AS(reidemeister_apply(trefoil(), none), InvalidMove);
}

TEST_CASE("R3: the braid relation, and the move is an involution") {
  auto before = braid_closure(fixtures::r3_braid_before(), 3);
  auto after = braid_closure(fixtures::r3_braid_after(), 3);
  auto sites = r3_sites(before);
  REQUIRE_FALSE(sites.empty());
  bool found = false;
  for (auto const& s : sites) {
    auto moved = reidemeister_apply(before, s);
    if (same_diagram(moved, after)) found = true;
    bool back = false;
    for (auto const& t : r3_sites(moved))
      if (same_diagram(reidemeister_apply(moved, t), before)) back = true;
    CHECK(back);
  }
  CHECK(found);
  ReidemeisterMove bad;
  bad.kind = MoveKind::R3;
  bad.crossings = {0, 1, 1};
  CHECK_THROWS_AS(reidemeister_apply(before, bad), InvalidMove);
  // The trefoil from three letters on two strands has no R3 triangle.
  CHECK(r3_sites(braid_closure({1, 1, 1}, 2)).empty());
}

TEST_CASE("R3: the local relations are the fixture presentations") {
  // Each fixture relation reads x = u y u^-1, a positive crossing with over
  // arc u and under arcs x -> y. Some assignment of arcs to the fixture
  // generators must turn the fixture relations into the crossings at the site.
  using Triple = std::array<std::size_t, 3>;
  auto matches = [](KnotDiagram const& d, std::vector<std::size_t> const& site, BasedPresentation const& local) {
    std::multiset<Triple> target;
    for (auto a : site) {
      auto c = d.crossing(a);
      if (c.sign < 0) return false;
      target.insert({c.under_in, c.over, c.under_out});
    }
    std::vector<Triple> pattern;
    for (std::size_t i = 0; i < local.relations().size(); ++i) {
      auto s = solved_form(local, i);
      REQUIRE(s.rhs.size() == 3);
      pattern.push_back({s.generator, s.rhs[0].gen, s.rhs[1].gen});
    }
    std::vector<std::size_t> map(local.generators().size(), 0);
    while (true) {
      std::multiset<Triple> image;
      for (auto const& t : pattern) image.insert({map[t[0]], map[t[1]], map[t[2]]});
      if (image == target) return true;
      std::size_t i = 0;
      while (i < map.size() && ++map[i] == d.arc_count()) map[i++] = 0;
      if (i == map.size()) return false;
    }
  };
  auto d = braid_closure(fixtures::r3_braid_before(), 3);
  auto sites = r3_sites(d);
  REQUIRE_FALSE(sites.empty());
  bool ok = false;
  for (auto const& s : sites) {
    auto moved = reidemeister_apply(d, s);
    for (auto const& t : r3_sites(moved)) {
      if (!same_diagram(reidemeister_apply(moved, t), d)) continue;
      if (matches(d, s.crossings, fixtures::r3_before()) && matches(moved, t.crossings, fixtures::r3_after())) ok = true;
    }
  }
  CHECK(ok);
}

TEST_CASE("reidemeister invariance of the normalized numerator") {
  auto rep = Representation::abelianization();
  for (int trial = 0; trial < 40; ++trial) {
    auto d = random_knot(6);
    auto z = numerator(d, rep, AlexanderRoute::Graph);
    auto s3 = s3_numerators(d);
    auto e = d;
    for (int k = 0; k < 3 && e.crossing_count() < 11; ++k) e = reidemeister_apply(e, random_forward_move(e));
    for (auto const& m : r3_sites(e)) {
      auto f = reidemeister_apply(e, m);
      CHECK(numerator(f, rep, AlexanderRoute::Graph) == z);
      CHECK(numerator(f, rep, AlexanderRoute::Direct) == z);
    }
    CHECK(numerator(e, rep, AlexanderRoute::Graph) == z);
    CHECK(numerator(e, rep, AlexanderRoute::Direct) == z);
    if (e.crossing_count() <= 9) CHECK(s3_numerators(e) == s3);
  }
}

TEST_CASE("moves: text round trip") {
  for (auto const& text : {"r1-1 at 3 sign=-1", "r1-2 remove 2", "r2 at 1 5 over parallel sign=1",
                           "r2 at 0 4 under antiparallel sign=-1", "r2 remove 1 2", "r3 1 2 3"})
    CHECK(to_string(parse_move(text)) == text);
  CHECK_THROWS_AS(parse_move("r4 1"), ParseError);
  CHECK_THROWS_AS(parse_move("r3 0 1 2"), ParseError);
  CHECK_THROWS_AS(parse_move("r1-1 at x sign=1"), ParseError);
  CHECK_THROWS_AS(parse_move("r2 at 1 2 sideways parallel sign=1"), ParseError);
}
