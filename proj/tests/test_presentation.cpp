#include <doctest.h>

#include "holozeta/error.hpp"
#include "holozeta/fixtures.hpp"
#include "holozeta/presentation.hpp"
#include "holozeta/text.hpp"
#include "support/random.hpp"

using namespace holozeta;
using namespace holozeta::testing;

namespace {

Alphabet const xyu{"x", "y", "u", "v"};
Word W(char const* s) { return parse_word(s, xyu); }

std::string data_path(std::string const& name) {
  char const* dir = std::getenv("HOLOZETA_DATA");
  return std::string(dir ? dir : "data") + "/" + name;
}

TietzeMove random_move(BasedPresentation const& p) {
  TietzeMove m;
  auto n = p.generators().size();
  auto rels = p.relations().size();
  switch (uniform(0, 3)) {
    case 0:
      m.kind = TietzeKind::InvertRelation;
      m.relation = static_cast<std::size_t>(uniform(0, static_cast<int>(rels) - 1));
      break;
    case 1:
      m.kind = TietzeKind::ConjugateRelation;
      m.relation = static_cast<std::size_t>(uniform(0, static_cast<int>(rels) - 1));
      m.word = random_word(n, 3);
      break;
    case 2:
      if (rels < 2) return random_move(p);
      m.kind = TietzeKind::MultiplyRelations;
      m.relation = static_cast<std::size_t>(uniform(0, static_cast<int>(rels) - 1));
      do m.other = static_cast<std::size_t>(uniform(0, static_cast<int>(rels) - 1));
      while (m.other == m.relation);
      m.word = random_word(n, 3);
      m.sign = uniform(0, 1) ? 1 : -1;
      break;
    default:
      m.kind = TietzeKind::AddGenerator;
      m.generator = "g" + std::to_string(uniform(0, 1000000));
      m.word = random_word(n, 4);
      break;
  }
  return m;
}

}  // namespace

TEST_CASE("solve_for_base: examples") {
  // r = x y z y^-1 read as x (y z^-1 y^-1)^-1.
  CHECK(solve_for_base(W("x y u y^-1"), 0) == W("y u^-1 y^-1"));
  // x_{i+1} u^-1 x_i^-1 u based at x_{i+1}.
  CHECK(solve_for_base(W("y u^-1 x^-1 u"), 0) == W("u^-1 x u"));
  // Same relator based at x_i, which has exponent -1.
  CHECK(solve_for_base(W("y u^-1 x^-1 u"), 2) == W("u y u^-1"));
  CHECK_THROWS_AS(solve_for_base(W("x y"), 2), ValidationError);
}

TEST_CASE("solve_for_base: x f^-1 is a rotation of r or r^-1") {
  for (int trial = 0; trial < 300; ++trial) {
    auto r = random_word(4, 8);
    if (r.empty()) continue;
    auto p = static_cast<std::size_t>(uniform(0, static_cast<int>(r.size()) - 1));
    auto f = solve_for_base(r, p);
    auto x = Word::generator(r[p].gen);
    auto rebuilt = x * f.inverse();
    bool found = false;
    for (auto const& s : {r, r.inverse()})
      for (std::size_t k = 0; k < s.size(); ++k) {
        std::vector<Letter> rot(s.letters().begin() + static_cast<std::ptrdiff_t>(k), s.letters().end());
        rot.insert(rot.end(), s.letters().begin(), s.letters().begin() + static_cast<std::ptrdiff_t>(k));
        if (Word(rot) == rebuilt) found = true;
      }
    CHECK(found);
  }
}

TEST_CASE("presentation: text round trip and validation") {
  auto p = parse_presentation("gens: x1 x2 u\nrel: x2 * u^-1 * x1^-1 * u  base: x2@0\nrel: x1 u x1 u^-1 base: x1@1\n");
  CHECK(p.relations().size() == 2);
  CHECK(*p.relations()[1].base == 2);
  CHECK(same_presentation(parse_presentation(to_string(p)), p));
  CHECK(to_string(p.relations()[0], p.generators()) == "x2 * u^-1 * x1^-1 * u  base: x2@0");
  CHECK_THROWS_AS(parse_presentation("rel: x"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: x\nrel: y"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: x y\nrel: x x^-1"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: x y\nrel: x y base: x@1"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: x y\nrel: x y base: x@0\nrel: x y^2 base: x@0"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: x x"), ParseError);
}

TEST_CASE("group-weighted graph: examples") {
  auto p = parse_presentation("gens: xi xi1 xj\nrel: xi * xj * xi1^-1 * xj^-1  base: xi@0\n");
  auto g = build_group_weighted_graph(p);
  CHECK(g.edges().size() == 2);
  CHECK(g.edge("r1:xi1").weight == parse_group_ring("xj", p.generators()));
  CHECK(g.edge("r1:xj").weight == parse_group_ring("1 - xj xi1 xj^-1", p.generators()));
  CHECK(g.edge("r1:xj").source == "xi");

  auto q = parse_presentation("gens: x y\nrel: x y^-1 base: x@0");
  auto h = build_group_weighted_graph(q);
  REQUIRE(h.edges().size() == 1);
  CHECK(h.edges()[0].weight == GroupRingElt::one());
  CHECK(h.edges()[0].target == "y");

  CHECK_THROWS_AS(build_group_weighted_graph(parse_presentation("gens: x y\nrel: x y")), ValidationError);
}

TEST_CASE("group-weighted graph: augmentation of the out-weights is the exponent sum") {
  for (int trial = 0; trial < 100; ++trial) {
    auto r = random_word(3, 8);
    if (r.empty()) continue;
    auto p = static_cast<std::size_t>(uniform(0, static_cast<int>(r.size()) - 1));
    BasedPresentation pres(Alphabet{"a", "b", "c"}, {{r, p}});
    auto f = solve_for_base(r, p);
    Rational total = 0;
    auto g = build_group_weighted_graph(pres);
    for (auto const& e : g.edges()) total += e.weight.augmentation();
    CHECK(total == f.exponent_sum());
  }
}

TEST_CASE("check_assumption: examples") {
  auto rep = Representation::abelianization();
  auto p = parse_presentation("gens: x y\nrel: x y^-1 base: x@0");
  CHECK(check_assumption(p, rep).all_certified());
  Alphabet x{"x"};
  auto degenerate = check_assumption({{0, Word::generator(0)}}, x, rep);
  CHECK_FALSE(degenerate.all_certified());
  CHECK(degenerate.entries[0].image.is_zero());
  auto unbased = check_assumption(parse_presentation("gens: x y\nrel: x y"), rep);
  CHECK_FALSE(unbased.all_certified());
}

TEST_CASE("tietze: single moves") {
  auto p = parse_presentation("gens: x y\nrel: x y x^-1 y^-1 y^-1 base: x@0");
  auto inv = tietze_apply(p, {TietzeKind::InvertRelation, 0});
  CHECK(inv.relations()[0].word == p.relations()[0].word.inverse());
  CHECK(inv.relations()[0].word[*inv.relations()[0].base].gen == 0);
  auto added = tietze_apply(p, {TietzeKind::AddGenerator, 0, 0, parse_word("x y", p.generators()), 1, "z"});
  CHECK(added.generators().back() == "z");
  CHECK(to_string(added.relations().back(), added.generators()) == "z * y^-1 * x^-1  base: z@0");
  CHECK_THROWS_AS(tietze_apply(p, {TietzeKind::MultiplyRelations, 0, 0}), InvalidMove);
  CHECK_THROWS_AS(tietze_apply(p, {TietzeKind::AddGenerator, 0, 0, Word(), 1, "x"}), InvalidMove);
  CHECK_THROWS_AS(tietze_apply(p, {TietzeKind::RemoveGenerator, 0, 0, Word(), 1, "y"}), InvalidMove);
  // Conjugating by x^-1 cancels the base letter x.
  CHECK_THROWS_AS(tietze_apply(p, {TietzeKind::ConjugateRelation, 0, 0, parse_word("x^-1", p.generators())}),
                  InvalidMove);
}

TEST_CASE("tietze: random sequences are undone by their formal inverses") {
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto rp = random_presentation(2, 2);
    auto p = rp.presentation;
    std::vector<std::pair<BasedPresentation, TietzeMove>> history;
    int length = uniform(1, 6);
    for (int k = 0; k < length; ++k) {
      auto m = random_move(p);
      try {
        auto next = tietze_apply(p, m);
        history.push_back({p, m});
        p = next;
      } catch (InvalidMove const&) {
      }
    }
    for (auto it = history.rbegin(); it != history.rend(); ++it) p = tietze_apply(p, formal_inverse(it->first, it->second));
    CHECK(p.generators() == rp.presentation.generators());
    CHECK(p.relations() == rp.presentation.relations());
    ++checked;
  }
  CHECK(checked == 200);
}

TEST_CASE("tietze: every move keeps the zeta function up to units") {
  for (int trial = 0; trial < 60; ++trial) {
    auto rp = random_presentation(2, 2, static_cast<std::size_t>(uniform(1, 2)));
    auto p = rp.presentation;
    auto rep = rp.rep;
    auto z0 = zeta_reciprocal(build_group_weighted_graph(p), rep);
    for (int k = 0; k < 4; ++k) {
      auto m = random_move(p);
      try {
        auto next_rep = extend_representation(rep, p, m);
        p = tietze_apply(p, m);
        rep = next_rep;
      } catch (InvalidMove const&) {
        continue;
      }
      auto z = zeta_reciprocal(build_group_weighted_graph(p), rep);
      CHECK(equal_up_to_units(z, z0));
    }
  }
}

TEST_CASE("rebase: the two cases of a repeated base generator") {
  // (a) x = w1 x w2 with w1 = y, w2 = y x^-1 y^-1 (trefoil).
  auto a = parse_presentation("gens: x y\nrel: x * y * x * y^-1 * x^-1 * y^-1  base: x@0");
  CHECK(solved_form(a, 0).rhs == parse_word("y x y x^-1 y^-1", a.generators()));
  // The occurrence of x inside w1 x w2 is the x^-1 at position 4 of the relator.
  auto a2 = rebase(a, 0, 4);
  CHECK(solved_form(a2, 0).rhs == parse_word("y^-1 x y x y^-1", a2.generators()));
  auto rep = Representation::abelianization();
  auto za = zeta_reciprocal(build_group_weighted_graph(a), rep);
  auto za2 = zeta_reciprocal(build_group_weighted_graph(a2), rep);
  CHECK(normalize_up_to_units(za) == parse_laurent("1 - t + t^2"));
  CHECK(za2 == parse_laurent("1 - t^-1 - t"));
  CHECK(equal_up_to_units(za, za2));
  // (b) x = w1 x^-1 w2 rebased gives x = w2 x^-1 w1, with w1 = y y and w2 = 1.
  auto b = parse_presentation("gens: x y\nrel: x * x * y^-1 * y^-1  base: x@0");
  CHECK(solved_form(b, 0).rhs == parse_word("y y x^-1", b.generators()));
  auto b2 = rebase(b, 0, 1);
  CHECK(solved_form(b2, 0).rhs == parse_word("x^-1 y y", b2.generators()));
  auto zb = zeta_reciprocal(build_group_weighted_graph(b), rep);
  auto zb2 = zeta_reciprocal(build_group_weighted_graph(b2), rep);
  CHECK(zb == parse_laurent("1 + t"));
  CHECK(zb2 == parse_laurent("1 + t^-1"));
  CHECK(equal_up_to_units(zb, zb2));
  CHECK(rebase(a, 0, 0).relations() == a.relations());
  CHECK_THROWS_AS(rebase(a, 0, 1), InvalidMove);
}

TEST_CASE("fixture: the six-move script turns the before-presentation into the after-presentation") {
  auto before = fixtures::r3_before();
  auto after = fixtures::r3_after();
  auto moves = parse_tietze_script(fixtures::r3_tietze_script(), before);
  REQUIRE(moves.size() == 6);
  auto report = verify_tietze_script(before, moves, &after, Representation::abelianization());
  CHECK(report.ok);
  CHECK(report.matches_expected);
  CHECK(report.message == "");
  for (auto const& s : report.steps) CHECK(s.equal_up_to_units);

  // The same check under a nonabelian representation of the local group.
  auto k = GeneratorImage{parse_rational_matrix("[[1, 1], [0, 1]]"), 1};
  auto e = GeneratorImage{parse_rational_matrix("[[1, 0], [-1, 1]]"), 1};
  auto c = GeneratorImage{parse_rational_matrix("[[2, 1], [1, 1]]"), 1};
  auto rep = fixtures::r3_representation(false, k, e, c);
  auto nonabelian = verify_tietze_script(before, moves, &after, rep);
  CHECK(nonabelian.ok);
}

TEST_CASE("fixture: data files agree with the built-in fixtures") {
  CHECK(same_presentation(parse_presentation(read_file(data_path("r3_before.pres"))), fixtures::r3_before()));
  CHECK(same_presentation(parse_presentation(read_file(data_path("r3_after.pres"))), fixtures::r3_after()));
  CHECK(trim(read_file(data_path("r3_before_to_after.tz"))) == trim(fixtures::r3_tietze_script()));
  CHECK(structurally_equal(parse_group_graph(read_file(data_path("r3_common.graph"))), fixtures::r3_common_graph()));
}

TEST_CASE("fixture: both group-weighted graphs reduce to the common graph") {
  auto before = fixtures::r3_before();
  auto after = fixtures::r3_after();
  auto common = fixtures::r3_common_graph();
  auto gb = build_group_weighted_graph(before);
  auto ga = build_group_weighted_graph(after);
  auto sb = parse_group_script(fixtures::r3_before_reduction(), before.generators());
  auto sa = parse_group_script(fixtures::r3_after_reduction(), after.generators());

  auto k = GeneratorImage{parse_rational_matrix("[[1, 1], [0, 1]]"), 1};
  auto e = GeneratorImage{parse_rational_matrix("[[0, 1], [-1, 0]]"), 1};
  auto c = GeneratorImage{parse_rational_matrix("[[3, 1], [2, 1]]"), 1};
  for (auto const& [rb, ra] :
       {std::pair{Representation::abelianization(), Representation::abelianization()},
        std::pair{fixtures::r3_representation(false, k, e, c), fixtures::r3_representation(true, k, e, c)}}) {
    auto rb_report = verify_equivalence(gb, sb, common, rb);
    auto ra_report = verify_equivalence(ga, sa, common, ra);
    CHECK(rb_report.ok);
    CHECK(ra_report.ok);
    CHECK(equal_up_to_units(rb_report.zeta_start, ra_report.zeta_start));
  }
}

TEST_CASE("tietze script: text round trip and bad input") {
  auto before = fixtures::r3_before();
  auto moves = parse_tietze_script(fixtures::r3_tietze_script(), before);
  std::string text;
  auto p = before;
  for (auto const& m : moves) {
    text += to_string(m, p.generators()) + "\n";
    p = tietze_apply(p, m);
  }
  CHECK(text == fixtures::r3_tietze_script());
  CHECK_THROWS_AS(parse_tietze_script("shuffle r1", before), ParseError);
  CHECK_THROWS_AS(parse_tietze_script("invert r9", before), ParseError);
  CHECK_THROWS_AS(parse_tietze_script("conjugate r1 by q", before), ParseError);
}
