#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "holozeta/representation.hpp"
#include "holozeta/weighted_graph.hpp"
#include "holozeta/word.hpp"

namespace holozeta {

// A relator together with an optional base point: the position of one letter
// of the relator. The base letter may have exponent +1 or -1.
struct Relation {
  Word word;
  std::optional<std::size_t> base;
  friend bool operator==(Relation const&, Relation const&) = default;
};

// Finite presentation with base points. Relators are reduced and nonempty;
// distinct relations have distinct base generators.
class BasedPresentation {
 public:
  BasedPresentation() = default;
  // Throws ValidationError if an invariant fails.
  BasedPresentation(Alphabet generators, std::vector<Relation> relations);

  Alphabet const& generators() const noexcept { return generators_; }
  std::vector<Relation> const& relations() const noexcept { return relations_; }
  std::size_t generator(std::string_view name) const;  // throws LookupError
  // Generator index of the base letter of relation i.
  std::optional<std::size_t> base_generator(std::size_t i) const;

 private:
  Alphabet generators_;
  std::vector<Relation> relations_;
};

// Solved form x = f of a based relation, with x the base generator.
struct SolvedRelation {
  std::size_t generator = 0;
  Word rhs;
};

// For r with base letter at `position`: inverts r if that letter has exponent
// -1, rotates the base letter to the front, and returns f with r ~ x f^-1.
Word solve_for_base(Word const& r, std::size_t position);
SolvedRelation solved_form(BasedPresentation const& p, std::size_t relation);

struct AssumptionEntry {
  std::size_t relation = 0;
  bool certified = false;
  PolyMatrix image;  // Phi(1 - d f / d x) for the base generator x
};

struct AssumptionReport {
  std::vector<AssumptionEntry> entries;
  bool all_certified() const;
};

// A relation is certified when Phi(1 - d f_i / d x_i) is a nonzero matrix;
// relations without a base point are reported as not certified.
AssumptionReport check_assumption(BasedPresentation const& p, Representation const& rep);
// Same check on solved forms given directly, for relations such as x = x
// whose relator is trivial.
AssumptionReport check_assumption(std::vector<SolvedRelation> const& relations, Alphabet const& alphabet,
                                  Representation const& rep);

enum class TietzeKind {
  InvertRelation,     // r_i -> r_i^-1
  ConjugateRelation,  // r_i -> w r_i w^-1
  MultiplyRelations,  // r_i -> r_i w r_k^sign w^-1, i != k
  AddGenerator,       // new generator x and relation x w^-1 based at x
  RemoveGenerator,    // inverse of AddGenerator
};

struct TietzeMove {
  TietzeKind kind = TietzeKind::InvertRelation;
  std::size_t relation = 0;  // i
  std::size_t other = 0;     // k for MultiplyRelations
  Word word;                 // conjugator, or the defining word of a new generator
  int sign = 1;
  std::string generator;  // name for AddGenerator / RemoveGenerator
};

// Applies a move, carrying base points through free reduction. Throws
// InvalidMove if the parameters do not fit or a base letter cancels.
BasedPresentation tietze_apply(BasedPresentation const& p, TietzeMove const& m);
// The move undoing m when applied to tietze_apply(before, m).
TietzeMove formal_inverse(BasedPresentation const& before, TietzeMove const& m);

// Moves the base point of relation i to another occurrence of the same generator.
BasedPresentation rebase(BasedPresentation const& p, std::size_t relation, std::size_t new_position);

// One vertex per generator; relation i solved as x = f contributes an edge
// x -> y with weight d f / d y for every y with a nonzero derivative.
GroupGraph build_group_weighted_graph(BasedPresentation const& p);

// Same generator names, and the same relations with the same base letters up
// to reordering. Words are compared by generator name.
bool same_presentation(BasedPresentation const& a, BasedPresentation const& b);

// Representation extended to generators introduced by a move.
Representation extend_representation(Representation const& rep, BasedPresentation const& before, TietzeMove const& m);

struct TietzeStepCheck {
  LaurentPoly zeta;      // det(I - A) of the graph after the step
  bool equal_up_to_units = true;
  bool exactly_equal = true;
};

struct TietzeReport {
  bool ok = false;
  std::optional<std::size_t> failed_step;
  std::string message;
  BasedPresentation final_presentation;
  bool matches_expected = false;
  std::vector<TietzeStepCheck> steps;  // index 0 is the starting presentation
};

// Applies the moves, compares the result with `expected` and checks that the
// zeta function of the group-weighted graph under rep is unchanged up to units
// after every step.
TietzeReport verify_tietze_script(BasedPresentation const& start, std::vector<TietzeMove> const& moves,
                                  BasedPresentation const* expected, Representation const& rep);

// Text form:
//   gens: x1 x2 x3
//   rel: x2 * x3^-1 * x1^-1 * x3  base: x1@0
// "@k" counts occurrences of the generator in the relator, from 0.
BasedPresentation parse_presentation(std::string_view text);
std::string to_string(BasedPresentation const& p);
std::string to_string(Relation const& r, Alphabet const& alphabet);

// Script text, relations numbered from 1 in their current order:
//   invert r1
//   conjugate r1 by x2 x3
//   multiply r1 r2 [by w] [inverse]
//   add-generator y = x1 x2
//   remove-generator y
// Words are read against the alphabet in force when the line is reached.
std::vector<TietzeMove> parse_tietze_script(std::string_view text, BasedPresentation const& start);
std::string to_string(TietzeMove const& m, Alphabet const& alphabet);

}  // namespace holozeta
