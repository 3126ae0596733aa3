#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "holozeta/weighted_graph.hpp"

namespace holozeta {

enum class RewriteKind {
  ChangeBasis,          // conjugate the blocks at a vertex by an invertible matrix
  NullEdgeAdd,          // add a zero-weight edge
  NullEdgeRemove,       // remove a zero-weight edge
  MergeParallel,        // replace parallel edges by one edge carrying their sum
  SplitEdge,            // replace an edge by parallel edges summing to its weight
  EliminateSourceSink,  // delete a vertex with no incoming or no outgoing edges
  InsertSourceSink,     // add such a vertex with its edges
  HubResolve,           // route an edge u -> v through the out-edges of v
  HubUnresolve,         // undo HubResolve
  ReverseAll,           // reverse every edge and transpose every weight
};

template <typename W>
struct NewEdge {
  std::string id;
  std::string source;
  std::string target;
  W weight;
};

// One rewrite step. Which fields are read depends on `kind`:
//   ChangeBasis          vertex, basis
//   NullEdgeAdd          edge, source, target
//   NullEdgeRemove       edge
//   MergeParallel        edges (inputs), edge (result id)
//   SplitEdge            edge, parts (id and weight; endpoints ignored)
//   EliminateSourceSink  vertex, witness (group graphs only)
//   InsertSourceSink     vertex, dim, parts (edges), witness (group graphs only)
//   HubResolve           edge
//   HubUnresolve         edge, source, target, weight, edges (removed ids in
//                        the order of the target's out-edges)
//   ReverseAll           -
template <typename W>
struct TransformStep {
  RewriteKind kind = RewriteKind::ReverseAll;
  std::string vertex;
  std::string edge;
  std::string source, target;
  std::vector<std::string> edges;
  std::vector<NewEdge<W>> parts;
  std::optional<W> weight;
  std::optional<PolyMatrix> basis;
  std::optional<Word> witness;
  std::size_t dim = 1;
};

using MatrixStep = TransformStep<PolyMatrix>;
using GroupStep = TransformStep<GroupRingElt>;

template <typename W>
struct Applied {
  WeightedDigraph<W> graph;
  TransformStep<W> inverse;  // applying it to `graph` restores the input
};

// Throws InvalidMove when the step does not match the graph.
Applied<PolyMatrix> apply_transform(MatrixGraph const& g, MatrixStep const& step);
// Group-level rules: null edges (the source keeps another out-edge), merge and
// split, source elimination and insertion with a witness word f satisfying
// d f / d x = (total weight from the vertex to x) for every generator x, and
// hub resolution. ChangeBasis and ReverseAll are matrix-only.
Applied<GroupRingElt> apply_group_transform(GroupGraph const& g, GroupStep const& step);

// The same step with every group weight replaced by its Phi image.
MatrixStep to_matrix_step(GroupStep const& step, Phi const& phi);

// Same vertex set with dimensions, and the same multiset of
// (source, target, weight) triples. Ids and order are ignored.
bool structurally_equal(MatrixGraph const& a, MatrixGraph const& b);
bool structurally_equal(GroupGraph const& a, GroupGraph const& b);
// Same vertex set and the same summed weight for every ordered vertex pair.
bool aggregate_equal(MatrixGraph const& a, MatrixGraph const& b);

struct EquivalenceReport {
  bool ok = false;
  std::size_t steps_applied = 0;
  std::optional<std::size_t> failed_step;  // 0-based
  std::string message;
  bool zeta_preserved = true;  // det(I - A) unchanged after every step
  bool structural_match = false;
  bool zeta_match = false;
  LaurentPoly zeta_start, zeta_end, zeta_expected;
};

// Replays the script on g and compares the outcome with `expected`.
EquivalenceReport verify_equivalence(MatrixGraph const& g, std::vector<MatrixStep> const& script,
                                     MatrixGraph const& expected);
// Group version: structure is compared under Phi (aggregate weights), and the
// script is replayed a second time as matrix steps on the Phi image.
EquivalenceReport verify_equivalence(GroupGraph const& g, std::vector<GroupStep> const& script,
                                     GroupGraph const& expected, Representation const& rep);

// Script text, one step per line; '|' separates list items.
//   change-basis v1 [[1, t], [0, 1]]
//   null-add e9 v1 -> v2
//   null-remove e9
//   merge e5 = e1 e2
//   split e5 | e1 = t | e2 = 1 - t
//   eliminate v3 [witness=x1 x2 x1^-1]
//   insert v3 dim=1 [witness=...] | e1 v3 -> v1 = t | e2 v3 -> v2 = 1
//   hub e4
//   unhub e4 v1 -> v2 weight=t | e4.e7 e4.e8
//   reverse
std::vector<MatrixStep> parse_matrix_script(std::string_view text);
std::vector<GroupStep> parse_group_script(std::string_view text, Alphabet const& alphabet);
std::string to_string(MatrixStep const& step);
std::string to_string(GroupStep const& step, Alphabet const& alphabet);

}  // namespace holozeta
