#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "holozeta/group_ring.hpp"
#include "holozeta/laurent.hpp"
#include "holozeta/matrix.hpp"
#include "holozeta/representation.hpp"

namespace holozeta {

struct Vertex {
  std::string id;
  std::size_t dim = 1;
  friend bool operator==(Vertex const&, Vertex const&) = default;
};

template <typename W>
struct Edge {
  std::string id;
  std::string source;
  std::string target;
  W weight;
  friend bool operator==(Edge const&, Edge const&) = default;
};

// Directed multigraph with weighted edges. Vertices and edges keep insertion
// order, which fixes the block order of the adjacency matrix.
//
// W is PolyMatrix (edge u -> v carries a dim(u) x dim(v) matrix) or
// GroupRingElt (all vertices have dimension 1 and weights are written in the
// graph's alphabet).
template <typename W>
class WeightedDigraph {
 public:
  WeightedDigraph() = default;
  explicit WeightedDigraph(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  Alphabet const& alphabet() const noexcept { return alphabet_; }
  std::vector<Vertex> const& vertices() const noexcept { return vertices_; }
  std::vector<Edge<W>> const& edges() const noexcept { return edges_; }

  // Throws ValidationError on duplicate ids, LookupError on unknown endpoints,
  // DimensionError if a matrix weight does not fit its endpoints.
  void add_vertex(std::string const& id, std::size_t dim = 1);
  void add_edge(std::string const& id, std::string const& source, std::string const& target, W weight);
  void remove_edge(std::string const& id);
  // Removes a vertex that has no incident edges.
  void remove_vertex(std::string const& id);
  void set_weight(std::string const& edge_id, W weight);

  std::optional<std::size_t> vertex_index(std::string_view id) const;
  std::optional<std::size_t> edge_index(std::string_view id) const;
  Vertex const& vertex(std::string_view id) const;
  Edge<W> const& edge(std::string_view id) const;
  bool has_vertex(std::string_view id) const { return vertex_index(id).has_value(); }
  bool has_edge(std::string_view id) const { return edge_index(id).has_value(); }
  std::vector<Edge<W>> out_edges(std::string_view v) const;
  std::vector<Edge<W>> in_edges(std::string_view v) const;
  // An unused edge id derived from `stem`.
  std::string fresh_edge_id(std::string const& stem) const;

 private:
  void check_weight(Vertex const& s, Vertex const& t, W const& w) const;
  Alphabet alphabet_;
  std::vector<Vertex> vertices_;
  std::vector<Edge<W>> edges_;
};

using MatrixGraph = WeightedDigraph<PolyMatrix>;
using GroupGraph = WeightedDigraph<GroupRingElt>;

extern template class WeightedDigraph<PolyMatrix>;
extern template class WeightedDigraph<GroupRingElt>;

// Block matrix A with A[u][v] = sum of weights of edges u -> v.
PolyMatrix adjacency_matrix(MatrixGraph const& g);
// Replaces each group weight by its image under Phi; every vertex gets rep.dim().
MatrixGraph apply_representation(GroupGraph const& g, Representation const& rep);
// det(I - A(G)).
LaurentPoly zeta_reciprocal(MatrixGraph const& g);
LaurentPoly zeta_reciprocal(GroupGraph const& g, Representation const& rep);

// Text form, one declaration per line:
//   vertex v1 dim=2
//   edge e1 v1 -> v2 weight=[[t, 0], [1, 1]]
// A group-weighted graph starts with "gens: x1 x2 ..." and uses group ring
// literals as weights.
MatrixGraph parse_matrix_graph(std::string_view text);
GroupGraph parse_group_graph(std::string_view text);
// True if the text declares generators, i.e. describes a group-weighted graph.
bool is_group_graph_text(std::string_view text);
std::string to_string(MatrixGraph const& g);
std::string to_string(GroupGraph const& g);
std::string to_dot(MatrixGraph const& g);
std::string to_dot(GroupGraph const& g);

}  // namespace holozeta
