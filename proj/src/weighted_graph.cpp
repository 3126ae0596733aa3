#include "holozeta/weighted_graph.hpp"

#include <algorithm>
#include <cctype>

#include "holozeta/error.hpp"
#include "holozeta/text.hpp"

namespace holozeta {

template <typename W>
void WeightedDigraph<W>::add_vertex(std::string const& id, std::size_t dim) {
  if (id.empty()) throw ValidationError("empty vertex id");
  if (has_vertex(id)) throw ValidationError("duplicate vertex '" + id + "'");
  if (dim == 0) throw DimensionError("vertex '" + id + "' has dimension 0");
  if constexpr (std::is_same_v<W, GroupRingElt>)
    if (dim != 1) throw DimensionError("group-weighted vertices have dimension 1");
  vertices_.push_back({id, dim});
}

template <typename W>
void WeightedDigraph<W>::check_weight(Vertex const& s, Vertex const& t, W const& w) const {
  if constexpr (std::is_same_v<W, PolyMatrix>) {
    if (w.rows() != s.dim || w.cols() != t.dim)
      throw DimensionError("weight of edge " + s.id + " -> " + t.id + " is " + std::to_string(w.rows()) + "x" +
                           std::to_string(w.cols()) + ", expected " + std::to_string(s.dim) + "x" +
                           std::to_string(t.dim));
  } else {
    for (auto const& [word, c] : w.terms())
      for (auto const& l : word.letters())
        if (l.gen >= alphabet_.size()) throw LookupError("weight uses a generator outside the alphabet");
  }
}

template <typename W>
void WeightedDigraph<W>::add_edge(std::string const& id, std::string const& source, std::string const& target,
                                  W weight) {
  if (id.empty()) throw ValidationError("empty edge id");
  if (has_edge(id)) throw ValidationError("duplicate edge '" + id + "'");
  check_weight(vertex(source), vertex(target), weight);
  edges_.push_back({id, source, target, std::move(weight)});
}

template <typename W>
void WeightedDigraph<W>::remove_edge(std::string const& id) {
  auto i = edge_index(id);
  if (!i) throw LookupError("unknown edge '" + id + "'");
  edges_.erase(edges_.begin() + static_cast<std::ptrdiff_t>(*i));
}

template <typename W>
void WeightedDigraph<W>::remove_vertex(std::string const& id) {
  auto i = vertex_index(id);
  if (!i) throw LookupError("unknown vertex '" + id + "'");
  for (auto const& e : edges_)
    if (e.source == id || e.target == id) throw ValidationError("vertex '" + id + "' still has edges");
  vertices_.erase(vertices_.begin() + static_cast<std::ptrdiff_t>(*i));
}

template <typename W>
void WeightedDigraph<W>::set_weight(std::string const& edge_id, W weight) {
  auto i = edge_index(edge_id);
  if (!i) throw LookupError("unknown edge '" + edge_id + "'");
  auto& e = edges_[*i];
  check_weight(vertex(e.source), vertex(e.target), weight);
  e.weight = std::move(weight);
}

template <typename W>
std::optional<std::size_t> WeightedDigraph<W>::vertex_index(std::string_view id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].id == id) return i;
  return std::nullopt;
}

template <typename W>
std::optional<std::size_t> WeightedDigraph<W>::edge_index(std::string_view id) const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].id == id) return i;
  return std::nullopt;
}

template <typename W>
Vertex const& WeightedDigraph<W>::vertex(std::string_view id) const {
  auto i = vertex_index(id);
  if (!i) throw LookupError("unknown vertex '" + std::string(id) + "'");
  return vertices_[*i];
}

template <typename W>
Edge<W> const& WeightedDigraph<W>::edge(std::string_view id) const {
  auto i = edge_index(id);
  if (!i) throw LookupError("unknown edge '" + std::string(id) + "'");
  return edges_[*i];
}

template <typename W>
std::vector<Edge<W>> WeightedDigraph<W>::out_edges(std::string_view v) const {
  std::vector<Edge<W>> out;
  for (auto const& e : edges_)
    if (e.source == v) out.push_back(e);
  return out;
}

template <typename W>
std::vector<Edge<W>> WeightedDigraph<W>::in_edges(std::string_view v) const {
  std::vector<Edge<W>> out;
  for (auto const& e : edges_)
    if (e.target == v) out.push_back(e);
  return out;
}

template <typename W>
std::string WeightedDigraph<W>::fresh_edge_id(std::string const& stem) const {
  if (!has_edge(stem)) return stem;
  for (std::size_t k = 2;; ++k) {
    auto id = stem + "~" + std::to_string(k);
    if (!has_edge(id)) return id;
  }
}

template class WeightedDigraph<PolyMatrix>;
template class WeightedDigraph<GroupRingElt>;

PolyMatrix adjacency_matrix(MatrixGraph const& g) {
  std::vector<std::size_t> offset;
  std::size_t n = 0;
  for (auto const& v : g.vertices()) {
    offset.push_back(n);
    n += v.dim;
  }
  PolyMatrix a(n, n);
  for (auto const& e : g.edges()) {
    auto s = *g.vertex_index(e.source), t = *g.vertex_index(e.target);
    for (std::size_t i = 0; i < e.weight.rows(); ++i)
      for (std::size_t j = 0; j < e.weight.cols(); ++j) a(offset[s] + i, offset[t] + j) += e.weight(i, j);
  }
  return a;
}

MatrixGraph apply_representation(GroupGraph const& g, Representation const& rep) {
  Phi phi(rep, g.alphabet());
  MatrixGraph out;
  for (auto const& v : g.vertices()) out.add_vertex(v.id, rep.dim());
  for (auto const& e : g.edges()) out.add_edge(e.id, e.source, e.target, phi(e.weight));
  return out;
}

LaurentPoly zeta_reciprocal(MatrixGraph const& g) {
  auto a = adjacency_matrix(g);
  return det(PolyMatrix::identity(a.rows()) - a);
}

LaurentPoly zeta_reciprocal(GroupGraph const& g, Representation const& rep) {
  return zeta_reciprocal(apply_representation(g, rep));
}

namespace {

struct EdgeLine {
  std::string id, source, target, weight;
};

bool is_identifier_like(std::string const& s);

// "edge <id> <src> -> <tgt> weight=<literal>"
EdgeLine parse_edge_line(std::string const& line, std::size_t lineno) {
  auto where = " on line " + std::to_string(lineno);
  auto body = trim(std::string_view(line).substr(4));
  auto sp = body.find(' ');
  if (sp == std::string::npos) throw ParseError("expected 'edge <id> <src> -> <tgt> weight=<w>'" + where);
  auto id = body.substr(0, sp);
  auto rest = body.substr(sp);
  auto arrow = rest.find("->");
  auto wpos = rest.find("weight=");
  if (!is_identifier_like(id) || arrow == std::string::npos || wpos == std::string::npos || wpos < arrow)
    throw ParseError("expected 'edge <id> <src> -> <tgt> weight=<w>'" + where);
  auto src = trim(rest.substr(0, arrow));
  auto tgt = trim(rest.substr(arrow + 2, wpos - arrow - 2));
  if (src.empty() || tgt.empty()) throw ParseError("missing edge endpoint" + where);
  return {id, src, tgt, rest.substr(wpos + 7)};
}

bool is_identifier_like(std::string const& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '~' || c == ':';
  });
}

template <typename W, typename ParseWeight>
WeightedDigraph<W> parse_graph(std::vector<std::string> const& lines, std::size_t first, WeightedDigraph<W> g,
                               ParseWeight parse_weight) {
  for (std::size_t i = first; i < lines.size(); ++i) {
    auto const& line = lines[i];
    auto where = " on line " + std::to_string(i + 1);
    try {
      if (line.rfind("vertex", 0) == 0) {
        auto parts = split(trim(line.substr(6)), ' ');
        std::erase_if(parts, [](std::string const& p) { return p.empty(); });
        if (parts.empty() || parts.size() > 2 || !is_identifier_like(parts[0]))
          throw ParseError("expected 'vertex <id> [dim=<n>]'" + where);
        std::size_t dim = 1;
        if (parts.size() == 2) {
          if (parts[1].rfind("dim=", 0) != 0) throw ParseError("expected dim=<n>" + where);
          Scanner ds(std::string_view(parts[1]).substr(4));
          auto d = ds.integer();
          if (!d || *d <= 0 || !ds.at_end()) throw ParseError("bad dimension" + where);
          dim = static_cast<std::size_t>(*d);
        }
        g.add_vertex(parts[0], dim);
      } else if (line.rfind("edge", 0) == 0) {
        auto e = parse_edge_line(line, i + 1);
        g.add_edge(e.id, e.source, e.target, parse_weight(e.weight, g));
      } else {
        throw ParseError("unknown declaration '" + line + "'" + where);
      }
    } catch (ParseError const&) {
      throw;
    } catch (Error const& err) {
      throw ParseError(std::string(err.what()) + where);
    }
  }
  return g;
}

}  // namespace

bool is_group_graph_text(std::string_view text) {
  auto lines = content_lines(text);
  return !lines.empty() && lines[0].rfind("gens:", 0) == 0;
}

MatrixGraph parse_matrix_graph(std::string_view text) {
  auto lines = content_lines(text);
  return parse_graph<PolyMatrix>(lines, 0, MatrixGraph(),
                                 [](std::string const& w, MatrixGraph const&) { return parse_poly_matrix(w); });
}

GroupGraph parse_group_graph(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty() || lines[0].rfind("gens:", 0) != 0) throw ParseError("group graph must start with 'gens:'");
  Alphabet alphabet;
  for (auto& p : split(trim(lines[0].substr(5)), ' '))
    if (!p.empty()) alphabet.push_back(p);
  return parse_graph<GroupRingElt>(
      lines, 1, GroupGraph(alphabet),
      [](std::string const& w, GroupGraph const& g) { return parse_group_ring(w, g.alphabet()); });
}

std::string to_string(MatrixGraph const& g) {
  std::string out;
  for (auto const& v : g.vertices()) out += "vertex " + v.id + " dim=" + std::to_string(v.dim) + "\n";
  for (auto const& e : g.edges())
    out += "edge " + e.id + " " + e.source + " -> " + e.target + " weight=" + to_string(e.weight) + "\n";
  return out;
}

std::string to_string(GroupGraph const& g) {
  std::string out = "gens:";
  for (auto const& a : g.alphabet()) out += " " + a;
  out += "\n";
  for (auto const& v : g.vertices()) out += "vertex " + v.id + "\n";
  for (auto const& e : g.edges())
    out += "edge " + e.id + " " + e.source + " -> " + e.target + " weight=" + to_string(e.weight, g.alphabet()) +
           "\n";
  return out;
}

namespace {

std::string dot_escape(std::string const& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

template <typename W, typename Label>
std::string dot(WeightedDigraph<W> const& g, Label label) {
  std::string out = "digraph G {\n";
  for (auto const& v : g.vertices()) out += "  \"" + dot_escape(v.id) + "\";\n";
  for (auto const& e : g.edges())
    out += "  \"" + dot_escape(e.source) + "\" -> \"" + dot_escape(e.target) + "\" [label=\"" +
           dot_escape(e.id + ": " + label(e.weight)) + "\"];\n";
  return out + "}\n";
}

}  // namespace

std::string to_dot(MatrixGraph const& g) {
  return dot(g, [](PolyMatrix const& w) { return to_string(w); });
}

std::string to_dot(GroupGraph const& g) {
  return dot(g, [&](GroupRingElt const& w) { return to_string(w, g.alphabet()); });
}

}  // namespace holozeta
