#include "holozeta/transform.hpp"

#include <algorithm>
#include <map>

#include "holozeta/error.hpp"
#include "holozeta/text.hpp"

namespace holozeta {

namespace {

constexpr bool kGroup = true;

template <typename W>
W zero_weight(WeightedDigraph<W> const& g, std::string const& s, std::string const& t) {
  if constexpr (std::is_same_v<W, PolyMatrix>)
    return PolyMatrix(g.vertex(s).dim, g.vertex(t).dim);
  else
    return GroupRingElt();
}

template <typename W>
bool is_zero_weight(W const& w) {
  return w.is_zero();
}

// Graph with the same alphabet and vertices, and the given edges.
template <typename W>
WeightedDigraph<W> with_edges(WeightedDigraph<W> const& g, std::vector<Edge<W>> const& edges) {
  WeightedDigraph<W> out(g.alphabet());
  for (auto const& v : g.vertices()) out.add_vertex(v.id, v.dim);
  for (auto const& e : edges) out.add_edge(e.id, e.source, e.target, e.weight);
  return out;
}

[[noreturn]] void bad(std::string const& msg) { throw InvalidMove(msg); }

template <typename W>
Edge<W> const& require_edge(WeightedDigraph<W> const& g, std::string const& id) {
  auto i = g.edge_index(id);
  if (!i) bad("no edge '" + id + "'");
  return g.edges()[*i];
}

template <typename W>
void require_vertex(WeightedDigraph<W> const& g, std::string const& id) {
  if (!g.has_vertex(id)) bad("no vertex '" + id + "'");
}

// d f / d x must equal the total weight from v to the vertex named x, for
// every generator x.
void check_witness(GroupGraph const& g, std::string const& v, std::vector<NewEdge<GroupRingElt>> const& out_edges,
                   std::optional<Word> const& witness) {
  if (!witness) bad("source elimination on a group-weighted graph needs a witness word");
  std::map<std::string, GroupRingElt> total;
  for (auto const& e : out_edges) {
    if (!find_generator(g.alphabet(), e.target)) bad("edge '" + e.id + "' leads to a vertex that is not a generator");
    total[e.target] += e.weight;
  }
  for (std::size_t x = 0; x < g.alphabet().size(); ++x) {
    auto d = fox_derivative(*witness, x);
    auto it = total.find(g.alphabet()[x]);
    auto expected = it == total.end() ? GroupRingElt() : it->second;
    if (!(d == expected))
      bad("witness derivative by '" + g.alphabet()[x] + "' does not match the weights out of '" + v + "'");
  }
}

template <typename W, bool Group>
Applied<W> apply_step(WeightedDigraph<W> const& g, TransformStep<W> const& step) {
  auto const& edges = g.edges();
  TransformStep<W> inv;
  switch (step.kind) {
    case RewriteKind::ChangeBasis: {
      if constexpr (Group) {
        bad("basis change is not a group-level rule");
      } else {
        require_vertex(g, step.vertex);
        if (!step.basis) bad("basis change needs a matrix");
        auto const& p = *step.basis;
        auto dim = g.vertex(step.vertex).dim;
        if (p.rows() != dim || p.cols() != dim) bad("basis matrix does not match the vertex dimension");
        auto pinv = inverse(p);
        if (!pinv) bad("basis matrix is not invertible over Q[t, 1/t]");
        std::vector<Edge<W>> out = edges;
        for (auto& e : out) {
          if (e.target == step.vertex) e.weight = e.weight * *pinv;
          if (e.source == step.vertex) e.weight = p * e.weight;
        }
        inv.kind = RewriteKind::ChangeBasis;
        inv.vertex = step.vertex;
        inv.basis = *pinv;
        return {with_edges(g, out), inv};
      }
    }
    case RewriteKind::NullEdgeAdd: {
      require_vertex(g, step.source);
      require_vertex(g, step.target);
      if (step.edge.empty() || g.has_edge(step.edge)) bad("null edge needs a fresh id");
      if constexpr (Group)
        if (g.out_edges(step.source).empty()) bad("null edge would start at a sink");
      auto out = edges;
      out.push_back({step.edge, step.source, step.target, zero_weight(g, step.source, step.target)});
      inv.kind = RewriteKind::NullEdgeRemove;
      inv.edge = step.edge;
      return {with_edges(g, out), inv};
    }
    case RewriteKind::NullEdgeRemove: {
      auto e = require_edge(g, step.edge);
      if (!is_zero_weight(e.weight)) bad("edge '" + step.edge + "' is not a null edge");
      if constexpr (Group)
        if (g.out_edges(e.source).size() < 2) bad("null edge origin would become a sink");
      auto out = edges;
      std::erase_if(out, [&](Edge<W> const& x) { return x.id == step.edge; });
      inv.kind = RewriteKind::NullEdgeAdd;
      inv.edge = e.id;
      inv.source = e.source;
      inv.target = e.target;
      return {with_edges(g, out), inv};
    }
    case RewriteKind::MergeParallel: {
      if (step.edges.size() < 2) bad("merge needs at least two edges");
      auto const& first = require_edge(g, step.edges[0]);
      std::vector<std::string> ids = step.edges;
      std::sort(ids.begin(), ids.end());
      if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) bad("merge lists an edge twice");
      W sum = zero_weight(g, first.source, first.target);
      inv.kind = RewriteKind::SplitEdge;
      for (auto const& id : step.edges) {
        auto const& e = require_edge(g, id);
        if (e.source != first.source || e.target != first.target) bad("edges to merge are not parallel");
        sum += e.weight;
        inv.parts.push_back({e.id, e.source, e.target, e.weight});
      }
      auto result_id = step.edge.empty() ? first.id : step.edge;
      if (g.has_edge(result_id) && std::find(step.edges.begin(), step.edges.end(), result_id) == step.edges.end())
        bad("merged edge id '" + result_id + "' is taken");
      std::vector<Edge<W>> out;
      for (auto const& e : edges) {
        if (e.id == first.id)
          out.push_back({result_id, first.source, first.target, sum});
        else if (std::find(step.edges.begin(), step.edges.end(), e.id) == step.edges.end())
          out.push_back(e);
      }
      inv.edge = result_id;
      return {with_edges(g, out), inv};
    }
    case RewriteKind::SplitEdge: {
      auto e = require_edge(g, step.edge);
      if (step.parts.empty()) bad("split needs at least one part");
      W sum = zero_weight(g, e.source, e.target);
      std::vector<Edge<W>> pieces;
      for (auto const& p : step.parts) {
        if (p.id.empty() || (g.has_edge(p.id) && p.id != e.id)) bad("split part id '" + p.id + "' is taken");
        sum += p.weight;
        pieces.push_back({p.id, e.source, e.target, p.weight});
      }
      if (!(sum == e.weight)) bad("split parts do not sum to the weight of '" + e.id + "'");
      std::vector<Edge<W>> out;
      for (auto const& x : edges) {
        if (x.id == e.id)
          out.insert(out.end(), pieces.begin(), pieces.end());
        else
          out.push_back(x);
      }
      inv.kind = RewriteKind::MergeParallel;
      inv.edge = e.id;
      for (auto const& p : pieces) inv.edges.push_back(p.id);
      if (inv.edges.size() == 1) {
        // A one-part split is a rename; undo it as a rename.
        inv.kind = RewriteKind::SplitEdge;
        inv.edge = pieces[0].id;
        inv.parts = {{e.id, e.source, e.target, e.weight}};
        inv.edges.clear();
      }
      return {with_edges(g, out), inv};
    }
    case RewriteKind::EliminateSourceSink: {
      require_vertex(g, step.vertex);
      auto ins = g.in_edges(step.vertex), outs = g.out_edges(step.vertex);
      bool source = ins.empty(), sink = outs.empty();
      if constexpr (Group) {
        if (!source) bad("vertex '" + step.vertex + "' is not a source");
      } else {
        if (!source && !sink) bad("vertex '" + step.vertex + "' is neither a source nor a sink");
      }
      inv.kind = RewriteKind::InsertSourceSink;
      inv.vertex = step.vertex;
      inv.dim = g.vertex(step.vertex).dim;
      inv.witness = step.witness;
      for (auto const& e : source ? outs : ins) inv.parts.push_back({e.id, e.source, e.target, e.weight});
      if constexpr (Group) check_witness(g, step.vertex, inv.parts, step.witness);
      auto out = edges;
      std::erase_if(out, [&](Edge<W> const& x) { return x.source == step.vertex || x.target == step.vertex; });
      WeightedDigraph<W> h(g.alphabet());
      for (auto const& v : g.vertices())
        if (v.id != step.vertex) h.add_vertex(v.id, v.dim);
      for (auto const& e : out) h.add_edge(e.id, e.source, e.target, e.weight);
      return {h, inv};
    }
    case RewriteKind::InsertSourceSink: {
      if (step.vertex.empty() || g.has_vertex(step.vertex)) bad("inserted vertex needs a fresh id");
      bool all_out = std::all_of(step.parts.begin(), step.parts.end(),
                                 [&](NewEdge<W> const& e) { return e.source == step.vertex; });
      bool all_in = std::all_of(step.parts.begin(), step.parts.end(),
                                [&](NewEdge<W> const& e) { return e.target == step.vertex; });
      for (auto const& e : step.parts)
        if (e.source == e.target) bad("inserted vertex cannot carry a loop");
      if (!all_out && !all_in) bad("inserted vertex must be a source or a sink");
      if constexpr (Group) {
        if (!all_out) bad("group-level insertion must create a source");
        check_witness(g, step.vertex, step.parts, step.witness);
      }
      WeightedDigraph<W> h(g.alphabet());
      for (auto const& v : g.vertices()) h.add_vertex(v.id, v.dim);
      try {
        h.add_vertex(step.vertex, step.dim);
        for (auto const& e : edges) h.add_edge(e.id, e.source, e.target, e.weight);
        for (auto const& e : step.parts) h.add_edge(e.id, e.source, e.target, e.weight);
      } catch (InvalidMove const&) {
        throw;
      } catch (Error const& err) {
        bad(std::string("cannot insert vertex: ") + err.what());
      }
      inv.kind = RewriteKind::EliminateSourceSink;
      inv.vertex = step.vertex;
      inv.witness = step.witness;
      return {h, inv};
    }
    case RewriteKind::HubResolve: {
      auto e = require_edge(g, step.edge);
      if (e.source == e.target) bad("hub resolution needs distinct endpoints");
      auto through = g.out_edges(e.target);
      if (!step.edges.empty() && step.edges.size() != through.size())
        bad("hub resolution lists the wrong number of new edge ids");
      auto out = edges;
      std::erase_if(out, [&](Edge<W> const& x) { return x.id == e.id; });
      auto h = with_edges(g, out);
      inv.kind = RewriteKind::HubUnresolve;
      inv.edge = e.id;
      inv.source = e.source;
      inv.target = e.target;
      inv.weight = e.weight;
      for (std::size_t j = 0; j < through.size(); ++j) {
        auto id = step.edges.empty() ? h.fresh_edge_id(e.id + "." + through[j].id) : step.edges[j];
        if (h.has_edge(id)) bad("edge id '" + id + "' is taken");
        h.add_edge(id, e.source, through[j].target, e.weight * through[j].weight);
        inv.edges.push_back(id);
      }
      return {h, inv};
    }
    case RewriteKind::HubUnresolve: {
      require_vertex(g, step.source);
      require_vertex(g, step.target);
      if (step.source == step.target) bad("hub edge needs distinct endpoints");
      if (!step.weight) bad("hub unresolution needs the edge weight");
      if (step.edge.empty() || g.has_edge(step.edge)) bad("restored edge needs a fresh id");
      auto through = g.out_edges(step.target);
      if (through.size() != step.edges.size()) bad("removed edge list does not match the hub's out-edges");
      for (std::size_t j = 0; j < through.size(); ++j) {
        auto const& r = require_edge(g, step.edges[j]);
        if (r.source != step.source || r.target != through[j].target)
          bad("edge '" + r.id + "' does not have the resolved endpoints");
        if (!(r.weight == *step.weight * through[j].weight))
          bad("edge '" + r.id + "' does not carry the resolved weight");
      }
      auto out = edges;
      std::erase_if(out, [&](Edge<W> const& x) {
        return std::find(step.edges.begin(), step.edges.end(), x.id) != step.edges.end();
      });
      out.push_back({step.edge, step.source, step.target, *step.weight});
      inv.kind = RewriteKind::HubResolve;
      inv.edge = step.edge;
      inv.edges = step.edges;
      return {with_edges(g, out), inv};
    }
    case RewriteKind::ReverseAll: {
      if constexpr (Group) {
        bad("reversal is not a group-level rule");
      } else {
        std::vector<Edge<W>> out;
        for (auto const& e : edges) out.push_back({e.id, e.target, e.source, e.weight.transposed()});
        inv.kind = RewriteKind::ReverseAll;
        return {with_edges(g, out), inv};
      }
    }
  }
  bad("unknown rewrite kind");
}

template <typename W>
std::map<std::pair<std::string, std::string>, std::vector<W>> edge_buckets(WeightedDigraph<W> const& g) {
  std::map<std::pair<std::string, std::string>, std::vector<W>> out;
  for (auto const& e : g.edges()) out[{e.source, e.target}].push_back(e.weight);
  return out;
}

template <typename W>
bool same_vertices(WeightedDigraph<W> const& a, WeightedDigraph<W> const& b) {
  if (a.vertices().size() != b.vertices().size()) return false;
  for (auto const& v : a.vertices()) {
    auto i = b.vertex_index(v.id);
    if (!i || b.vertices()[*i].dim != v.dim) return false;
  }
  return true;
}

template <typename W>
bool multiset_equal(std::vector<W> a, std::vector<W> const& b) {
  if (a.size() != b.size()) return false;
  for (auto const& x : b) {
    auto it = std::find(a.begin(), a.end(), x);
    if (it == a.end()) return false;
    a.erase(it);
  }
  return true;
}

template <typename W>
bool structural(WeightedDigraph<W> const& a, WeightedDigraph<W> const& b) {
  if (!same_vertices(a, b)) return false;
  auto ba = edge_buckets(a), bb = edge_buckets(b);
  if (ba.size() != bb.size()) return false;
  for (auto const& [k, ws] : ba) {
    auto it = bb.find(k);
    if (it == bb.end() || !multiset_equal(ws, it->second)) return false;
  }
  return true;
}

}  // namespace

Applied<PolyMatrix> apply_transform(MatrixGraph const& g, MatrixStep const& step) {
  return apply_step<PolyMatrix, !kGroup>(g, step);
}

Applied<GroupRingElt> apply_group_transform(GroupGraph const& g, GroupStep const& step) {
  return apply_step<GroupRingElt, kGroup>(g, step);
}

MatrixStep to_matrix_step(GroupStep const& step, Phi const& phi) {
  MatrixStep m;
  m.kind = step.kind;
  m.vertex = step.vertex;
  m.edge = step.edge;
  m.source = step.source;
  m.target = step.target;
  m.edges = step.edges;
  m.dim = phi.dim();
  for (auto const& p : step.parts) m.parts.push_back({p.id, p.source, p.target, phi(p.weight)});
  if (step.weight) m.weight = phi(*step.weight);
  return m;
}

bool structurally_equal(MatrixGraph const& a, MatrixGraph const& b) { return structural(a, b); }
bool structurally_equal(GroupGraph const& a, GroupGraph const& b) {
  return a.alphabet() == b.alphabet() && structural(a, b);
}

bool aggregate_equal(MatrixGraph const& a, MatrixGraph const& b) {
  if (!same_vertices(a, b)) return false;
  auto sum = [](MatrixGraph const& g) {
    std::map<std::pair<std::string, std::string>, PolyMatrix> out;
    for (auto const& e : g.edges()) {
      auto [it, fresh] = out.try_emplace({e.source, e.target}, e.weight);
      if (!fresh) it->second += e.weight;
    }
    std::erase_if(out, [](auto const& kv) { return kv.second.is_zero(); });
    return out;
  };
  return sum(a) == sum(b);
}

namespace {

template <typename W, typename Apply, typename Zeta>
EquivalenceReport replay(WeightedDigraph<W> const& g, std::vector<TransformStep<W>> const& script, Apply apply,
                         Zeta zeta, WeightedDigraph<W>& end) {
  EquivalenceReport r;
  r.zeta_start = zeta(g);
  end = g;
  for (std::size_t i = 0; i < script.size(); ++i) {
    try {
      end = apply(end, script[i]).graph;
    } catch (Error const& e) {
      r.failed_step = i;
      r.message = "step " + std::to_string(i + 1) + ": " + e.what();
      return r;
    }
    ++r.steps_applied;
    if (!(zeta(end) == r.zeta_start)) {
      r.zeta_preserved = false;
      if (r.message.empty()) r.message = "step " + std::to_string(i + 1) + " changed det(I - A)";
    }
  }
  r.zeta_end = zeta(end);
  return r;
}

}  // namespace

EquivalenceReport verify_equivalence(MatrixGraph const& g, std::vector<MatrixStep> const& script,
                                     MatrixGraph const& expected) {
  MatrixGraph end;
  auto zeta = [](MatrixGraph const& x) { return zeta_reciprocal(x); };
  auto r = replay(g, script, apply_transform, zeta, end);
  if (r.failed_step) return r;
  r.zeta_expected = zeta(expected);
  r.structural_match = structurally_equal(end, expected);
  r.zeta_match = r.zeta_start == r.zeta_expected;
  if (!r.structural_match && r.message.empty()) r.message = "final graph differs from the expected graph";
  r.ok = r.structural_match && r.zeta_match && r.zeta_preserved;
  return r;
}

EquivalenceReport verify_equivalence(GroupGraph const& g, std::vector<GroupStep> const& script,
                                     GroupGraph const& expected, Representation const& rep) {
  GroupGraph end;
  auto zeta = [&](GroupGraph const& x) { return zeta_reciprocal(x, rep); };
  auto r = replay(g, script, apply_group_transform, zeta, end);
  if (r.failed_step) return r;
  r.zeta_expected = zeta(expected);
  auto end_image = apply_representation(end, rep);
  r.structural_match = aggregate_equal(end_image, apply_representation(expected, rep));
  r.zeta_match = r.zeta_start == r.zeta_expected;
  if (!r.structural_match && r.message.empty()) r.message = "final graph differs from the expected graph under Phi";

  // The same script read as matrix rewrites on the Phi image.
  Phi phi(rep, g.alphabet());
  auto m = apply_representation(g, rep);
  bool bridge = true;
  try {
    for (auto const& s : script) m = apply_transform(m, to_matrix_step(s, phi)).graph;
    bridge = structurally_equal(m, end_image);
  } catch (Error const& e) {
    bridge = false;
    if (r.message.empty()) r.message = std::string("matrix replay failed: ") + e.what();
  }
  if (!bridge && r.message.empty()) r.message = "matrix replay disagrees with the group-level result";
  r.ok = r.structural_match && r.zeta_match && r.zeta_preserved && bridge;
  return r;
}

namespace {

std::vector<std::string> words_of(std::string_view s) {
  std::vector<std::string> out;
  for (auto& p : split(s, ' '))
    if (!trim(p).empty()) out.push_back(trim(p));
  return out;
}

// Extracts "key=value" where value runs to the end of the segment.
std::optional<std::string> keyed(std::string& segment, std::string const& key) {
  auto pos = segment.find(key + "=");
  if (pos == std::string::npos) return std::nullopt;
  auto value = trim(segment.substr(pos + key.size() + 1));
  segment = trim(segment.substr(0, pos));
  return value;
}

template <typename W, typename ParseW>
std::vector<TransformStep<W>> parse_script(std::string_view text, ParseW parse_weight, Alphabet const* alphabet) {
  std::vector<TransformStep<W>> out;
  auto lines = content_lines(text);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    auto where = " on line " + std::to_string(li + 1);
    auto segments = split(lines[li], '|');
    for (auto& s : segments) s = trim(s);
    auto head = segments[0];
    auto sp = head.find(' ');
    auto op = head.substr(0, sp);
    auto args = sp == std::string::npos ? std::string() : trim(head.substr(sp));
    TransformStep<W> st;
    auto need = [&](bool ok, char const* msg) {
      if (!ok) throw ParseError(std::string(msg) + where);
    };
    // "<id> <src> -> <tgt>"
    auto endpoints = [&](std::string const& s, std::string& id, std::string& src, std::string& tgt) {
      auto arrow = s.find("->");
      need(arrow != std::string::npos, "expected '<id> <src> -> <tgt>'");
      auto left = words_of(s.substr(0, arrow));
      auto right = words_of(s.substr(arrow + 2));
      need(left.size() == 2 && right.size() == 1, "expected '<id> <src> -> <tgt>'");
      id = left[0];
      src = left[1];
      tgt = right[0];
    };
    try {
      if (op == "change-basis") {
        if constexpr (std::is_same_v<W, PolyMatrix>) {
          auto br = args.find('[');
          need(br != std::string::npos, "expected 'change-basis <v> <matrix>'");
          st.kind = RewriteKind::ChangeBasis;
          st.vertex = trim(args.substr(0, br));
          st.basis = parse_poly_matrix(args.substr(br));
        } else {
          throw ParseError("change-basis is not a group-level rule" + where);
        }
      } else if (op == "null-add") {
        st.kind = RewriteKind::NullEdgeAdd;
        endpoints(args, st.edge, st.source, st.target);
      } else if (op == "null-remove") {
        st.kind = RewriteKind::NullEdgeRemove;
        auto w = words_of(args);
        need(w.size() == 1, "expected 'null-remove <edge>'");
        st.edge = w[0];
      } else if (op == "merge") {
        st.kind = RewriteKind::MergeParallel;
        auto eq = args.find('=');
        need(eq != std::string::npos, "expected 'merge <new> = <e1> <e2> ...'");
        auto lhs = words_of(args.substr(0, eq));
        need(lhs.size() == 1, "expected one merged edge id");
        st.edge = lhs[0];
        st.edges = words_of(args.substr(eq + 1));
      } else if (op == "split") {
        st.kind = RewriteKind::SplitEdge;
        auto w = words_of(args);
        need(w.size() == 1, "expected 'split <edge> | <id> = <w> | ...'");
        st.edge = w[0];
        for (std::size_t i = 1; i < segments.size(); ++i) {
          auto eq = segments[i].find('=');
          need(eq != std::string::npos, "expected '<id> = <weight>'");
          st.parts.push_back({trim(segments[i].substr(0, eq)), "", "", parse_weight(segments[i].substr(eq + 1))});
        }
      } else if (op == "eliminate" || op == "insert") {
        st.kind = op == "eliminate" ? RewriteKind::EliminateSourceSink : RewriteKind::InsertSourceSink;
        if (auto wit = keyed(args, "witness")) {
          need(alphabet != nullptr, "witness words need a generator list");
          st.witness = parse_word(*wit, *alphabet);
        }
        if (auto d = keyed(args, "dim")) st.dim = static_cast<std::size_t>(std::stoul(*d));
        auto w = words_of(args);
        need(w.size() == 1, "expected a vertex id");
        st.vertex = w[0];
        if (op == "insert") {
          for (std::size_t i = 1; i < segments.size(); ++i) {
            auto eq = segments[i].find('=');
            need(eq != std::string::npos, "expected '<id> <src> -> <tgt> = <weight>'");
            NewEdge<W> e{"", "", "", parse_weight(segments[i].substr(eq + 1))};
            endpoints(segments[i].substr(0, eq), e.id, e.source, e.target);
            st.parts.push_back(e);
          }
        }
      } else if (op == "hub") {
        st.kind = RewriteKind::HubResolve;
        auto w = words_of(args);
        need(w.size() == 1, "expected 'hub <edge>'");
        st.edge = w[0];
        if (segments.size() > 1) st.edges = words_of(segments[1]);
      } else if (op == "unhub") {
        st.kind = RewriteKind::HubUnresolve;
        auto wt = keyed(args, "weight");
        need(wt.has_value(), "expected weight=<w>");
        st.weight = parse_weight(*wt);
        endpoints(args, st.edge, st.source, st.target);
        need(segments.size() == 2, "expected '| <removed edge ids>'");
        st.edges = words_of(segments[1]);
      } else if (op == "reverse") {
        need(args.empty(), "'reverse' takes no arguments");
        st.kind = RewriteKind::ReverseAll;
      } else {
        throw ParseError("unknown step '" + op + "'" + where);
      }
    } catch (ParseError const&) {
      throw;
    } catch (Error const& e) {
      throw ParseError(std::string(e.what()) + where);
    } catch (std::exception const&) {
      throw ParseError("malformed step" + where);
    }
    out.push_back(std::move(st));
  }
  return out;
}

template <typename W, typename Show>
std::string show_step(TransformStep<W> const& s, Show show, Alphabet const* alphabet) {
  auto witness = [&]() -> std::string {
    if (!s.witness || !alphabet) return "";
    return " witness=" + to_string(*s.witness, *alphabet);
  };
  auto joined = [](std::vector<std::string> const& ids) {
    std::string out;
    for (auto const& id : ids) out += (out.empty() ? "" : " ") + id;
    return out;
  };
  switch (s.kind) {
    case RewriteKind::ChangeBasis:
      return "change-basis " + s.vertex + " " + (s.basis ? to_string(*s.basis) : "?");
    case RewriteKind::NullEdgeAdd:
      return "null-add " + s.edge + " " + s.source + " -> " + s.target;
    case RewriteKind::NullEdgeRemove:
      return "null-remove " + s.edge;
    case RewriteKind::MergeParallel:
      return "merge " + s.edge + " = " + joined(s.edges);
    case RewriteKind::SplitEdge: {
      std::string out = "split " + s.edge;
      for (auto const& p : s.parts) out += " | " + p.id + " = " + show(p.weight);
      return out;
    }
    case RewriteKind::EliminateSourceSink:
      return "eliminate " + s.vertex + witness();
    case RewriteKind::InsertSourceSink: {
      std::string out = "insert " + s.vertex + " dim=" + std::to_string(s.dim) + witness();
      for (auto const& p : s.parts) out += " | " + p.id + " " + p.source + " -> " + p.target + " = " + show(p.weight);
      return out;
    }
    case RewriteKind::HubResolve:
      return "hub " + s.edge + (s.edges.empty() ? "" : " | " + joined(s.edges));
    case RewriteKind::HubUnresolve:
      return "unhub " + s.edge + " " + s.source + " -> " + s.target + " weight=" + (s.weight ? show(*s.weight) : "?") +
             " | " + joined(s.edges);
    case RewriteKind::ReverseAll:
      return "reverse";
  }
  return "?";
}

}  // namespace

std::vector<MatrixStep> parse_matrix_script(std::string_view text) {
  return parse_script<PolyMatrix>(
      text, [](std::string const& w) { return parse_poly_matrix(w); }, nullptr);
}

std::vector<GroupStep> parse_group_script(std::string_view text, Alphabet const& alphabet) {
  return parse_script<GroupRingElt>(
      text, [&](std::string const& w) { return parse_group_ring(w, alphabet); }, &alphabet);
}

std::string to_string(MatrixStep const& step) {
  return show_step(step, [](PolyMatrix const& w) { return to_string(w); }, nullptr);
}

std::string to_string(GroupStep const& step, Alphabet const& alphabet) {
  return show_step(step, [&](GroupRingElt const& w) { return to_string(w, alphabet); }, &alphabet);
}

}  // namespace holozeta
