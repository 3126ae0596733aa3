#include "holozeta/quandle.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <sstream>

#include "holozeta/error.hpp"
#include "holozeta/text.hpp"

namespace holozeta {

namespace {

using Index = std::size_t;

std::vector<Violation> concat(std::vector<std::vector<Violation>>& parts) {
  std::vector<Violation> out;
  for (auto& p : parts)
    for (auto& v : p) out.push_back(std::move(v));
  return out;
}

// Runs body(a, out) for every a, in parallel if asked, and concatenates the
// per-a results in order.
template <typename Body>
std::vector<Violation> for_each_first(Index n, bool parallel, Body body) {
  std::vector<std::vector<Violation>> parts(n);
  auto m = static_cast<std::ptrdiff_t>(n);
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t a = 0; a < m; ++a) body(static_cast<Index>(a), parts[static_cast<Index>(a)]);
  } else {
    for (std::ptrdiff_t a = 0; a < m; ++a) body(static_cast<Index>(a), parts[static_cast<Index>(a)]);
  }
  return concat(parts);
}

bool square(PolyTable const& t, Index n) {
  if (t.size() != n) return false;
  for (auto const& row : t)
    if (row.size() != n) return false;
  return true;
}

std::vector<Violation> pair_violations(FiniteQuandle const& q, AlexanderPair const& f, bool parallel) {
  Index n = q.size();
  if (!square(f.f1, n) || !square(f.f2, n)) return {{"shape", {}}};
  std::vector<Violation> out;
  for (Index a = 0; a < n; ++a)
    if (f.f1[a][a] + f.f2[a][a] != LaurentPoly(1)) out.push_back({"1", {a}});
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (!f.f1[a][b].is_unit()) out.push_back({"2", {a, b}});
  auto triples = for_each_first(n, parallel, [&](Index a, std::vector<Violation>& found) {
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c) {
        Index ab = q.op(a, b), ac = q.op(a, c), bc = q.op(b, c);
        if (f.f1[ab][c] * f.f1[a][b] != f.f1[ac][bc] * f.f1[a][c]) found.push_back({"3a", {a, b, c}});
        if (f.f1[ab][c] * f.f2[a][b] != f.f2[ac][bc] * f.f1[b][c]) found.push_back({"3b", {a, b, c}});
        if (f.f2[ab][c] != f.f1[ac][bc] * f.f2[a][c] + f.f2[ac][bc] * f.f2[b][c])
          found.push_back({"3c", {a, b, c}});
      }
  });
  for (auto& v : triples) out.push_back(std::move(v));
  return out;
}

std::vector<Violation> weight_violations(FiniteQuandle const& q, CrossingWeights const& g, bool parallel) {
  Index n = q.size();
  if (!square(g.g1_pos, n) || !square(g.g2_pos, n) || !square(g.g1_neg, n) || !square(g.g2_neg, n))
    return {{"shape", {}}};
  LaurentPoly one(1);
  std::vector<Violation> out;
  for (Index a = 0; a < n; ++a)
    if (g.g1_neg[a][a] + g.g2_neg[a][a] != one) out.push_back({"A", {a}});
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      Index up = q.op(a, b), down = q.inv(a, b);
      if (g.g1_pos[a][b] * g.g1_neg[up][b] != one) out.push_back({"B1", {a, b}});
      if (!(g.g2_pos[a][b] + g.g1_pos[a][b] * g.g2_neg[up][b]).is_zero()) out.push_back({"B2", {a, b}});
      if (g.g1_neg[a][b] * g.g1_pos[down][b] != one) out.push_back({"B3", {a, b}});
      if (!(g.g2_neg[a][b] + g.g1_neg[a][b] * g.g2_pos[down][b]).is_zero()) out.push_back({"B4", {a, b}});
    }
  auto triples = for_each_first(n, parallel, [&](Index a, std::vector<Violation>& found) {
    auto const& g1 = g.g1_pos;
    auto const& g2 = g.g2_pos;
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c) {
        Index ab = q.op(a, b), ac = q.op(a, c), bc = q.op(b, c);
        if (g1[a][b] * g1[ab][c] != g1[a][c] * g1[ac][bc]) found.push_back({"C1", {a, b, c}});
        if (g2[a][b] * g1[b][c] != g1[a][c] * g2[ac][bc]) found.push_back({"C2", {a, b, c}});
        if (g1[a][b] * g2[ab][c] + g2[a][b] * g2[b][c] != g2[a][c]) found.push_back({"C3", {a, b, c}});
      }
  });
  for (auto& v : triples) out.push_back(std::move(v));
  return out;
}

bool consistent_upto(FiniteQuandle const& q, KnotDiagram const& d, Coloring const& c, Index k,
                     std::vector<std::vector<Index>> const& closing) {
  for (auto a : closing[k]) {
    auto x = d.crossing(a);
    Index expect = x.sign > 0 ? q.op(c[x.under_in], c[x.over]) : q.inv(c[x.under_in], c[x.over]);
    if (c[x.under_out] != expect) return false;
  }
  return true;
}

std::vector<Coloring> colorings(FiniteQuandle const& q, KnotDiagram const& d, bool parallel) {
  Index n = q.size();
  Index arcs = d.arc_count();
  // closing[k]: crossings whose arcs are all at most k, with k the largest.
  std::vector<std::vector<Index>> closing(arcs);
  for (Index a = 0; a < d.crossing_count(); ++a) {
    auto x = d.crossing(a);
    closing[std::max({x.under_in, x.under_out, x.over})].push_back(a);
  }
  std::vector<std::vector<Coloring>> parts(n);
  auto search = [&](Index first) {
    Coloring c(arcs, 0);
    c[0] = first;
    if (!consistent_upto(q, d, c, 0, closing)) return;
    Index k = 1;
    // Depth-first search over arcs 1..arcs-1 with c[k] the next colour to try.
    while (true) {
      if (k == arcs) {
        parts[first].push_back(c);
        --k;
        if (k == 0) return;
        ++c[k];
        continue;
      }
      if (c[k] == n) {
        c[k] = 0;
        --k;
        if (k == 0) return;
        ++c[k];
        continue;
      }
      if (consistent_upto(q, d, c, k, closing))
        ++k;
      else
        ++c[k];
    }
  };
  auto m = static_cast<std::ptrdiff_t>(n);
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t a = 0; a < m; ++a) search(static_cast<Index>(a));
  } else {
    for (std::ptrdiff_t a = 0; a < m; ++a) search(static_cast<Index>(a));
  }
  std::vector<Coloring> out;
  for (auto& p : parts)
    for (auto& c : p) out.push_back(std::move(c));
  return out;
}

void require(std::vector<Violation> const& found, std::string const& what) {
  if (!found.empty()) throw ValidationError(what + ": " + to_string(found.front()));
}

PolyTable table_of(Index n) { return PolyTable(n, std::vector<LaurentPoly>(n)); }

std::map<std::string, PolyTable> parse_blocks(std::string_view text, std::vector<std::string> const& labels) {
  std::map<std::string, PolyTable> blocks;
  PolyTable* current = nullptr;
  for (auto const& line : content_lines(text)) {
    if (line.back() == ':') {
      auto label = trim(line.substr(0, line.size() - 1));
      if (std::find(labels.begin(), labels.end(), label) == labels.end())
        throw ParseError("unknown block '" + label + "'");
      if (blocks.count(label)) throw ParseError("duplicate block '" + label + "'");
      current = &blocks[label];
      continue;
    }
    if (!current) throw ParseError("table row before a block label");
    std::vector<LaurentPoly> row;
    for (auto const& entry : split(line, ';')) row.push_back(parse_laurent(trim(entry)));
    current->push_back(std::move(row));
  }
  for (auto const& label : labels) {
    auto it = blocks.find(label);
    if (it == blocks.end()) throw ParseError("missing block '" + label + "'");
    if (!square(it->second, it->second.size())) throw ParseError("block '" + label + "' is not square");
  }
  auto n = blocks.at(labels.front()).size();
  for (auto const& [label, t] : blocks)
    if (t.size() != n) throw ParseError("blocks have different sizes");
  return blocks;
}

void write_block(std::ostringstream& os, std::string const& label, PolyTable const& t) {
  os << label << ":\n";
  for (auto const& row : t) {
    for (Index b = 0; b < row.size(); ++b) os << (b ? "; " : "") << to_string(row[b]);
    os << '\n';
  }
}

}  // namespace

std::string to_string(Violation const& v) {
  static char const* names[] = {"a", "b", "c"};
  std::string s = "(cond=" + v.condition;
  for (Index i = 0; i < v.elements.size(); ++i)
    s += ", " + std::string(i < 3 ? names[i] : "x") + "=" + std::to_string(v.elements[i]);
  return s + ")";
}

std::vector<Violation> quandle_violations(QuandleTable const& table) {
  Index n = table.size();
  for (Index a = 0; a < n; ++a) {
    if (table[a].size() != n) return {{"range", {a}}};
    for (Index b = 0; b < n; ++b)
      if (table[a][b] >= n) return {{"range", {a, b}}};
  }
  std::vector<Violation> out;
  for (Index a = 0; a < n; ++a)
    if (table[a][a] != a) out.push_back({"1", {a}});
  for (Index b = 0; b < n; ++b) {
    std::vector<bool> seen(n, false);
    for (Index a = 0; a < n; ++a) {
      if (seen[table[a][b]]) {
        out.push_back({"2", {a, b}});
        break;
      }
      seen[table[a][b]] = true;
    }
  }
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[table[a][c]][table[b][c]]) out.push_back({"3", {a, b, c}});
  return out;
}

FiniteQuandle::FiniteQuandle(QuandleTable table) : table_(std::move(table)) {
  if (table_.empty()) throw ValidationError("quandle must be nonempty");
  require(quandle_violations(table_), "not a quandle");
  Index n = table_.size();
  inverse_.assign(n, std::vector<Index>(n));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) inverse_[table_[a][b]][b] = a;
}

FiniteQuandle FiniteQuandle::dihedral(std::size_t n) {
  QuandleTable t(n, std::vector<Index>(n));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) t[a][b] = (2 * b + n - a) % n;
  return FiniteQuandle(std::move(t));
}

FiniteQuandle FiniteQuandle::trivial(std::size_t n) {
  QuandleTable t(n, std::vector<Index>(n));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) t[a][b] = a;
  return FiniteQuandle(std::move(t));
}

AlexanderPair constant_pair(std::size_t n, LaurentPoly const& u) {
  return {PolyTable(n, std::vector<LaurentPoly>(n, u)), PolyTable(n, std::vector<LaurentPoly>(n, LaurentPoly(1) - u))};
}

AlexanderPair twist_pair(FiniteQuandle const& q, AlexanderPair const& f, std::vector<LaurentPoly> const& lambda) {
  Index n = q.size();
  if (lambda.size() != n) throw DimensionError("twist needs one unit per element");
  std::vector<LaurentPoly> inverse;
  for (auto const& l : lambda) {
    auto i = l.unit_inverse();
    if (!i) throw ValidationError("twist values must be units");
    inverse.push_back(*i);
  }
  AlexanderPair out{table_of(n), table_of(n)};
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      auto const& li = inverse[q.op(a, b)];
      out.f1[a][b] = li * f.f1[a][b] * lambda[a];
      out.f2[a][b] = li * f.f2[a][b] * lambda[b];
    }
  return out;
}

std::vector<Violation> alexander_pair_violations(FiniteQuandle const& q, AlexanderPair const& f) {
  return pair_violations(q, f, true);
}

void alexander_pair_check(FiniteQuandle const& q, AlexanderPair const& f) {
  require(alexander_pair_violations(q, f), "not an Alexander pair");
}

std::pair<std::size_t, LaurentPoly> derived_star(FiniteQuandle const& q, AlexanderPair const& f,
                                                 std::pair<std::size_t, LaurentPoly> const& p,
                                                 std::pair<std::size_t, LaurentPoly> const& r) {
  auto [a, x] = p;
  auto [b, y] = r;
  return {q.op(a, b), f.f1.at(a).at(b) * x + f.f2.at(a).at(b) * y};
}

CrossingWeights f_twisted_weights(FiniteQuandle const& q, AlexanderPair const& f) {
  Index n = q.size();
  if (!square(f.f1, n) || !square(f.f2, n)) throw DimensionError("pair tables must match the quandle size");
  CrossingWeights g{table_of(n), table_of(n), table_of(n), table_of(n)};
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      auto inverse = f.f1[a][b].unit_inverse();
      if (!inverse) throw ValidationError("f1 is not a unit: " + to_string(Violation{"2", {a, b}}));
      g.g1_pos[a][b] = *inverse;
      g.g2_pos[a][b] = -(*inverse * f.f2[a][b]);
      Index down = q.inv(a, b);
      g.g1_neg[a][b] = f.f1[down][b];
      g.g2_neg[a][b] = f.f2[down][b];
    }
  return g;
}

std::vector<Violation> holonomy_violations(FiniteQuandle const& q, CrossingWeights const& g) {
  return weight_violations(q, g, true);
}

AlexanderPair recover_pair(FiniteQuandle const& q, CrossingWeights const& g) {
  require(holonomy_violations(q, g), "holonomy conditions fail");
  Index n = q.size();
  AlexanderPair f{table_of(n), table_of(n)};
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      f.f1[a][b] = g.g1_neg[q.op(a, b)][b];
      f.f2[a][b] = g.g2_neg[q.op(a, b)][b];
    }
  return f;
}

std::optional<std::size_t> coloring_violation(FiniteQuandle const& q, KnotDiagram const& d, Coloring const& c) {
  if (c.size() != d.arc_count()) throw DimensionError("colouring needs one colour per arc");
  for (auto x : c)
    if (x >= q.size()) throw ValidationError("colour out of range");
  for (Index a = 0; a < d.crossing_count(); ++a) {
    auto x = d.crossing(a);
    Index expect = x.sign > 0 ? q.op(c[x.under_in], c[x.over]) : q.inv(c[x.under_in], c[x.over]);
    if (c[x.under_out] != expect) return a;
  }
  return std::nullopt;
}

std::vector<Coloring> enumerate_colorings(FiniteQuandle const& q, KnotDiagram const& d) {
  return colorings(q, d, true);
}

MatrixGraph quandle_weighted_graph(FiniteQuandle const& q, KnotDiagram const& d, Coloring const& c,
                                   CrossingWeights const& g) {
  if (auto bad = coloring_violation(q, d, c))
    throw ValidationError("not a colouring at crossing " + std::to_string(*bad + 1));
  Index n = q.size();
  if (!square(g.g1_pos, n) || !square(g.g2_pos, n) || !square(g.g1_neg, n) || !square(g.g2_neg, n))
    throw DimensionError("weight tables must match the quandle size");
  auto names = arc_names(d);
  MatrixGraph graph;
  for (auto const& name : names) graph.add_vertex(name);
  for (Index a = 0; a + 1 < d.crossing_count(); ++a) {
    auto x = d.crossing(a);
    Index i = c[x.under_in], j = c[x.over];
    auto const& g1 = x.sign > 0 ? g.g1_pos : g.g1_neg;
    auto const& g2 = x.sign > 0 ? g.g2_pos : g.g2_neg;
    auto stem = "c" + std::to_string(a + 1);
    graph.add_edge(stem + ":1", names[x.under_in], names[x.under_out], PolyMatrix::scalar(g1[i][j]));
    graph.add_edge(stem + ":2", names[x.under_in], names[x.over], PolyMatrix::scalar(g2[i][j]));
  }
  return graph;
}

namespace reference {

std::vector<Violation> alexander_pair_violations(FiniteQuandle const& q, AlexanderPair const& f) {
  return pair_violations(q, f, false);
}

std::vector<Violation> holonomy_violations(FiniteQuandle const& q, CrossingWeights const& g) {
  return weight_violations(q, g, false);
}

std::vector<Coloring> enumerate_colorings(FiniteQuandle const& q, KnotDiagram const& d) {
  return colorings(q, d, false);
}

}  // namespace reference

QuandleTable parse_quandle_table(std::string_view text) {
  std::vector<std::int64_t> numbers;
  for (auto const& line : content_lines(text)) {
    Scanner s(line);
    while (!s.at_end()) {
      auto v = s.integer();
      if (!v || *v < 0) s.fail("expected a nonnegative integer");
      numbers.push_back(*v);
    }
  }
  if (numbers.empty()) throw ParseError("empty quandle");
  auto n = static_cast<Index>(numbers.front());
  if (numbers.size() != 1 + n * n) throw ParseError("expected " + std::to_string(n * n) + " table entries");
  QuandleTable t(n, std::vector<Index>(n));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) t[a][b] = static_cast<Index>(numbers[1 + a * n + b]);
  return t;
}

FiniteQuandle parse_quandle(std::string_view text) { return FiniteQuandle(parse_quandle_table(text)); }

std::string to_string(FiniteQuandle const& q) {
  std::ostringstream os;
  os << q.size() << '\n';
  for (auto const& row : q.table()) {
    for (Index b = 0; b < row.size(); ++b) os << (b ? " " : "") << row[b];
    os << '\n';
  }
  return os.str();
}

AlexanderPair parse_alexander_pair(std::string_view text) {
  auto blocks = parse_blocks(text, {"f1", "f2"});
  return {blocks["f1"], blocks["f2"]};
}

std::string to_string(AlexanderPair const& f) {
  std::ostringstream os;
  write_block(os, "f1", f.f1);
  write_block(os, "f2", f.f2);
  return os.str();
}

CrossingWeights parse_crossing_weights(std::string_view text) {
  auto blocks = parse_blocks(text, {"g1+", "g2+", "g1-", "g2-"});
  return {blocks["g1+"], blocks["g2+"], blocks["g1-"], blocks["g2-"]};
}

std::string to_string(CrossingWeights const& g) {
  std::ostringstream os;
  write_block(os, "g1+", g.g1_pos);
  write_block(os, "g2+", g.g2_pos);
  write_block(os, "g1-", g.g1_neg);
  write_block(os, "g2-", g.g2_neg);
  return os.str();
}

std::string to_string(Coloring const& c, KnotDiagram const& d) {
  auto names = arc_names(d);
  std::string s;
  for (Index i = 0; i < c.size(); ++i) s += (i ? " " : "") + names.at(i) + "=" + std::to_string(c[i]);
  return s;
}

}  // namespace holozeta
