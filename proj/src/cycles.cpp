#include "holozeta/cycles.hpp"


#include "holozeta/error.hpp"

namespace holozeta {

namespace {

struct EdgeTable {
  std::vector<std::size_t> source, target;
  std::vector<std::vector<std::size_t>> out;  // vertex -> outgoing edge indices, ascending
};

EdgeTable edge_table(MatrixGraph const& g) {
  EdgeTable t;
  t.out.resize(g.vertices().size());
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    auto s = *g.vertex_index(g.edges()[i].source);
    t.source.push_back(s);
    t.target.push_back(*g.vertex_index(g.edges()[i].target));
    t.out[s].push_back(i);
  }
  return t;
}

// A word is Lyndon iff it is strictly smaller than each proper rotation.
bool is_lyndon(std::vector<std::size_t> const& w) {
  std::size_t n = w.size();
  for (std::size_t r = 1; r < n; ++r)
    for (std::size_t i = 0; i < n; ++i) {
      auto a = w[i], b = w[(i + r) % n];
      if (a < b) break;
      if (a > b) return false;
      if (i + 1 == n) return false;  // equal rotation: not primitive
    }
  return true;
}

void cycles_from(EdgeTable const& t, std::size_t start, std::size_t max_length, std::vector<PrimeCycle>& out) {
  std::vector<std::size_t> path{start};
  std::vector<std::size_t> cursor{0};
  auto home = t.source[start];
  if (t.target[start] == home) out.push_back({path});
  while (!path.empty()) {
    auto& cur = cursor.back();
    auto const& nexts = t.out[t.target[path.back()]];
    if (path.size() >= max_length || cur >= nexts.size()) {
      path.pop_back();
      cursor.pop_back();
      continue;
    }
    auto e = nexts[cur++];
    if (e < start) continue;
    path.push_back(e);
    cursor.push_back(0);
    if (t.target[e] == home && is_lyndon(path)) out.push_back({path});
  }
}

// result *= f for f with constant term 1, skipping zero coefficients.
void multiply_sparse(TruncatedSeries& result, TruncatedSeries const& f) {
  for (std::size_t j = result.order(); j > 0; --j)
    for (std::size_t k = 1; k <= j; ++k)
      if (!f[k].is_zero() && !result[j - k].is_zero()) result[j] += result[j - k] * f[k];
}

// tr(a b) without forming a b.
LaurentPoly trace_of_product(PolyMatrix const& a, PolyMatrix const& b) {
  LaurentPoly tr;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero() && !b(j, i).is_zero()) tr += a(i, j) * b(j, i);
  return tr;
}

// det(I - u^len w)^-1 through u^order.
TruncatedSeries euler_factor(PolyMatrix const& w, std::size_t len, std::size_t order) {
  auto c = det_one_minus_coefficients(w);
  TruncatedSeries s(order);
  for (std::size_t k = 0; k < c.size() && k * len <= order; ++k) s[k * len] = c[k];
  return s.inverse();
}

// Product of the Euler factors of the prime cycles whose smallest edge is
// `start`. Weights are built from shared prefix products, zero prefixes are
// pruned, and cycles longer than order / 2 contribute only 1 + tr(w) u^len.
TruncatedSeries factors_from(MatrixGraph const& g, EdgeTable const& t, std::size_t start, std::size_t order) {
  auto result = TruncatedSeries::one(order);
  TruncatedSeries long_cycles = TruncatedSeries::one(order);
  auto weight = [&](std::size_t e) -> PolyMatrix const& { return g.edges()[e].weight; };
  if (weight(start).is_zero()) return result;
  auto home = t.source[start];
  std::vector<std::size_t> path{start};
  std::vector<std::size_t> cursor{0};
  std::vector<PolyMatrix> prefix{weight(start)};
  auto close = [&]() {
    auto len = path.size();
    if (2 * len > order)
      long_cycles[len] += prefix.back().trace();
    else
      multiply_sparse(result, euler_factor(prefix.back(), len, order));
  };
  if (t.target[start] == home) close();
  while (!path.empty()) {
    auto& cur = cursor.back();
    auto const& nexts = t.out[t.target[path.back()]];
    if (path.size() >= order || cur >= nexts.size()) {
      path.pop_back();
      cursor.pop_back();
      prefix.pop_back();
      continue;
    }
    auto e = nexts[cur++];
    if (e < start) continue;
    if (path.size() + 1 == order) {
      // Leaf: only a closing edge matters, and only through the trace.
      if (t.target[e] != home) continue;
      path.push_back(e);
      if (is_lyndon(path)) long_cycles[order] += trace_of_product(prefix.back(), weight(e));
      path.pop_back();
      continue;
    }
    auto next = prefix.back() * weight(e);
    if (next.is_zero()) continue;
    path.push_back(e);
    cursor.push_back(0);
    prefix.push_back(std::move(next));
    if (t.target[e] == home && is_lyndon(path)) close();
  }
  multiply_sparse(result, long_cycles);
  return result;
}

// One full factor per cycle, multiplied densely.
TruncatedSeries product_of_factors(MatrixGraph const& g, std::vector<PrimeCycle> const& cycles, std::size_t order) {
  auto result = TruncatedSeries::one(order);
  for (auto const& c : cycles) result = result * euler_factor(cycle_weight(g, c), c.edges.size(), order);
  return result;
}

}  // namespace

PolyMatrix cycle_weight(MatrixGraph const& g, PrimeCycle const& c) {
  if (c.edges.empty()) throw ValidationError("empty cycle");
  PolyMatrix w = g.edges()[c.edges[0]].weight;
  for (std::size_t i = 1; i < c.edges.size(); ++i) w = w * g.edges()[c.edges[i]].weight;
  return w;
}

std::vector<PrimeCycle> enumerate_prime_cycles(MatrixGraph const& g, std::size_t max_length) {
  auto t = edge_table(g);
  auto m = static_cast<std::ptrdiff_t>(g.edges().size());
  std::vector<std::vector<PrimeCycle>> per_start(g.edges().size());
  if (max_length > 0) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t s = 0; s < m; ++s)
      cycles_from(t, static_cast<std::size_t>(s), max_length, per_start[static_cast<std::size_t>(s)]);
  }
  std::vector<PrimeCycle> out;
  for (auto& v : per_start) out.insert(out.end(), v.begin(), v.end());
  return out;
}

TruncatedSeries euler_product(MatrixGraph const& g, std::size_t order) {
  auto t = edge_table(g);
  std::vector<TruncatedSeries> per_start(g.edges().size(), TruncatedSeries::one(order));
  auto m = static_cast<std::ptrdiff_t>(g.edges().size());
  if (order > 0) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t s = 0; s < m; ++s)
      per_start[static_cast<std::size_t>(s)] = factors_from(g, t, static_cast<std::size_t>(s), order);
  }
  auto result = TruncatedSeries::one(order);
  for (auto const& f : per_start) multiply_sparse(result, f);
  return result;
}

namespace reference {

std::vector<PrimeCycle> enumerate_prime_cycles(MatrixGraph const& g, std::size_t max_length) {
  auto t = edge_table(g);
  std::vector<PrimeCycle> out;
  if (max_length == 0) return out;
  for (std::size_t s = 0; s < g.edges().size(); ++s) cycles_from(t, s, max_length, out);
  return out;
}

TruncatedSeries euler_product(MatrixGraph const& g, std::size_t order) {
  return product_of_factors(g, reference::enumerate_prime_cycles(g, order), order);
}

}  // namespace reference

}  // namespace holozeta
