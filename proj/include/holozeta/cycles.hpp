#pragma once

#include <cstddef>
#include <vector>

#include "holozeta/series.hpp"
#include "holozeta/weighted_graph.hpp"

namespace holozeta {

// A prime cycle class, stored as its Lyndon rotation: edge indices (into
// g.edges()) starting at the smallest index.
struct PrimeCycle {
  std::vector<std::size_t> edges;
  friend bool operator==(PrimeCycle const&, PrimeCycle const&) = default;
};

// All prime cycle classes of length at most max_length, ordered by first edge
// and then by depth-first discovery. Start edges are distributed over OpenMP
// threads; the result does not depend on the thread count.
std::vector<PrimeCycle> enumerate_prime_cycles(MatrixGraph const& g, std::size_t max_length);

// Product of the weights along a cycle.
PolyMatrix cycle_weight(MatrixGraph const& g, PrimeCycle const& c);

// prod_C det(I - u^|C| w(C))^-1 over prime cycles, truncated after u^order.
// Cycles are walked depth first from each start edge in parallel, sharing
// prefix products.
TruncatedSeries euler_product(MatrixGraph const& g, std::size_t order);

namespace reference {
// Single-threaded enumeration with the same output as the parallel kernel.
std::vector<PrimeCycle> enumerate_prime_cycles(MatrixGraph const& g, std::size_t max_length);
// One factor per enumerated cycle, each weight multiplied out in full.
TruncatedSeries euler_product(MatrixGraph const& g, std::size_t order);
}  // namespace reference

}  // namespace holozeta
