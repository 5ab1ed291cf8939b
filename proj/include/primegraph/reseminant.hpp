#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "primegraph/graph.hpp"

namespace primegraph {

/// Exact counts; divisions in the closed forms are checked to be exact.
using Count = boost::multiprecision::cpp_int;

/// Partition of the vertices into clusters: maximal sets of pairwise
/// identical vertices (adjacent, with equal neighborhoods otherwise). Blocks
/// are ordered by their smallest member.
struct ClusterPartition {
  std::vector<VertexSet> blocks;

  std::vector<int> sizes() const;
};

ClusterPartition clusters(const SimpleGraph& g);

/// Every cluster is a singleton.
bool is_base_graph(const SimpleGraph& g);

/// Induced subgraph on the smallest member of each cluster.
SimpleGraph base_of(const SimpleGraph& g);

/// A base graph with one positive multiplicity per base vertex.
struct ReseminantSpec {
  SimpleGraph base;
  std::vector<int> multiplicities;
};

/// Duplicates base vertex i exactly multiplicities[i] - 1 times. Base vertices
/// keep labels 0..n-1; copies are appended in vertex order.
/// Throws BAD_SPEC if the base is not a base graph, a multiplicity is not
/// positive, the tuple length differs from the base order, or the result
/// would exceed 64 vertices.
SimpleGraph realize(const ReseminantSpec& spec);

/// Multiplicities that realize a graph isomorphic to g over `base`, or
/// nullopt when the base of g is not isomorphic to `base`.
/// Throws NOT_BASE_GRAPH.
std::optional<ReseminantSpec> is_reseminant(const SimpleGraph& g, const SimpleGraph& base);

inline constexpr int kMaxOrbitBaseOrder = 10;

/// Orbits of Aut(base) on non-negative n-tuples with sum k, by averaging
/// fixed-tuple counts over the group. A permutation fixes exactly the tuples
/// constant on its cycles, so its count is the number of ways to write k as
/// sum over cycles of (cycle length x value). Equals the number of
/// base-reseminant graphs on n + k vertices.
/// Throws NOT_BASE_GRAPH, SIZE_EXCEEDED above 10 base vertices.
Count count_orbits(const SimpleGraph& base, int k);

/// Number of reseminant graphs (5-cycle base) on k + 5 vertices, four cases
/// by divisibility of k by 2 and by 5.
Count closed_form_c5(int k);

/// 5-tuples summing to k fixed by one reflection of the pentagon.
Count reflection_fixed_tuples(int k);

/// floor(x^4/240 + x^3/24 + 5x^2/24 + (x/16)(-1)^x + 25x/48) + 1, evaluated
/// exactly over the common denominator 240.
Count bracelet_floor_formula(int x);

/// The floor formula aligned to total vertex count: argument v - 5 (the number
/// of duplicated vertices). Throws BAD_PARAMS below 5.
Count bracelet_form(int total_vertices);

}  // namespace primegraph
