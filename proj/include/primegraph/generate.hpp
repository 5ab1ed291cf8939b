#pragma once

#include <string>
#include <vector>

#include "primegraph/classify.hpp"
#include "primegraph/graph.hpp"

namespace primegraph {

/// Labeled B_{m,n}: 0..m-1 and m..m+n-1 are cliques, (m-1, m) is the bridge.
/// Throws BAD_PARAMS unless m >= n >= 1 and m + n <= 64.
SimpleGraph bridge_graph(int m, int n);

/// BridgeSpec matching bridge_graph(m, n).
BridgeSpec bridge_spec(int m, int n);

/// Appends a copy v' of v: adjacent to v and to every neighbor of v.
SimpleGraph vertex_duplication(const SimpleGraph& g, int v);

/// One-vertex MPG extension of an MPG, by duplicating vertex 0.
/// Throws NOT_MPG.
SimpleGraph grow_mpg(const SimpleGraph& g);

enum class BridgeSide { Large, Small };

/// bridge_graph(spec.m, spec.n) plus one vertex joined to every vertex of the
/// chosen clique: a bridge graph with that clique one larger, containing the
/// original as the induced subgraph on its first m + n vertices.
/// Throws INADMISSIBLE when the result would be B_{m,1} with m > 2.
SimpleGraph grow_bridge(const BridgeSpec& spec, BridgeSide side);

/// bridge_graph(spec.m, spec.n) plus a vertex adjacent to everything except
/// the two bridge endpoints. The result is an MPG. Throws TOO_SMALL if n < 2.
SimpleGraph bridge_to_mpg(const BridgeSpec& spec);

inline constexpr int kMaxGenerationCheckOrder = 8;

/// Exhaustive check of the four generation arrows between minimal prime
/// graphs (MPG) and admissible bridge graphs (C), over every source graph with
/// at most `max_order` vertices and every neighborhood of the added vertex.
struct GenerationReport {
  int max_order = 0;
  int mpgs_checked = 0;
  int bridges_checked = 0;
  long long extensions_checked = 0;
  bool mpg_to_mpg = true;        // every MPG has an MPG extension
  bool bridge_to_bridge = true;  // every admissible bridge graph has one in C
  bool bridge_to_mpg = true;     // every bridge with m, n >= 2 has an MPG extension
  bool mpg_never_to_bridge = true;  // no MPG extension is a bridge graph
  std::vector<std::string> failures;

  bool all_confirmed() const {
    return mpg_to_mpg && bridge_to_bridge && bridge_to_mpg && mpg_never_to_bridge;
  }
};

/// Throws SIZE_EXCEEDED above 8.
GenerationReport verify_generation_relations(int max_order);

}  // namespace primegraph
