#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "primegraph/canonical.hpp"
#include "primegraph/graph.hpp"

namespace primegraph {

/// Complete bridge graph B_{m,n}: cliques of sizes m >= n joined by one edge.
struct BridgeSpec {
  int m = 1;
  int n = 1;
  /// Bridge endpoints; `bridge.u` lies in the m-clique, `bridge.v` in the n-clique.
  Edge bridge;

  /// True iff B_{m,n} is a minimally connected prime graph:
  /// m, n > 1, or m in {1, 2} with n = 1.
  bool admissible() const noexcept { return (m > 1 && n > 1) || (n == 1 && m <= 2); }

  friend bool operator==(const BridgeSpec&, const BridgeSpec&) = default;
};

/// Everything the library knows about one graph.
struct Classification {
  bool is_prime = false;
  bool is_pdmpg = false;
  bool is_mcpg = false;
  bool is_mpg = false;
  std::optional<BridgeSpec> bridge;
  /// Chromatic number of the complement; unset above 20 vertices.
  std::optional<int> complement_chromatic;
  /// nullopt means infinite (disconnected).
  std::optional<int> diameter;
  /// Unset above 16 vertices.
  std::optional<bool> hamiltonian;
};

Classification classify(const SimpleGraph& g);

/// Complement is triangle-free and 3-colorable.
bool is_prime_graph(const SimpleGraph& g);

/// Minimal prime graph: >= 2 vertices, connected, prime, and every edge
/// deletion breaks triangle-freeness or 3-colorability of the complement.
bool is_mpg(const SimpleGraph& g);

/// Minimally connected prime graph: as is_mpg, but an edge deletion may also
/// break connectivity.
bool is_mcpg(const SimpleGraph& g);

/// Possibly disconnected minimal prime graph. No vertex-count floor: K1 and the
/// edgeless graph on two vertices qualify vacuously.
bool is_pdmpg(const SimpleGraph& g);

/// Identifies g as some B_{m,n}, with the cliques and bridge edge. For
/// B_{2,1} (the path P3) the lexicographically first valid bridge is chosen.
std::optional<BridgeSpec> recognize_bridge(const SimpleGraph& g);

/// Vertex set of the m-clique of a recognized bridge graph.
VertexSet bridge_large_side(const SimpleGraph& g, const BridgeSpec& spec);

/// Edges whose deletion keeps g connected and prime.
std::vector<Edge> removable_edges(const SimpleGraph& g);

struct EdgePolicy {
  enum class Kind { Lexicographic, Random };
  Kind kind = Kind::Lexicographic;
  std::uint64_t seed = 0;

  static EdgePolicy lexicographic() { return {}; }
  static EdgePolicy random(std::uint64_t seed) { return {Kind::Random, seed}; }
};

struct Reduction {
  SimpleGraph result;
  std::vector<Edge> removed;  // replays g -> result in order
};

/// Deletes edges while the graph stays connected and prime. The result is an
/// MCPG on the same vertex set.
/// Throws NOT_PRIME, DISCONNECTED, or TOO_SMALL for a single vertex.
Reduction reduce_to_mcpg(const SimpleGraph& g, EdgePolicy policy = EdgePolicy::lexicographic());

inline constexpr int kMaxExhaustiveReductionOrder = 8;

/// Canonical forms of every MCPG reachable by some maximal sequence of
/// deletions that keep the graph connected and prime. Memoized on the
/// canonical form of intermediate graphs. Limited to 8 vertices.
std::set<CanonicalForm> all_mcpg_reductions(const SimpleGraph& g);

}  // namespace primegraph
