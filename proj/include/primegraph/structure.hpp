#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "primegraph/classify.hpp"
#include "primegraph/graph.hpp"

namespace primegraph {

enum class DiameterClass {
  DisconnectedCompleteComponents,  // infinite diameter
  Complete,                        // diameter 1 (0 for K1)
  BridgeBound,                     // diameter 3
  Generic,                         // diameter 2
};

std::string_view to_string(DiameterClass c);

/// Diameter class of a prime graph from its exact diameter.
/// Throws NOT_PRIME.
DiameterClass classify_diameter(const SimpleGraph& g);

struct DiameterCrossCheck {
  DiameterClass tag;
  /// Every maximal removal sequence ends in a bridge graph.
  bool reductions_all_bridges = false;
  /// BridgeBound implies reductions_all_bridges.
  bool forward_holds = false;
  /// reductions_all_bridges implies BridgeBound. Fails already on C4 and K4,
  /// whose only reachable MCPG is B_{2,2}.
  bool converse_holds = false;
  bool consistent() const { return forward_holds && converse_holds; }
};

/// classify_diameter together with the edge-removal characterization of
/// diameter 3, via all_mcpg_reductions. Connected prime graphs on 2..8 vertices.
DiameterCrossCheck cross_check_diameter(const SimpleGraph& g);

/// 2-coloring of the complement of a diameter-3 prime graph: pick a, b at
/// distance 3; a gets color 0, b color 1; every other vertex is
/// complement-adjacent to exactly one of them and takes the opposite color.
/// Throws PRECONDITION_FAILED unless g is prime with diameter 3.
std::vector<int> diameter3_complement_coloring(const SimpleGraph& g);

enum class NonHamiltonianReason {
  None,
  DisconnectedTwoComplete,
  BridgeWithSharedExtraEdges,
  TooFewVertices,  // K1: a cycle needs three vertices
  Unexplained,
};

std::string_view to_string(NonHamiltonianReason r);

struct HamiltonianVerdict {
  bool hamiltonian = false;
  NonHamiltonianReason reason = NonHamiltonianReason::None;
  std::optional<std::vector<int>> cycle;
};

/// g contains a spanning B_{m,n} and every edge outside it is incident to one
/// fixed endpoint of that bridge.
std::optional<BridgeSpec> match_bridge_with_shared_extra_edges(const SimpleGraph& g);

/// Backtracking decides Hamiltonicity; the reason is the structural
/// explanation of a negative answer. Throws NOT_PRIME, SIZE_EXCEEDED.
HamiltonianVerdict is_hamiltonian_prime(const SimpleGraph& g);

/// (m-1)! (n-1)!. Throws BAD_PARAMS unless m >= n >= 1.
std::uint64_t hamiltonian_path_count_bridge(int m, int n);

/// g is isomorphic to its complement.
bool is_self_complementary(const SimpleGraph& g);

}  // namespace primegraph
