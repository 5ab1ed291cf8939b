#include "primegraph/structure.hpp"

#include <string>

#include "primegraph/canonical.hpp"
#include "primegraph/error.hpp"
#include "primegraph/hamiltonian.hpp"

namespace primegraph {

std::string_view to_string(DiameterClass c) {
  switch (c) {
    case DiameterClass::DisconnectedCompleteComponents: return "DISCONNECTED_COMPLETE_COMPONENTS";
    case DiameterClass::Complete: return "COMPLETE";
    case DiameterClass::BridgeBound: return "BRIDGE_BOUND";
    case DiameterClass::Generic: return "GENERIC";
  }
  return "UNKNOWN";
}

std::string_view to_string(NonHamiltonianReason r) {
  switch (r) {
    case NonHamiltonianReason::None: return "NONE";
    case NonHamiltonianReason::DisconnectedTwoComplete: return "DISCONNECTED_TWO_COMPLETE";
    case NonHamiltonianReason::BridgeWithSharedExtraEdges: return "BRIDGE_WITH_SHARED_EXTRA_EDGES";
    case NonHamiltonianReason::TooFewVertices: return "TOO_FEW_VERTICES";
    case NonHamiltonianReason::Unexplained: return "UNEXPLAINED";
  }
  return "UNKNOWN";
}

DiameterClass classify_diameter(const SimpleGraph& g) {
  if (!is_prime_graph(g)) throw GraphError(ErrorCode::NotPrime, "input is not a prime graph");
  const std::optional<int> d = diameter(g);
  if (!d) return DiameterClass::DisconnectedCompleteComponents;
  switch (*d) {
    case 0:
    case 1: return DiameterClass::Complete;
    case 2: return DiameterClass::Generic;
    case 3: return DiameterClass::BridgeBound;
    default:
      throw std::logic_error("prime graph with diameter " + std::to_string(*d) + " exceeds the bound of 3");
  }
}

DiameterCrossCheck cross_check_diameter(const SimpleGraph& g) {
  DiameterCrossCheck out;
  out.tag = classify_diameter(g);
  if (g.order() < 2) throw GraphError(ErrorCode::TooSmall, "cross-check needs at least two vertices");
  bool all_bridges = true;
  for (const CanonicalForm& end : all_mcpg_reductions(g))
    all_bridges = all_bridges && recognize_bridge(end.to_graph()).has_value();
  out.reductions_all_bridges = all_bridges;
  const bool bound = out.tag == DiameterClass::BridgeBound;
  out.forward_holds = !bound || all_bridges;
  out.converse_holds = bound || !all_bridges;
  return out;
}

std::vector<int> diameter3_complement_coloring(const SimpleGraph& g) {
  if (!is_prime_graph(g)) throw GraphError(ErrorCode::PreconditionFailed, "input is not a prime graph");
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    const std::vector<int> dist = distances_from(g, a);
    for (int b = 0; b < n; ++b) {
      if (dist[b] < 0) throw GraphError(ErrorCode::PreconditionFailed, "input is disconnected");
      if (dist[b] > 3) throw std::logic_error("prime graph with diameter above 3");
      if (dist[b] != 3) continue;
      // a and b are complement-adjacent; no vertex is complement-adjacent to
      // both (triangle) or to neither (path a-v-b of length 2).
      const SimpleGraph c = complement(g);
      std::vector<int> colors(n, -1);
      colors[a] = 0;
      colors[b] = 1;
      for (int v = 0; v < n; ++v) {
        if (v == a || v == b) continue;
        if (c.adjacent(v, a)) {
          colors[v] = 1;
        } else if (c.adjacent(v, b)) {
          colors[v] = 0;
        } else {
          throw std::logic_error("vertex " + std::to_string(v) + " gives a shorter a-b path");
        }
      }
      return colors;
    }
  }
  throw GraphError(ErrorCode::PreconditionFailed, "diameter is not 3");
}

std::optional<BridgeSpec> match_bridge_with_shared_extra_edges(const SimpleGraph& g) {
  const int n = g.order();
  if (n < 2) return std::nullopt;
  for (const Edge& bridge : g.edges()) {
    const Bits rest = g.vertex_mask() & ~(Bits{1} << bridge.u) & ~(Bits{1} << bridge.v);
    // Enumerate submasks of `rest` joining u's clique; the others join v's.
    Bits side = rest;
    while (true) {
      const Bits side_u = side | (Bits{1} << bridge.u);
      const Bits side_v = (rest & ~side) | (Bits{1} << bridge.v);
      if (is_clique(g, side_u) && is_clique(g, side_v)) {
        bool shared_u = true;
        bool shared_v = true;
        for (Bits b = side_u; b; b &= b - 1) {
          const int x = std::countr_zero(b);
          for (Bits c = g.neighbors(x) & side_v; c; c &= c - 1) {
            const int y = std::countr_zero(c);
            if (x == bridge.u && y == bridge.v) continue;
            shared_u = shared_u && x == bridge.u;
            shared_v = shared_v && y == bridge.v;
          }
        }
        if (shared_u || shared_v) {
          const int su = std::popcount(side_u);
          const int sv = std::popcount(side_v);
          if (su >= sv) return BridgeSpec{su, sv, bridge};
          return BridgeSpec{sv, su, {bridge.v, bridge.u}};
        }
      }
      if (side == 0) break;
      side = (side - 1) & rest;
    }
  }
  return std::nullopt;
}

HamiltonianVerdict is_hamiltonian_prime(const SimpleGraph& g) {
  if (!is_prime_graph(g)) throw GraphError(ErrorCode::NotPrime, "input is not a prime graph");
  HamiltonianVerdict v;
  v.cycle = hamiltonian_cycle(g);
  v.hamiltonian = v.cycle.has_value();
  if (v.hamiltonian) return v;
  const auto parts = components(g);
  if (parts.size() == 2 && is_clique(g, parts[0].bits()) && is_clique(g, parts[1].bits())) {
    v.reason = NonHamiltonianReason::DisconnectedTwoComplete;
  } else if (match_bridge_with_shared_extra_edges(g)) {
    v.reason = NonHamiltonianReason::BridgeWithSharedExtraEdges;
  } else if (g.order() == 1) {
    v.reason = NonHamiltonianReason::TooFewVertices;
  } else {
    v.reason = NonHamiltonianReason::Unexplained;
  }
  return v;
}

std::uint64_t hamiltonian_path_count_bridge(int m, int n) {
  if (n < 1 || m < n) throw GraphError(ErrorCode::BadParams, "bridge graph needs m >= n >= 1");
  std::uint64_t count = 1;
  auto times = [&](int upto) {
    for (int i = 2; i <= upto; ++i)
      if (__builtin_mul_overflow(count, static_cast<std::uint64_t>(i), &count))
        throw GraphError(ErrorCode::SizeExceeded, "path count overflows 64 bits");
  };
  times(m - 1);
  times(n - 1);
  return count;
}

bool is_self_complementary(const SimpleGraph& g) {
  const int n = g.order();
  if (4 * g.edge_count() != n * (n - 1)) return false;
  return are_isomorphic(g, complement(g));
}

}  // namespace primegraph
