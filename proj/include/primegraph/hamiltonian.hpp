#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "primegraph/graph.hpp"

namespace primegraph {

inline constexpr int kMaxHamiltonianCycleOrder = 16;
inline constexpr int kMaxHamiltonianPathCountOrder = 12;

/// A Hamiltonian cycle as a vertex sequence starting at 0 (the closing edge
/// back to 0 is implicit), or nullopt. Cycles need at least 3 vertices, so
/// K1 and K2 have none. Throws SIZE_EXCEEDED above 16 vertices.
std::optional<std::vector<int>> hamiltonian_cycle(const SimpleGraph& g);

bool is_hamiltonian_cycle(const SimpleGraph& g, const std::vector<int>& cycle);

/// Number of Hamiltonian paths, a path and its reversal counted once.
/// A single vertex is one path. Throws SIZE_EXCEEDED above 12 vertices.
std::uint64_t count_hamiltonian_paths(const SimpleGraph& g);

}  // namespace primegraph
