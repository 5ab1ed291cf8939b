#pragma once

#include <optional>
#include <vector>

#include "primegraph/graph.hpp"

namespace primegraph {

inline constexpr int kMaxExactChromatic = 20;

/// Proper coloring with colors 0..k-1, or nullopt if none exists.
/// Exact backtracking; picks the most constrained vertex first.
std::optional<std::vector<int>> find_k_coloring(const SimpleGraph& g, int k);

inline bool is_k_colorable(const SimpleGraph& g, int k) { return find_k_coloring(g, k).has_value(); }

bool is_proper_coloring(const SimpleGraph& g, const std::vector<int>& colors);

/// Least k admitting a proper coloring. Throws SIZE_EXCEEDED above 20 vertices.
int chromatic_number(const SimpleGraph& g);

}  // namespace primegraph
