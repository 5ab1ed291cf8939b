#include "primegraph/reseminant.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "primegraph/canonical.hpp"
#include "primegraph/error.hpp"
#include "primegraph/generate.hpp"

namespace primegraph {
namespace {

Count exact_div(const Count& num, const Count& den, const char* what) {
  if (num % den != 0) throw std::logic_error(std::string("inexact division in ") + what);
  return num / den;
}

Count binomial(int n, int k) {
  Count c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

std::vector<int> cycle_lengths(const Permutation& perm) {
  std::vector<int> lengths;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (std::size_t v = start; !seen[v]; v = static_cast<std::size_t>(perm[v])) {
      seen[v] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

/// Ways to write k as sum of lengths[i] * x_i with x_i >= 0.
Count fixed_tuples(const std::vector<int>& lengths, int k) {
  std::vector<Count> ways(k + 1, 0);
  ways[0] = 1;
  for (int len : lengths)
    for (int s = len; s <= k; ++s) ways[s] += ways[s - len];
  return ways[k];
}

void require_base(const SimpleGraph& base) {
  if (!is_base_graph(base)) throw GraphError(ErrorCode::NotBaseGraph, "graph has a cluster of size > 1");
}

}  // namespace

std::vector<int> ClusterPartition::sizes() const {
  std::vector<int> out;
  out.reserve(blocks.size());
  for (const VertexSet& b : blocks) out.push_back(b.size());
  return out;
}

ClusterPartition clusters(const SimpleGraph& g) {
  ClusterPartition p;
  Bits left = g.vertex_mask();
  while (left) {
    const int v = std::countr_zero(left);
    const Bits closed = g.neighbors(v) | (Bits{1} << v);
    Bits block = 0;
    for (Bits b = left; b; b &= b - 1) {
      const int u = std::countr_zero(b);
      if ((g.neighbors(u) | (Bits{1} << u)) == closed) block |= Bits{1} << u;
    }
    p.blocks.emplace_back(block);
    left &= ~block;
  }
  return p;
}

bool is_base_graph(const SimpleGraph& g) {
  return static_cast<int>(clusters(g).blocks.size()) == g.order();
}

SimpleGraph base_of(const SimpleGraph& g) {
  VertexSet reps;
  for (const VertexSet& b : clusters(g).blocks) reps.insert(b.min());
  return induced_subgraph(g, reps);
}

SimpleGraph realize(const ReseminantSpec& spec) {
  const int n = spec.base.order();
  if (!is_base_graph(spec.base)) throw GraphError(ErrorCode::BadSpec, "base is not a base graph");
  if (static_cast<int>(spec.multiplicities.size()) != n)
    throw GraphError(ErrorCode::BadSpec, "need one multiplicity per base vertex");
  long total = 0;
  for (int a : spec.multiplicities) {
    if (a < 1) throw GraphError(ErrorCode::BadSpec, "multiplicities must be positive");
    total += a;
  }
  if (total > kMaxVertices) throw GraphError(ErrorCode::BadSpec, "realization exceeds 64 vertices");
  SimpleGraph g = spec.base;
  for (int v = 0; v < n; ++v)
    for (int copy = 1; copy < spec.multiplicities[v]; ++copy) g = vertex_duplication(g, v);
  return g;
}

std::optional<ReseminantSpec> is_reseminant(const SimpleGraph& g, const SimpleGraph& base) {
  require_base(base);
  const ClusterPartition parts = clusters(g);
  const SimpleGraph own_base = base_of(g);
  if (own_base.order() != base.order()) return std::nullopt;
  const CanonicalLabeling theirs = canonical_labeling(base);
  const CanonicalLabeling ours = canonical_labeling(own_base);
  if (theirs.form != ours.form) return std::nullopt;
  // Base vertex i sits at canonical position theirs.labeling[i]; the cluster
  // at the same position of g's base supplies its multiplicity.
  std::vector<int> at_position(own_base.order());
  for (int j = 0; j < own_base.order(); ++j) at_position[ours.labeling[j]] = j;
  ReseminantSpec spec{base, std::vector<int>(base.order())};
  for (int i = 0; i < base.order(); ++i)
    spec.multiplicities[i] = parts.blocks[at_position[theirs.labeling[i]]].size();
  return spec;
}

Count count_orbits(const SimpleGraph& base, int k) {
  if (k < 0) throw GraphError(ErrorCode::BadParams, "k must be non-negative");
  if (base.order() > kMaxOrbitBaseOrder)
    throw GraphError(ErrorCode::SizeExceeded,
                     "orbit counting limited to " + std::to_string(kMaxOrbitBaseOrder) + " base vertices");
  require_base(base);
  const std::vector<Permutation> group = automorphisms(base);
  Count total = 0;
  for (const Permutation& p : group) total += fixed_tuples(cycle_lengths(p), k);
  return exact_div(total, Count(group.size()), "orbit average");
}

Count reflection_fixed_tuples(int k) {
  if (k < 0) throw GraphError(ErrorCode::BadParams, "k must be non-negative");
  const Count x = k;
  if (k % 2 == 0) return exact_div(x * x + 6 * x + 8, 8, "even reflection count");
  return exact_div(x * x + 4 * x + 3, 8, "odd reflection count");
}

Count closed_form_c5(int k) {
  if (k < 0) throw GraphError(ErrorCode::BadParams, "k must be non-negative");
  const Count x = k;
  const Count tuples = binomial(k + 4, k);
  const Count rotations = k % 5 == 0 ? 4 : 0;
  const Count reflections = k % 2 == 0 ? exact_div(5 * x * x + 30 * x + 40, 8, "even reflection term")
                                       : exact_div(5 * x * x + 20 * x + 15, 8, "odd reflection term");
  return exact_div(tuples + rotations + reflections, 10, "closed form");
}

Count bracelet_floor_formula(int x) {
  if (x < 0) throw GraphError(ErrorCode::BadParams, "argument must be non-negative");
  const Count v = x;
  const Count sign = x % 2 == 0 ? 1 : -1;
  const Count numerator = v * v * v * v + 10 * v * v * v + 50 * v * v + 15 * sign * v + 125 * v;
  return numerator / 240 + 1;
}

Count bracelet_form(int total_vertices) {
  if (total_vertices < 5) throw GraphError(ErrorCode::BadParams, "need at least 5 vertices");
  return bracelet_floor_formula(total_vertices - 5);
}

}  // namespace primegraph
