#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace primegraph {

/// One 64-bit row of an adjacency matrix, or any subset of {0..63}.
using Bits = std::uint64_t;

inline constexpr int kMaxVertices = 64;

/// Mask with the lowest n bits set.
constexpr Bits low_bits(int n) noexcept {
  return n >= 64 ? ~Bits{0} : ((Bits{1} << n) - 1);
}

struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Subset of the vertex range of some graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(Bits bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> members);

  static VertexSet range(int first, int last_exclusive);

  bool contains(int v) const noexcept { return v >= 0 && v < 64 && ((bits_ >> v) & 1U); }
  void insert(int v);
  void erase(int v);
  int size() const noexcept { return std::popcount(bits_); }
  bool empty() const noexcept { return bits_ == 0; }
  Bits bits() const noexcept { return bits_; }
  /// Members in increasing order.
  std::vector<int> members() const;
  int min() const noexcept { return std::countr_zero(bits_); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  Bits bits_ = 0;
};

/// Undirected simple graph on vertices 0..n-1 (1 <= n <= 64), stored as one
/// adjacency word per vertex.
class SimpleGraph {
 public:
  /// Edgeless graph on n vertices.
  explicit SimpleGraph(int n);
  SimpleGraph(int n, std::span<const Edge> edges);
  SimpleGraph(int n, std::initializer_list<Edge> edges)
      : SimpleGraph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  static SimpleGraph complete(int n);
  static SimpleGraph cycle(int n);
  static SimpleGraph path(int n);

  int order() const noexcept { return n_; }
  Bits vertex_mask() const noexcept { return low_bits(n_); }

  bool adjacent(int u, int v) const noexcept { return (adj_[u] >> v) & 1U; }
  Bits neighbors(int v) const noexcept { return adj_[v]; }
  int degree(int v) const noexcept { return std::popcount(adj_[v]); }
  int edge_count() const noexcept;
  /// Edges (u < v) in lexicographic order.
  std::vector<Edge> edges() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) noexcept {
    if (a.n_ != b.n_) return false;
    for (int v = 0; v < a.n_; ++v)
      if (a.adj_[v] != b.adj_[v]) return false;
    return true;
  }

 private:
  void check_pair(int u, int v) const;

  int n_;
  std::array<Bits, kMaxVertices> adj_{};
};

SimpleGraph complement(const SimpleGraph& g);

/// Disjoint union; vertices of b are shifted by a.order().
SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);

/// Copy of g with one extra vertex (index n) adjacent to exactly `neighborhood`.
SimpleGraph add_vertex(const SimpleGraph& g, Bits neighborhood);

SimpleGraph without_edge(const SimpleGraph& g, Edge e);
SimpleGraph with_edge(const SimpleGraph& g, Edge e);

/// h with h.adjacent(perm[u], perm[v]) == g.adjacent(u, v).
SimpleGraph relabel(const SimpleGraph& g, std::span<const int> perm);

/// Relabeled subgraph induced on s, members mapped to 0..|s|-1 in order.
SimpleGraph induced_subgraph(const SimpleGraph& g, const VertexSet& s);

/// Vertices reachable from `start` within the vertex set `within`.
Bits reachable(const SimpleGraph& g, int start, Bits within);

bool is_connected(const SimpleGraph& g);

/// Connected components ordered by smallest member.
std::vector<VertexSet> components(const SimpleGraph& g);

/// True iff the vertices of s are pairwise adjacent.
bool is_clique(const SimpleGraph& g, Bits s);

/// BFS distances from `source`; -1 for unreachable vertices.
std::vector<int> distances_from(const SimpleGraph& g, int source);

/// Maximum distance over all vertex pairs; nullopt when disconnected.
std::optional<int> diameter(const SimpleGraph& g);

bool has_triangle(const SimpleGraph& g);

}  // namespace primegraph
