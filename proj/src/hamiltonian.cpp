#include "primegraph/hamiltonian.hpp"

#include <string>
#include <unordered_map>

#include "primegraph/error.hpp"

namespace primegraph {
namespace {

class CycleSearch {
 public:
  explicit CycleSearch(const SimpleGraph& g) : g_(g), full_(g.vertex_mask()) {}

  std::optional<std::vector<int>> run() {
    path_.push_back(0);
    if (extend(0, Bits{1})) return path_;
    return std::nullopt;
  }

 private:
  bool extend(int at, Bits visited) {
    if (visited == full_) return g_.adjacent(at, 0);
    const Bits left = full_ & ~visited;
    // Every unvisited vertex needs two usable neighbors among the unvisited
    // vertices, the current end, and the start.
    const Bits ends = (Bits{1} << at) | Bits{1};
    for (Bits b = left; b; b &= b - 1) {
      const int v = std::countr_zero(b);
      if (std::popcount(g_.neighbors(v) & (left | ends)) < 2) return false;
    }
    if ((g_.neighbors(0) & left) == 0) return false;
    for (Bits b = g_.neighbors(at) & left; b; b &= b - 1) {
      const int v = std::countr_zero(b);
      path_.push_back(v);
      if (extend(v, visited | (Bits{1} << v))) return true;
      path_.pop_back();
    }
    return false;
  }

  const SimpleGraph& g_;
  Bits full_;
  std::vector<int> path_;
};

/// Counts directed Hamiltonian paths by backtracking from every start vertex,
/// memoized on (visited set, current end).
class PathCounter {
 public:
  explicit PathCounter(const SimpleGraph& g) : g_(g), full_(g.vertex_mask()) {}

  std::uint64_t directed_total() {
    std::uint64_t total = 0;
    for (int v = 0; v < g_.order(); ++v) total += extensions(v, Bits{1} << v);
    return total;
  }

 private:
  std::uint64_t extensions(int at, Bits visited) {
    if (visited == full_) return 1;
    const std::uint64_t key = (visited << 6) | static_cast<std::uint64_t>(at);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::uint64_t count = 0;
    for (Bits b = g_.neighbors(at) & ~visited; b; b &= b - 1) {
      const int v = std::countr_zero(b);
      count += extensions(v, visited | (Bits{1} << v));
    }
    memo_.emplace(key, count);
    return count;
  }

  const SimpleGraph& g_;
  Bits full_;
  std::unordered_map<std::uint64_t, std::uint64_t> memo_;
};

}  // namespace

std::optional<std::vector<int>> hamiltonian_cycle(const SimpleGraph& g) {
  if (g.order() > kMaxHamiltonianCycleOrder)
    throw GraphError(ErrorCode::SizeExceeded,
                     "Hamiltonian cycle search limited to " + std::to_string(kMaxHamiltonianCycleOrder) +
                         " vertices");
  if (g.order() < 3) return std::nullopt;
  return CycleSearch(g).run();
}

bool is_hamiltonian_cycle(const SimpleGraph& g, const std::vector<int>& cycle) {
  const int n = g.order();
  if (n < 3 || static_cast<int>(cycle.size()) != n) return false;
  Bits seen = 0;
  for (int i = 0; i < n; ++i) {
    const int v = cycle[i];
    if (v < 0 || v >= n || ((seen >> v) & 1U)) return false;
    seen |= Bits{1} << v;
    if (!g.adjacent(v, cycle[(i + 1) % n])) return false;
  }
  return true;
}

std::uint64_t count_hamiltonian_paths(const SimpleGraph& g) {
  if (g.order() > kMaxHamiltonianPathCountOrder)
    throw GraphError(ErrorCode::SizeExceeded,
                     "Hamiltonian path count limited to " + std::to_string(kMaxHamiltonianPathCountOrder) +
                         " vertices");
  if (g.order() == 1) return 1;
  return PathCounter(g).directed_total() / 2;
}

}  // namespace primegraph
