#include "primegraph/canonical.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <string>

#include "primegraph/error.hpp"

namespace primegraph {
namespace {

using Column = Bits;
using Columns = std::array<Column, kMaxVertices>;
inline constexpr Column kNoColumn = std::numeric_limits<Column>::max();

/// Column j of the upper-triangle string: adjacency of the vertex at position j
/// to positions 0..j-1, position 0 in the most significant bit.
Columns columns_of(const SimpleGraph& g, std::span<const int> order) {
  Columns cols{};
  for (std::size_t j = 0; j < order.size(); ++j) {
    Column c = 0;
    for (std::size_t i = 0; i < j; ++i) c = (c << 1) | (g.adjacent(order[i], order[j]) ? 1U : 0U);
    cols[j] = c;
  }
  return cols;
}

CanonicalForm form_from_order(const SimpleGraph& g, std::span<const int> order) {
  // order[p] = original vertex placed at position p
  std::vector<int> labeling(g.order());
  for (std::size_t p = 0; p < order.size(); ++p) labeling[order[p]] = static_cast<int>(p);
  return CanonicalForm::of_labeled(relabel(g, labeling));
}

std::vector<int> labeling_from_order(std::span<const int> order) {
  std::vector<int> labeling(order.size());
  for (std::size_t p = 0; p < order.size(); ++p) labeling[order[p]] = static_cast<int>(p);
  return labeling;
}

/// Depth-first search over vertex orders, pruned by comparing columns against
/// the best (or target) prefix.
class OrderSearch {
 public:
  explicit OrderSearch(const SimpleGraph& g) : g_(g), n_(g.order()), twins_(smaller_twins(g)) {}

  /// Lexicographically minimal column sequence over all orders.
  std::vector<int> minimize() {
    best_.fill(kNoColumn);
    mode_ = Mode::Minimize;
    Columns sig{};
    run(0, g_.vertex_mask(), sig);
    return best_order_;
  }

  /// False as soon as some order beats `target`.
  bool nothing_smaller_than(const Columns& target) {
    best_ = target;
    mode_ = Mode::Check;
    beaten_ = false;
    Columns sig{};
    run(0, g_.vertex_mask(), sig);
    return !beaten_;
  }

 private:
  enum class Mode { Minimize, Check };

  void run(int depth, Bits unchosen, const Columns& sig) {
    if (depth == n_) {
      if (dirty_) {
        best_order_.assign(order_.begin(), order_.begin() + n_);
        dirty_ = false;
      }
      return;
    }
    for (Bits b = unchosen; b; b &= b - 1) {
      const int v = std::countr_zero(b);
      if (twins_[v] & unchosen) continue;
      const Column c = sig[v];
      if (c > best_[depth]) continue;
      if (c < best_[depth]) {
        if (mode_ == Mode::Check) {
          beaten_ = true;
          return;
        }
        best_[depth] = c;
        std::fill(best_.begin() + depth + 1, best_.begin() + n_, kNoColumn);
        dirty_ = true;
      }
      order_[depth] = v;
      const Bits rest = unchosen & ~(Bits{1} << v);
      Columns next = sig;
      const Bits nv = g_.neighbors(v);
      for (Bits r = rest; r; r &= r - 1) {
        const int u = std::countr_zero(r);
        next[u] = (sig[u] << 1) | ((nv >> u) & 1U);
      }
      run(depth + 1, rest, next);
      if (beaten_) return;
    }
  }

  const SimpleGraph& g_;
  int n_;
  std::vector<Bits> twins_;
  Mode mode_ = Mode::Minimize;
  Columns best_{};
  std::array<int, kMaxVertices> order_{};
  std::vector<int> best_order_;
  bool dirty_ = false;
  bool beaten_ = false;
};

/// Canonical labeling by equitable refinement and individualization. The
/// search tree depends only on isomorphism-invariant data, so the minimum
/// leaf string is canonical.
class RefinementSearch {
 public:
  explicit RefinementSearch(const SimpleGraph& g) : g_(g), n_(g.order()), twins_(smaller_twins(g)) {}

  std::vector<int> run() {
    std::vector<int> cell_of(n_, 0);
    descend(refine(cell_of));
    return best_order_;
  }

 private:
  /// Refines the ordered partition given as cell indices until equitable.
  /// Cells are renumbered 0..k-1 in an order determined by invariants.
  std::vector<int> refine(std::vector<int> cell_of) const {
    int cells = 1 + *std::max_element(cell_of.begin(), cell_of.end());
    while (true) {
      std::vector<std::vector<int>> key(n_);
      for (int v = 0; v < n_; ++v) {
        key[v].assign(cells + 1, 0);
        key[v][0] = cell_of[v];
        for (Bits b = g_.neighbors(v); b; b &= b - 1) ++key[v][1 + cell_of[std::countr_zero(b)]];
      }
      std::vector<int> idx(n_);
      std::iota(idx.begin(), idx.end(), 0);
      std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return key[a] < key[b]; });
      std::vector<int> next(n_);
      int count = 0;
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && key[idx[i]] != key[idx[i - 1]]) ++count;
        next[idx[i]] = count;
      }
      ++count;
      cell_of = std::move(next);
      if (count == cells) return cell_of;
      cells = count;
    }
  }

  void descend(const std::vector<int>& cell_of) {
    const int cells = 1 + *std::max_element(cell_of.begin(), cell_of.end());
    if (cells == n_) {
      std::vector<int> order(n_);
      for (int v = 0; v < n_; ++v) order[cell_of[v]] = v;
      const Columns cols = columns_of(g_, order);
      if (best_order_.empty() ||
          std::lexicographical_compare(cols.begin(), cols.begin() + n_, best_cols_.begin(),
                                       best_cols_.begin() + n_)) {
        best_cols_ = cols;
        best_order_ = std::move(order);
      }
      return;
    }
    // First non-singleton cell.
    std::vector<int> size(cells, 0);
    for (int v = 0; v < n_; ++v) ++size[cell_of[v]];
    int target = 0;
    while (size[target] == 1) ++target;
    Bits members = 0;
    for (int v = 0; v < n_; ++v)
      if (cell_of[v] == target) members |= Bits{1} << v;
    for (Bits b = members; b; b &= b - 1) {
      const int v = std::countr_zero(b);
      if (twins_[v] & members) continue;
      std::vector<int> split(n_);
      for (int u = 0; u < n_; ++u) split[u] = 2 * cell_of[u] + ((cell_of[u] == target && u != v) ? 1 : 0);
      descend(refine(split));
    }
  }

  const SimpleGraph& g_;
  int n_;
  std::vector<Bits> twins_;
  Columns best_cols_{};
  std::vector<int> best_order_;
};

}  // namespace

CanonicalForm CanonicalForm::of_labeled(const SimpleGraph& g) {
  CanonicalForm f;
  f.n_ = g.order();
  f.words_.assign((f.bit_count() + 63) / 64, 0);
  std::size_t pos = 0;
  for (int j = 1; j < f.n_; ++j)
    for (int i = 0; i < j; ++i, ++pos)
      if (g.adjacent(i, j)) f.words_[pos / 64] |= Bits{1} << (63 - pos % 64);
  return f;
}

std::string CanonicalForm::bit_string() const {
  std::string s;
  s.reserve(bit_count());
  for (std::size_t p = 0; p < bit_count(); ++p) s.push_back(bit(p) ? '1' : '0');
  return s;
}

SimpleGraph CanonicalForm::to_graph() const {
  SimpleGraph g(n_);
  std::size_t pos = 0;
  for (int j = 1; j < n_; ++j)
    for (int i = 0; i < j; ++i, ++pos)
      if (bit(pos)) g.add_edge(i, j);
  return g;
}

std::size_t CanonicalForm::hash() const noexcept {
  std::size_t h = static_cast<std::size_t>(n_) * 0x9E3779B97F4A7C15ULL;
  for (Bits w : words_) h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  return h;
}

std::vector<Bits> smaller_twins(const SimpleGraph& g) {
  const int n = g.order();
  std::vector<Bits> out(n, 0);
  for (int v = 0; v < n; ++v) {
    const Bits open = g.neighbors(v);
    const Bits closed = open | (Bits{1} << v);
    for (int u = 0; u < v; ++u) {
      const Bits uopen = g.neighbors(u);
      const bool adjacent = (open >> u) & 1U;
      if ((adjacent && (uopen | (Bits{1} << u)) == closed) || (!adjacent && uopen == open))
        out[v] |= Bits{1} << u;
    }
  }
  return out;
}

CanonicalLabeling canonical_labeling(const SimpleGraph& g) {
  std::vector<int> order;
  if (g.order() <= kExhaustiveCanonicalLimit) {
    order = OrderSearch(g).minimize();
  } else {
    order = RefinementSearch(g).run();
  }
  return {form_from_order(g, order), labeling_from_order(order)};
}

bool is_canonical(const SimpleGraph& g) {
  if (g.order() > kExhaustiveCanonicalLimit)
    throw GraphError(ErrorCode::SizeExceeded, "is_canonical is limited to 12 vertices");
  std::vector<int> identity(g.order());
  std::iota(identity.begin(), identity.end(), 0);
  return OrderSearch(g).nothing_smaller_than(columns_of(g, identity));
}

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<Permutation> automorphisms(const SimpleGraph& g) {
  const int n = g.order();
  if (n > kMaxAutomorphismOrder)
    throw GraphError(ErrorCode::SizeExceeded,
                     "automorphisms limited to " + std::to_string(kMaxAutomorphismOrder) + " vertices");
  std::vector<Permutation> out;
  Permutation image(n, -1);
  Bits used = 0;
  // Assign images to vertices 0, 1, ... in order; check adjacency to every
  // already-mapped vertex.
  auto extend = [&](auto&& self, int v) -> void {
    if (v == n) {
      out.push_back(image);
      return;
    }
    for (int w = 0; w < n; ++w) {
      if ((used >> w) & 1U) continue;
      if (g.degree(w) != g.degree(v)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = g.adjacent(u, v) == g.adjacent(image[u], w);
      if (!ok) continue;
      image[v] = w;
      used |= Bits{1} << w;
      self(self, v + 1);
      used &= ~(Bits{1} << w);
    }
    image[v] = -1;
  };
  extend(extend, 0);
  return out;
}

}  // namespace primegraph
