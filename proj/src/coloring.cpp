#include "primegraph/coloring.hpp"

#include <array>
#include <string>

#include "primegraph/error.hpp"

namespace primegraph {
namespace {

class Colorer {
 public:
  Colorer(const SimpleGraph& g, int k) : g_(g), k_(k), colors_(g.order(), -1) {}

  bool solve() { return extend(g_.vertex_mask(), 0); }
  std::vector<int> colors() const { return colors_; }

 private:
  Bits available(int v, int used) const {
    Bits avail = 0;
    const int limit = used < k_ ? used + 1 : k_;
    for (int c = 0; c < limit; ++c)
      if ((classes_[c] & g_.neighbors(v)) == 0) avail |= Bits{1} << c;
    return avail;
  }

  bool extend(Bits uncolored, int used) {
    if (!uncolored) return true;
    int pick = -1;
    int pick_options = 65;
    int pick_degree = -1;
    Bits pick_avail = 0;
    for (Bits b = uncolored; b; b &= b - 1) {
      const int v = std::countr_zero(b);
      const Bits avail = available(v, used);
      const int options = std::popcount(avail);
      if (options == 0) return false;
      const int degree = std::popcount(g_.neighbors(v) & uncolored);
      if (options < pick_options || (options == pick_options && degree > pick_degree)) {
        pick = v;
        pick_options = options;
        pick_degree = degree;
        pick_avail = avail;
      }
    }
    const Bits rest = uncolored & ~(Bits{1} << pick);
    for (Bits b = pick_avail; b; b &= b - 1) {
      const int c = std::countr_zero(b);
      colors_[pick] = c;
      classes_[c] |= Bits{1} << pick;
      if (extend(rest, c == used ? used + 1 : used)) return true;
      classes_[c] &= ~(Bits{1} << pick);
    }
    colors_[pick] = -1;
    return false;
  }

  const SimpleGraph& g_;
  int k_;
  std::vector<int> colors_;
  std::array<Bits, kMaxVertices> classes_{};
};

}  // namespace

std::optional<std::vector<int>> find_k_coloring(const SimpleGraph& g, int k) {
  if (k < 0) throw GraphError(ErrorCode::BadParams, "negative color count");
  if (k >= g.order()) {
    std::vector<int> colors(g.order());
    for (int v = 0; v < g.order(); ++v) colors[v] = v;
    return colors;
  }
  if (k == 0) return std::nullopt;
  Colorer colorer(g, k);
  if (!colorer.solve()) return std::nullopt;
  return colorer.colors();
}

bool is_proper_coloring(const SimpleGraph& g, const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != g.order()) return false;
  for (int c : colors)
    if (c < 0) return false;
  for (const Edge& e : g.edges())
    if (colors[e.u] == colors[e.v]) return false;
  return true;
}

int chromatic_number(const SimpleGraph& g) {
  if (g.order() > kMaxExactChromatic)
    throw GraphError(ErrorCode::SizeExceeded,
                     "exact chromatic number limited to " + std::to_string(kMaxExactChromatic) + " vertices");
  for (int k = 1;; ++k)
    if (is_k_colorable(g, k)) return k;
}

}  // namespace primegraph
