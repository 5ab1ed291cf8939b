#include "primegraph/generate.hpp"

#include <algorithm>
#include <string>

#include "primegraph/canonical.hpp"
#include "primegraph/enumerate.hpp"
#include "primegraph/error.hpp"

namespace primegraph {
namespace {

std::string bridge_name(int m, int n) { return "B_{" + std::to_string(m) + "," + std::to_string(n) + "}"; }

bool in_bridge_class(const SimpleGraph& h) {
  const auto spec = recognize_bridge(h);
  return spec && spec->admissible();
}

}  // namespace

SimpleGraph bridge_graph(int m, int n) {
  if (n < 1 || m < n) throw GraphError(ErrorCode::BadParams, "bridge graph needs m >= n >= 1");
  if (m + n > kMaxVertices) throw GraphError(ErrorCode::BadParams, "bridge graph exceeds 64 vertices");
  SimpleGraph g(m + n);
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v) g.add_edge(u, v);
  for (int u = m; u < m + n; ++u)
    for (int v = u + 1; v < m + n; ++v) g.add_edge(u, v);
  g.add_edge(m - 1, m);
  return g;
}

BridgeSpec bridge_spec(int m, int n) {
  if (n < 1 || m < n) throw GraphError(ErrorCode::BadParams, "bridge graph needs m >= n >= 1");
  return BridgeSpec{m, n, {m - 1, m}};
}

SimpleGraph vertex_duplication(const SimpleGraph& g, int v) {
  if (v < 0 || v >= g.order()) throw GraphError(ErrorCode::BadVertex, "vertex " + std::to_string(v));
  return add_vertex(g, g.neighbors(v) | (Bits{1} << v));
}

SimpleGraph grow_mpg(const SimpleGraph& g) {
  if (!is_mpg(g)) throw GraphError(ErrorCode::NotMpg, "input is not a minimal prime graph");
  return vertex_duplication(g, 0);
}

SimpleGraph grow_bridge(const BridgeSpec& spec, BridgeSide side) {
  const SimpleGraph base = bridge_graph(spec.m, spec.n);
  const int grown_large = spec.m + (side == BridgeSide::Large ? 1 : 0);
  const int grown_small = spec.n + (side == BridgeSide::Small ? 1 : 0);
  const int m = std::max(grown_large, grown_small);
  const int n = std::min(grown_large, grown_small);
  if (n == 1 && m > 2)
    throw GraphError(ErrorCode::Inadmissible, bridge_name(m, n) + " is not a minimally connected prime graph");
  const Bits clique = side == BridgeSide::Large ? low_bits(spec.m) : low_bits(spec.m + spec.n) & ~low_bits(spec.m);
  return add_vertex(base, clique);
}

SimpleGraph bridge_to_mpg(const BridgeSpec& spec) {
  if (spec.n < 2)
    throw GraphError(ErrorCode::TooSmall, "both cliques need at least two vertices");
  const SimpleGraph base = bridge_graph(spec.m, spec.n);
  const Bits skip = (Bits{1} << (spec.m - 1)) | (Bits{1} << spec.m);
  return add_vertex(base, base.vertex_mask() & ~skip);
}

GenerationReport verify_generation_relations(int max_order) {
  if (max_order > kMaxGenerationCheckOrder)
    throw GraphError(ErrorCode::SizeExceeded,
                     "generation check limited to " + std::to_string(kMaxGenerationCheckOrder) + " vertices");
  GenerationReport report;
  report.max_order = max_order;

  for (int k = 2; k <= max_order; ++k) {
    for (const CanonicalForm& f : enumerate_class(k, GraphClass::Mpg)) {
      const SimpleGraph g = f.to_graph();
      ++report.mpgs_checked;
      bool has_mpg_extension = false;
      for (Bits nbhd = 0; nbhd < (Bits{1} << k); ++nbhd) {
        const SimpleGraph h = add_vertex(g, nbhd);
        ++report.extensions_checked;
        if (recognize_bridge(h)) {
          report.mpg_never_to_bridge = false;
          report.failures.push_back("MPG " + f.bit_string() + " extends to a bridge graph");
        }
        if (!has_mpg_extension && is_mpg(h)) has_mpg_extension = true;
      }
      if (!has_mpg_extension) {
        report.mpg_to_mpg = false;
        report.failures.push_back("MPG " + f.bit_string() + " has no MPG extension");
      }
    }
  }

  for (int m = 1; m <= max_order; ++m) {
    for (int n = 1; n <= m && m + n <= max_order; ++n) {
      const BridgeSpec spec = bridge_spec(m, n);
      if (!spec.admissible()) continue;
      ++report.bridges_checked;
      const SimpleGraph g = bridge_graph(m, n);
      bool to_bridge = false;
      bool to_mpg = false;
      for (Bits nbhd = 0; nbhd < (Bits{1} << (m + n)); ++nbhd) {
        const SimpleGraph h = add_vertex(g, nbhd);
        ++report.extensions_checked;
        to_bridge = to_bridge || in_bridge_class(h);
        if (n >= 2) to_mpg = to_mpg || is_mpg(h);
      }
      if (!to_bridge) {
        report.bridge_to_bridge = false;
        report.failures.push_back(bridge_name(m, n) + " has no admissible bridge extension");
      }
      if (n >= 2 && !to_mpg) {
        report.bridge_to_mpg = false;
        report.failures.push_back(bridge_name(m, n) + " has no MPG extension");
      }
    }
  }
  return report;
}

}  // namespace primegraph
