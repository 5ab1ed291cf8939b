#include "primegraph/classify.hpp"

#include <map>
#include <random>
#include <string>

#include "primegraph/coloring.hpp"
#include "primegraph/error.hpp"
#include "primegraph/hamiltonian.hpp"

namespace primegraph {
namespace {

bool complement_is_prime(const SimpleGraph& g) {
  const SimpleGraph c = complement(g);
  return !has_triangle(c) && is_k_colorable(c, 3);
}

enum class Minimality { Prime, ConnectedPrime };

/// Every single-edge deletion breaks the tracked conditions.
bool minimal_under(const SimpleGraph& g, Minimality kind) {
  for (const Edge& e : g.edges()) {
    const SimpleGraph h = without_edge(g, e);
    if (kind == Minimality::ConnectedPrime && !is_connected(h)) continue;
    if (complement_is_prime(h)) return false;
  }
  return true;
}

void require_connected_prime(const SimpleGraph& g) {
  if (!is_prime_graph(g)) throw GraphError(ErrorCode::NotPrime, "input is not a prime graph");
  if (!is_connected(g)) throw GraphError(ErrorCode::Disconnected, "input is disconnected");
}

}  // namespace

bool is_prime_graph(const SimpleGraph& g) { return complement_is_prime(g); }

bool is_mpg(const SimpleGraph& g) {
  return g.order() >= 2 && is_connected(g) && is_prime_graph(g) && minimal_under(g, Minimality::Prime);
}

bool is_mcpg(const SimpleGraph& g) {
  return g.order() >= 2 && is_connected(g) && is_prime_graph(g) &&
         minimal_under(g, Minimality::ConnectedPrime);
}

bool is_pdmpg(const SimpleGraph& g) { return is_prime_graph(g) && minimal_under(g, Minimality::Prime); }

std::optional<BridgeSpec> recognize_bridge(const SimpleGraph& g) {
  const int total = g.order();
  if (total < 2) return std::nullopt;
  for (const Edge& e : g.edges()) {
    const SimpleGraph h = without_edge(g, e);
    const Bits side_u = reachable(h, e.u, h.vertex_mask());
    if ((side_u >> e.v) & 1U) continue;
    const Bits side_v = h.vertex_mask() & ~side_u;
    if (reachable(h, e.v, h.vertex_mask()) != side_v) continue;
    if (!is_clique(h, side_u) || !is_clique(h, side_v)) continue;
    const int su = std::popcount(side_u);
    const int sv = std::popcount(side_v);
    const auto pairs = [](int k) { return k * (k - 1) / 2; };
    if (g.edge_count() != pairs(su) + pairs(sv) + 1) continue;
    if (su >= sv) return BridgeSpec{su, sv, {e.u, e.v}};
    return BridgeSpec{sv, su, {e.v, e.u}};
  }
  return std::nullopt;
}

VertexSet bridge_large_side(const SimpleGraph& g, const BridgeSpec& spec) {
  const SimpleGraph h = without_edge(g, spec.bridge);
  return VertexSet(reachable(h, spec.bridge.u, h.vertex_mask()));
}

Classification classify(const SimpleGraph& g) {
  Classification c;
  c.is_prime = is_prime_graph(g);
  if (c.is_prime) {
    c.is_pdmpg = minimal_under(g, Minimality::Prime);
    const bool connected = is_connected(g);
    c.is_mpg = g.order() >= 2 && connected && c.is_pdmpg;
    c.is_mcpg = g.order() >= 2 && connected && minimal_under(g, Minimality::ConnectedPrime);
  }
  c.bridge = recognize_bridge(g);
  if (g.order() <= kMaxExactChromatic) c.complement_chromatic = chromatic_number(complement(g));
  c.diameter = diameter(g);
  if (g.order() <= kMaxHamiltonianCycleOrder) c.hamiltonian = hamiltonian_cycle(g).has_value();
  return c;
}

std::vector<Edge> removable_edges(const SimpleGraph& g) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    const SimpleGraph h = without_edge(g, e);
    if (is_connected(h) && is_prime_graph(h)) out.push_back(e);
  }
  return out;
}

Reduction reduce_to_mcpg(const SimpleGraph& g, EdgePolicy policy) {
  require_connected_prime(g);
  if (g.order() < 2) throw GraphError(ErrorCode::TooSmall, "an MCPG needs at least two vertices");
  Reduction r{g, {}};
  std::mt19937_64 rng(policy.seed);
  while (true) {
    const std::vector<Edge> options = removable_edges(r.result);
    if (options.empty()) return r;
    Edge pick = options.front();
    if (policy.kind == EdgePolicy::Kind::Random) {
      std::uniform_int_distribution<std::size_t> dist(0, options.size() - 1);
      pick = options[dist(rng)];
    }
    r.result.remove_edge(pick.u, pick.v);
    r.removed.push_back(pick);
  }
}

std::set<CanonicalForm> all_mcpg_reductions(const SimpleGraph& g) {
  if (g.order() > kMaxExhaustiveReductionOrder)
    throw GraphError(ErrorCode::SizeExceeded,
                     "exhaustive reductions limited to " + std::to_string(kMaxExhaustiveReductionOrder) +
                         " vertices");
  require_connected_prime(g);
  std::map<CanonicalForm, std::set<CanonicalForm>> memo;
  auto visit = [&](auto&& self, const SimpleGraph& h) -> std::set<CanonicalForm> {
    CanonicalForm key = canonical_form(h);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::set<CanonicalForm> ends;
    const std::vector<Edge> options = removable_edges(h);
    if (options.empty()) {
      ends.insert(key);
    } else {
      for (const Edge& e : options) ends.merge(self(self, without_edge(h, e)));
    }
    memo.emplace(std::move(key), ends);
    return ends;
  };
  return visit(visit, g);
}

}  // namespace primegraph
