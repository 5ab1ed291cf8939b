#include "primegraph/graph.hpp"

#include <algorithm>
#include <string>

#include "primegraph/error.hpp"

namespace primegraph {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SizeExceeded: return "SIZE_EXCEEDED";
    case ErrorCode::EmptySet: return "EMPTY_SET";
    case ErrorCode::BadParams: return "BAD_PARAMS";
    case ErrorCode::BadVertex: return "BAD_VERTEX";
    case ErrorCode::NotPrime: return "NOT_PRIME";
    case ErrorCode::Disconnected: return "DISCONNECTED";
    case ErrorCode::NotMpg: return "NOT_MPG";
    case ErrorCode::Inadmissible: return "INADMISSIBLE";
    case ErrorCode::TooSmall: return "TOO_SMALL";
    case ErrorCode::PreconditionFailed: return "PRECONDITION_FAILED";
    case ErrorCode::NotBaseGraph: return "NOT_BASE_GRAPH";
    case ErrorCode::BadSpec: return "BAD_SPEC";
    case ErrorCode::BadParts: return "BAD_PARTS";
    case ErrorCode::MalformedInput: return "MALFORMED_INPUT";
  }
  return "UNKNOWN";
}

VertexSet::VertexSet(std::initializer_list<int> members) {
  for (int v : members) insert(v);
}

VertexSet VertexSet::range(int first, int last_exclusive) {
  VertexSet s;
  for (int v = first; v < last_exclusive; ++v) s.insert(v);
  return s;
}

void VertexSet::insert(int v) {
  if (v < 0 || v >= kMaxVertices) throw GraphError(ErrorCode::BadVertex, "vertex " + std::to_string(v));
  bits_ |= Bits{1} << v;
}

void VertexSet::erase(int v) {
  if (v < 0 || v >= kMaxVertices) throw GraphError(ErrorCode::BadVertex, "vertex " + std::to_string(v));
  bits_ &= ~(Bits{1} << v);
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (Bits b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

SimpleGraph::SimpleGraph(int n) : n_(n) {
  if (n < 1 || n > kMaxVertices)
    throw GraphError(ErrorCode::SizeExceeded, "vertex count " + std::to_string(n) + " outside 1..64");
}

SimpleGraph::SimpleGraph(int n, std::span<const Edge> edges) : SimpleGraph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

SimpleGraph SimpleGraph::complete(int n) {
  SimpleGraph g(n);
  for (int v = 0; v < n; ++v) g.adj_[v] = low_bits(n) & ~(Bits{1} << v);
  return g;
}

SimpleGraph SimpleGraph::cycle(int n) {
  if (n < 3) throw GraphError(ErrorCode::BadParams, "cycle needs at least 3 vertices");
  SimpleGraph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

SimpleGraph SimpleGraph::path(int n) {
  SimpleGraph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

void SimpleGraph::check_pair(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw GraphError(ErrorCode::BadVertex, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                               ") outside vertex range");
  if (u == v) throw GraphError(ErrorCode::BadVertex, "self-loop at " + std::to_string(u));
}

void SimpleGraph::add_edge(int u, int v) {
  check_pair(u, v);
  adj_[u] |= Bits{1} << v;
  adj_[v] |= Bits{1} << u;
}

void SimpleGraph::remove_edge(int u, int v) {
  check_pair(u, v);
  adj_[u] &= ~(Bits{1} << v);
  adj_[v] &= ~(Bits{1} << u);
}

int SimpleGraph::edge_count() const noexcept {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
  return twice / 2;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (Bits b = adj_[u] & ~low_bits(u + 1); b; b &= b - 1) out.push_back({u, std::countr_zero(b)});
  return out;
}

SimpleGraph complement(const SimpleGraph& g) {
  const int n = g.order();
  SimpleGraph h(n);
  for (int u = 0; u < n; ++u)
    for (Bits b = ~g.neighbors(u) & low_bits(n) & ~low_bits(u + 1); b; b &= b - 1)
      h.add_edge(u, std::countr_zero(b));
  return h;
}

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
  SimpleGraph h(a.order() + b.order());
  for (const Edge& e : a.edges()) h.add_edge(e.u, e.v);
  for (const Edge& e : b.edges()) h.add_edge(e.u + a.order(), e.v + a.order());
  return h;
}

SimpleGraph add_vertex(const SimpleGraph& g, Bits neighborhood) {
  const int n = g.order();
  if (n >= kMaxVertices) throw GraphError(ErrorCode::SizeExceeded, "cannot grow past 64 vertices");
  if (neighborhood & ~low_bits(n)) throw GraphError(ErrorCode::BadVertex, "neighborhood outside vertex range");
  SimpleGraph h(n + 1);
  for (const Edge& e : g.edges()) h.add_edge(e.u, e.v);
  for (Bits b = neighborhood; b; b &= b - 1) h.add_edge(n, std::countr_zero(b));
  return h;
}

SimpleGraph without_edge(const SimpleGraph& g, Edge e) {
  SimpleGraph h = g;
  h.remove_edge(e.u, e.v);
  return h;
}

SimpleGraph with_edge(const SimpleGraph& g, Edge e) {
  SimpleGraph h = g;
  h.add_edge(e.u, e.v);
  return h;
}

SimpleGraph relabel(const SimpleGraph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) throw GraphError(ErrorCode::BadParams, "permutation size mismatch");
  Bits seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= n || ((seen >> p) & 1U)) throw GraphError(ErrorCode::BadParams, "not a permutation");
    seen |= Bits{1} << p;
  }
  SimpleGraph h(n);
  for (const Edge& e : g.edges()) h.add_edge(perm[e.u], perm[e.v]);
  return h;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, const VertexSet& s) {
  if (s.empty()) throw GraphError(ErrorCode::EmptySet, "induced subgraph on empty vertex set");
  if (s.bits() & ~g.vertex_mask()) throw GraphError(ErrorCode::BadVertex, "vertex set outside graph");
  const std::vector<int> members = s.members();
  SimpleGraph h(static_cast<int>(members.size()));
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (g.adjacent(members[i], members[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

Bits reachable(const SimpleGraph& g, int start, Bits within) {
  Bits seen = Bits{1} << start;
  Bits frontier = seen;
  while (frontier) {
    Bits next = 0;
    for (Bits b = frontier; b; b &= b - 1) next |= g.neighbors(std::countr_zero(b));
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool is_connected(const SimpleGraph& g) {
  return reachable(g, 0, g.vertex_mask()) == g.vertex_mask();
}

std::vector<VertexSet> components(const SimpleGraph& g) {
  std::vector<VertexSet> out;
  Bits left = g.vertex_mask();
  while (left) {
    const Bits comp = reachable(g, std::countr_zero(left), g.vertex_mask());
    out.emplace_back(comp);
    left &= ~comp;
  }
  return out;
}

bool is_clique(const SimpleGraph& g, Bits s) {
  for (Bits b = s; b; b &= b - 1) {
    const int v = std::countr_zero(b);
    if ((g.neighbors(v) & s) != (s & ~(Bits{1} << v))) return false;
  }
  return true;
}

std::vector<int> distances_from(const SimpleGraph& g, int source) {
  std::vector<int> dist(g.order(), -1);
  dist[source] = 0;
  Bits seen = Bits{1} << source;
  Bits frontier = seen;
  for (int d = 1; frontier; ++d) {
    Bits next = 0;
    for (Bits b = frontier; b; b &= b - 1) next |= g.neighbors(std::countr_zero(b));
    next &= ~seen;
    for (Bits b = next; b; b &= b - 1) dist[std::countr_zero(b)] = d;
    seen |= next;
    frontier = next;
  }
  return dist;
}

std::optional<int> diameter(const SimpleGraph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) {
    for (int d : distances_from(g, v)) {
      if (d < 0) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

bool has_triangle(const SimpleGraph& g) {
  for (int u = 0; u < g.order(); ++u)
    for (Bits b = g.neighbors(u) & ~low_bits(u + 1); b; b &= b - 1)
      if (g.neighbors(u) & g.neighbors(std::countr_zero(b))) return true;
  return false;
}

}  // namespace primegraph
