#include "primegraph/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_set>

#include "primegraph/classify.hpp"
#include "primegraph/coloring.hpp"
#include "primegraph/error.hpp"

namespace primegraph {
namespace {

void check_order(int k) {
  if (k < 1) throw GraphError(ErrorCode::BadParams, "vertex count must be positive");
  if (k > kMaxEnumerationOrder)
    throw GraphError(ErrorCode::SizeExceeded,
                     "exhaustive enumeration limited to " + std::to_string(kMaxEnumerationOrder) + " vertices");
}

std::vector<CanonicalForm> extend_level(const std::vector<CanonicalForm>& parents, int jobs) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, parents.size()));
  std::vector<std::vector<CanonicalForm>> found(workers);
  auto work = [&](std::size_t id) {
    for (std::size_t i = id; i < parents.size(); i += workers) {
      const SimpleGraph parent = parents[i].to_graph();
      const Bits limit = Bits{1} << parent.order();
      for (Bits nbhd = 0; nbhd < limit; ++nbhd) {
        const SimpleGraph child = add_vertex(parent, nbhd);
        if (is_canonical(child)) found[id].push_back(CanonicalForm::of_labeled(child));
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t id = 0; id < workers; ++id) threads.emplace_back(work, id);
    for (auto& t : threads) t.join();
  }
  std::vector<CanonicalForm> level;
  for (auto& part : found) level.insert(level.end(), part.begin(), part.end());
  std::sort(level.begin(), level.end());
  return level;
}

std::int64_t floor_half(std::int64_t x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

std::set<CanonicalForm> complements_of(const std::vector<CanonicalForm>& forms) {
  std::set<CanonicalForm> out;
  for (const CanonicalForm& f : forms) out.insert(canonical_form(complement(f.to_graph())));
  return out;
}

}  // namespace

std::string_view to_string(GraphClass cls) {
  switch (cls) {
    case GraphClass::All: return "ALL";
    case GraphClass::Prime: return "PRIME";
    case GraphClass::Mpg: return "MPG";
    case GraphClass::Mcpg: return "MCPG";
    case GraphClass::Pdmpg: return "PDMPG";
    case GraphClass::MaxTf3c: return "MAX_TF3C";
  }
  return "UNKNOWN";
}

std::optional<GraphClass> parse_graph_class(std::string_view name) {
  for (GraphClass c : {GraphClass::All, GraphClass::Prime, GraphClass::Mpg, GraphClass::Mcpg, GraphClass::Pdmpg,
                       GraphClass::MaxTf3c})
    if (to_string(c) == name) return c;
  return std::nullopt;
}

bool is_max_tf3c(const SimpleGraph& g) {
  if (has_triangle(g) || !is_k_colorable(g, 3)) return false;
  const SimpleGraph c = complement(g);
  for (const Edge& e : c.edges()) {
    // A new edge uv closes a triangle iff u and v share a neighbor.
    if (g.neighbors(e.u) & g.neighbors(e.v)) continue;
    if (is_k_colorable(with_edge(g, e), 3)) return false;
  }
  return true;
}

bool is_max_triangle_free(const SimpleGraph& g) {
  if (has_triangle(g)) return false;
  for (const Edge& e : complement(g).edges())
    if ((g.neighbors(e.u) & g.neighbors(e.v)) == 0) return false;
  return true;
}

bool in_class(const SimpleGraph& g, GraphClass cls) {
  switch (cls) {
    case GraphClass::All: return true;
    case GraphClass::Prime: return is_prime_graph(g);
    case GraphClass::Mpg: return is_mpg(g);
    case GraphClass::Mcpg: return is_mcpg(g);
    case GraphClass::Pdmpg: return is_pdmpg(g);
    case GraphClass::MaxTf3c: return is_max_tf3c(g);
  }
  return false;
}

const std::vector<CanonicalForm>& all_graphs(int k, int jobs) {
  check_order(k);
  static std::mutex mutex;
  static std::map<int, std::vector<CanonicalForm>> cache;
  std::lock_guard lock(mutex);
  if (cache.empty()) cache.emplace(1, std::vector<CanonicalForm>{CanonicalForm::of_labeled(SimpleGraph(1))});
  for (int level = 2; level <= k; ++level)
    if (!cache.count(level)) cache.emplace(level, extend_level(cache.at(level - 1), jobs));
  return cache.at(k);
}

std::vector<CanonicalForm> enumerate_class(int k, GraphClass cls, int jobs) {
  std::vector<CanonicalForm> out;
  for (const CanonicalForm& f : all_graphs(k, jobs))
    if (in_class(f.to_graph(), cls)) out.push_back(f);
  return out;
}

CountingDeltas counting_deltas(int k, int jobs) {
  check_order(k);
  const auto mpg = enumerate_class(k, GraphClass::Mpg, jobs);
  const auto mcpg = enumerate_class(k, GraphClass::Mcpg, jobs);
  const auto pdmpg = enumerate_class(k, GraphClass::Pdmpg, jobs);
  const std::set<CanonicalForm> mpg_set(mpg.begin(), mpg.end());
  CountingDeltas d;
  d.k = k;
  for (const auto& f : pdmpg) {
    if (mpg_set.count(f)) continue;
    ++d.pdmpg_minus_mpg;
    if (f.order() >= 2) ++d.pdmpg_minus_mpg_min2;
  }
  for (const auto& f : mcpg)
    if (!mpg_set.count(f)) ++d.mcpg_minus_mpg;
  d.predicted_pdmpg_minus_mpg = floor_half(k - 1);
  if (k > 3) d.predicted_mcpg_minus_mpg = floor_half(k - 1) - 1;
  return d;
}

bool verify_bijection(int k, int jobs) {
  check_order(k);
  const auto pdmpg = enumerate_class(k, GraphClass::Pdmpg, jobs);
  const auto mpg = enumerate_class(k, GraphClass::Mpg, jobs);
  const auto maxtf = enumerate_class(k, GraphClass::MaxTf3c, jobs);
  std::set<CanonicalForm> maxtf_set(maxtf.begin(), maxtf.end());
  std::set<CanonicalForm> chromatic3;
  for (const auto& f : maxtf)
    if (chromatic_number(f.to_graph()) == 3) chromatic3.insert(f);
  const auto pd_image = complements_of(pdmpg);
  const auto mpg_image = complements_of(mpg);
  return pd_image.size() == pdmpg.size() && pd_image == maxtf_set && mpg_image.size() == mpg.size() &&
         mpg_image == chromatic3;
}

bool EnumerationReport::invariants_hold() const {
  return std::all_of(levels.begin(), levels.end(), [](const LevelReport& l) { return l.violations.empty(); });
}

EnumerationReport build_enumeration_report(int max_k, int jobs) {
  check_order(max_k);
  EnumerationReport report;
  for (int k = 1; k <= max_k; ++k) {
    LevelReport l;
    l.k = k;
    l.graphs = static_cast<std::int64_t>(all_graphs(k, jobs).size());
    for (const CanonicalForm& f : all_graphs(k, jobs)) {
      const SimpleGraph g = f.to_graph();
      if (is_max_triangle_free(g)) ++l.max_triangle_free;
      if (is_max_tf3c(g)) {
        ++l.max_tf3c;
        if (chromatic_number(g) == 3) ++l.max_tf3c_chromatic3;
      }
      const Classification c = [&] {
        Classification out;
        out.is_prime = is_prime_graph(g);
        if (out.is_prime) {
          out.is_pdmpg = is_pdmpg(g);
          out.is_mpg = is_mpg(g);
          out.is_mcpg = is_mcpg(g);
        }
        return out;
      }();
      l.prime += c.is_prime;
      l.mpg += c.is_mpg;
      l.mcpg += c.is_mcpg;
      l.pdmpg += c.is_pdmpg;
    }
    l.deltas = counting_deltas(k, jobs);
    l.bijection = verify_bijection(k, jobs);

    auto violate = [&](bool ok, const std::string& what) {
      if (!ok) l.violations.push_back(what);
    };
    violate(l.mpg <= l.mcpg, "MPG count exceeds MCPG count");
    violate(l.mcpg <= l.prime, "MCPG count exceeds prime-graph count");
    violate(l.mpg <= l.pdmpg, "MPG count exceeds PDMPG count");
    violate(l.pdmpg == l.max_tf3c, "PDMPG count differs from MAX_TF3C count");
    violate(l.mpg == l.max_tf3c_chromatic3, "MPG count differs from chromatic-3 MAX_TF3C count");
    violate(l.bijection, "complementation is not a bijection PDMPG -> MAX_TF3C");

    const CountingDeltas& d = l.deltas;
    if (!d.pdmpg_matches())
      l.discrepancies.push_back("|PDMPG \\ MPG| = " + std::to_string(d.pdmpg_minus_mpg) + ", predicted " +
                                std::to_string(d.predicted_pdmpg_minus_mpg));
    if (!d.mcpg_matches())
      l.discrepancies.push_back("|MCPG \\ MPG| = " + std::to_string(d.mcpg_minus_mpg) + ", predicted " +
                                std::to_string(*d.predicted_mcpg_minus_mpg));
    report.levels.push_back(std::move(l));
  }
  return report;
}

SimpleGraph grotzsch_graph() {
  SimpleGraph g(11);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, (i + 1) % 5);
    g.add_edge(5 + i, (i + 4) % 5);
    g.add_edge(10, 5 + i);
  }
  return g;
}

SimpleGraph bipartite_seed(int q, std::uint64_t bits) {
  if (q < 1 || q > 3) throw GraphError(ErrorCode::BadParams, "seed part size must be 1..3");
  SimpleGraph g(3 * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < 2 * q; ++b)
      if ((bits >> (a * 2 * q + b)) & 1U) g.add_edge(a, q + b);
  return g;
}

SimpleGraph folklore_embed(const SimpleGraph& bipartite, int q) {
  if (q < 1 || 4 * q > kMaxVertices || bipartite.order() != 3 * q)
    throw GraphError(ErrorCode::BadParts, "seed must have parts of sizes q and 2q");
  const Bits part_a = low_bits(q);
  const Bits part_b = low_bits(3 * q) & ~part_a;
  for (int v = 0; v < 3 * q; ++v) {
    const Bits own = ((part_a >> v) & 1U) ? part_a : part_b;
    if (bipartite.neighbors(v) & own) throw GraphError(ErrorCode::BadParts, "edge inside a part");
  }
  SimpleGraph g(4 * q);
  for (const Edge& e : bipartite.edges()) g.add_edge(e.u, e.v);
  for (int a = 0; a < q; ++a) {
    const int prime = 3 * q + a;
    g.add_edge(a, prime);
    for (int b = q; b < 3 * q; ++b)
      if (!bipartite.adjacent(a, b)) g.add_edge(prime, b);
  }
  return g;
}

std::uint64_t recover_seed(const SimpleGraph& embedding, int q) {
  std::uint64_t bits = 0;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < 2 * q; ++b)
      if (!embedding.adjacent(3 * q + a, q + b)) bits |= std::uint64_t{1} << (a * 2 * q + b);
  return bits;
}

SimpleGraph saturate_tf3c(const SimpleGraph& g) {
  if (has_triangle(g) || !is_k_colorable(g, 3))
    throw GraphError(ErrorCode::PreconditionFailed, "input must be triangle-free and 3-colorable");
  SimpleGraph h = g;
  for (const Edge& e : complement(g).edges()) {
    if (h.neighbors(e.u) & h.neighbors(e.v)) continue;
    SimpleGraph candidate = with_edge(h, e);
    if (is_k_colorable(candidate, 3)) h = candidate;
  }
  return h;
}

std::uint64_t lower_bound_census(int q) {
  if (q < 1) throw GraphError(ErrorCode::BadParams, "q must be positive");
  if (q > 3) throw GraphError(ErrorCode::SizeExceeded, "census limited to q <= 3");
  const std::uint64_t seeds = std::uint64_t{1} << (2 * q * q);
  std::unordered_set<CanonicalForm, CanonicalFormHash> distinct;
  for (std::uint64_t s = 0; s < seeds; ++s)
    distinct.insert(CanonicalForm::of_labeled(folklore_embed(bipartite_seed(q, s), q)));
  return distinct.size();
}

}  // namespace primegraph
