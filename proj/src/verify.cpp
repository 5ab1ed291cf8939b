#include "primegraph/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "primegraph/canonical.hpp"
#include "primegraph/classify.hpp"
#include "primegraph/coloring.hpp"
#include "primegraph/enumerate.hpp"
#include "primegraph/error.hpp"
#include "primegraph/generate.hpp"
#include "primegraph/hamiltonian.hpp"
#include "primegraph/structure.hpp"

namespace primegraph {
namespace {

constexpr std::size_t kMaxExamples = 8;

/// Collects up to kMaxExamples graph6 strings per label.
class Examples {
 public:
  void add(const std::string& label, const SimpleGraph& g) {
    auto& list = lists_[label];
    ++counts_[label];
    if (list.size() < kMaxExamples) list.push_back(serialize_graph6(g));
  }
  Json to_json() const {
    Json j = Json::object();
    for (const auto& [label, list] : lists_) j[label] = {{"count", counts_.at(label)}, {"examples", list}};
    return j;
  }

 private:
  std::map<std::string, std::vector<std::string>> lists_;
  std::map<std::string, long> counts_;
};

void record(SuiteResult& r, const Examples& fail, const Examples& note) {
  r.details["failures"] = fail.to_json();
  r.details["discrepancies"] = note.to_json();
  for (const auto& [label, entry] : r.details["failures"].items())
    r.failures.push_back(label + " (" + std::to_string(entry["count"].get<long>()) + ")");
  for (const auto& [label, entry] : r.details["discrepancies"].items())
    r.discrepancies.push_back(label + " (" + std::to_string(entry["count"].get<long>()) + ")");
}

std::vector<SimpleGraph> graphs_of(int k, GraphClass cls, int jobs) {
  std::vector<SimpleGraph> out;
  for (const CanonicalForm& f : enumerate_class(k, cls, jobs)) out.push_back(f.to_graph());
  return out;
}

bool proper_2_coloring_of_complement(const SimpleGraph& g, const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != g.order()) return false;
  for (int c : colors)
    if (c != 0 && c != 1) return false;
  return is_proper_coloring(complement(g), colors);
}

void diameter_suite(SuiteResult& r, int jobs) {
  Examples fail;
  Examples note;
  Json levels = Json::array();
  for (int k = 1; k <= r.max_k; ++k) {
    std::map<std::string, long> tally;
    for (const SimpleGraph& g : graphs_of(k, GraphClass::Prime, jobs)) {
      const std::optional<int> d = diameter(g);
      DiameterClass tag;
      try {
        tag = classify_diameter(g);
      } catch (const std::logic_error&) {
        fail.add("finite diameter above 3", g);
        continue;
      }
      tally[std::string(to_string(tag))]++;
      if (!d) {
        bool all_complete = true;
        for (const VertexSet& c : components(g)) all_complete = all_complete && is_clique(g, c.bits());
        if (!all_complete) fail.add("disconnected with a non-complete component", g);
        continue;
      }
      const bool mapped = (tag == DiameterClass::Complete && *d <= 1) ||
                          (tag == DiameterClass::Generic && *d == 2) ||
                          (tag == DiameterClass::BridgeBound && *d == 3);
      if (!mapped) fail.add("tag disagrees with diameter", g);
      if ((*d <= 1) != is_clique(g, g.vertex_mask())) fail.add("diameter 1 without completeness", g);

      if (*d == 3 && !proper_2_coloring_of_complement(g, diameter3_complement_coloring(g)))
        fail.add("diameter-3 complement coloring is improper", g);

      for (const Edge& e : g.edges()) {
        const SimpleGraph h = without_edge(g, e);
        const std::optional<int> dh = diameter(h);
        if (dh && *dh < *d) fail.add("edge removal decreased the diameter", g);
      }

      if (k >= 2) {
        const DiameterCrossCheck x = cross_check_diameter(g);
        if (!x.forward_holds) fail.add("diameter 3 but a reduction ends outside the bridge graphs", g);
        if (!x.converse_holds) note.add("every reduction ends in a bridge graph but diameter is not 3", g);
      }
    }
    Json level = {{"k", k}};
    for (const auto& [tag, n] : tally) level[tag] = n;
    levels.push_back(std::move(level));
  }
  r.details["levels"] = std::move(levels);
  record(r, fail, note);
}

void hamilton_suite(SuiteResult& r, int jobs) {
  Examples fail;
  Examples note;
  std::map<std::string, long> reasons;
  long mpgs = 0;
  for (int k = 1; k <= r.max_k; ++k) {
    for (const SimpleGraph& g : graphs_of(k, GraphClass::Mpg, jobs)) {
      ++mpgs;
      const auto cycle = hamiltonian_cycle(g);
      if (!cycle || !is_hamiltonian_cycle(g, *cycle)) fail.add("MPG without a Hamiltonian cycle", g);
    }
    for (const SimpleGraph& g : graphs_of(k, GraphClass::Prime, jobs)) {
      if (!is_connected(g)) continue;
      const HamiltonianVerdict v = is_hamiltonian_prime(g);
      reasons[std::string(to_string(v.reason))]++;
      if (v.hamiltonian && !is_hamiltonian_cycle(g, *v.cycle)) fail.add("invalid Hamiltonian cycle", g);
      if (!v.hamiltonian && v.reason == NonHamiltonianReason::Unexplained)
        fail.add("non-Hamiltonian without the bridge structure", g);
      if (v.hamiltonian && match_bridge_with_shared_extra_edges(g))
        note.add("Hamiltonian yet matches the bridge structure", g);
    }
  }
  Json paths = Json::array();
  for (int m = 1; m <= r.max_k; ++m) {
    for (int n = 1; n <= m && m + n <= r.max_k; ++n) {
      const std::uint64_t counted = count_hamiltonian_paths(bridge_graph(m, n));
      const std::uint64_t expected = hamiltonian_path_count_bridge(m, n);
      paths.push_back({{"m", m}, {"n", n}, {"counted", counted}, {"expected", expected}});
      if (counted != expected)
        r.failures.push_back("path count of B_{" + std::to_string(m) + "," + std::to_string(n) + "}");
    }
  }
  r.details["mpgs_checked"] = mpgs;
  r.details["connected_prime_reasons"] = reasons;
  r.details["bridge_path_counts"] = std::move(paths);
  record(r, fail, note);
}

void selfcomp_suite(SuiteResult& r, int jobs) {
  std::set<CanonicalForm> expected;
  if (r.max_k >= 4) expected.insert(canonical_form(bridge_graph(2, 2)));
  if (r.max_k >= 5) expected.insert(canonical_form(SimpleGraph::cycle(5)));
  std::set<CanonicalForm> found;
  Json list = Json::array();
  for (int k = 1; k <= r.max_k; ++k) {
    for (const CanonicalForm& f : enumerate_class(k, GraphClass::Mcpg, jobs)) {
      if (!is_self_complementary(f.to_graph())) continue;
      found.insert(f);
      list.push_back(serialize_graph6(f.to_graph()));
    }
  }
  r.details["self_complementary_mcpgs"] = std::move(list);
  if (found != expected) r.failures.push_back("self-complementary MCPGs are not exactly B_{2,2} and C5");
}

void bijection_suite(SuiteResult& r, int jobs) {
  Json levels = Json::array();
  for (int k = 1; k <= r.max_k; ++k) {
    const bool ok = verify_bijection(k, jobs);
    long max_tf = 0;
    long max_tf3c = 0;
    for (const CanonicalForm& f : all_graphs(k, jobs)) {
      const SimpleGraph g = f.to_graph();
      max_tf += is_max_triangle_free(g);
      max_tf3c += is_max_tf3c(g);
    }
    levels.push_back({{"k", k},
                      {"bijection", ok},
                      {"max_tf3c", max_tf3c},
                      {"max_triangle_free", max_tf},
                      {"pdmpg", enumerate_class(k, GraphClass::Pdmpg, jobs).size()},
                      {"mpg", enumerate_class(k, GraphClass::Mpg, jobs).size()}});
    if (!ok) r.failures.push_back("complementation is not a bijection at k = " + std::to_string(k));
  }
  r.details["levels"] = std::move(levels);
  // Every triangle-free graph on at most 9 vertices is 3-colorable, so the
  // two maximal classes coincide there; the Groetzsch graph separates them.
  const SimpleGraph w = grotzsch_graph();
  const bool separates = is_max_triangle_free(w) && !is_max_tf3c(w) && chromatic_number(w) == 4;
  r.details["groetzsch_witness"] = {{"graph6", serialize_graph6(w)}, {"maximal_triangle_free_not_tf3c", separates}};
  if (!separates) r.failures.push_back("Groetzsch graph does not separate the maximal classes");
  r.discrepancies.push_back("MAX_TF3C vs maximal triangle-free containment is not decidable by enumeration at k <= 9");
}

void counting_suite(SuiteResult& r, int jobs) {
  Json levels = Json::array();
  for (int k = 1; k <= r.max_k; ++k) {
    const CountingDeltas d = counting_deltas(k, jobs);
    const std::string at = " at k = " + std::to_string(k);
    const bool odd = k % 2 == 1;
    Json level = {{"k", k},
                  {"pdmpg_minus_mpg", d.pdmpg_minus_mpg},
                  {"pdmpg_minus_mpg_min2", d.pdmpg_minus_mpg_min2},
                  {"predicted_pdmpg_minus_mpg", d.predicted_pdmpg_minus_mpg},
                  {"mcpg_minus_mpg", d.mcpg_minus_mpg},
                  {"predicted_mcpg_minus_mpg", d.predicted_mcpg_minus_mpg ? Json(*d.predicted_mcpg_minus_mpg) : Json()}};
    levels.push_back(std::move(level));
    if (odd) {
      if (!d.pdmpg_min2_matches()) r.failures.push_back("|PDMPG \\ MPG| (two-vertex floor) disagrees" + at);
      if (!d.mcpg_matches()) r.failures.push_back("|MCPG \\ MPG| disagrees" + at);
      if (!d.pdmpg_matches())
        r.discrepancies.push_back("|PDMPG \\ MPG| without vertex floor is " + std::to_string(d.pdmpg_minus_mpg) +
                                  ", predicted " + std::to_string(d.predicted_pdmpg_minus_mpg) + at);
    } else {
      if (!d.pdmpg_matches())
        r.discrepancies.push_back("|PDMPG \\ MPG| is " + std::to_string(d.pdmpg_minus_mpg) + ", predicted " +
                                  std::to_string(d.predicted_pdmpg_minus_mpg) + at);
      if (!d.mcpg_matches())
        r.discrepancies.push_back("|MCPG \\ MPG| is " + std::to_string(d.mcpg_minus_mpg) + ", predicted " +
                                  std::to_string(*d.predicted_mcpg_minus_mpg) + at);
    }
  }
  r.details["levels"] = std::move(levels);
}

void generation_suite(SuiteResult& r) {
  const GenerationReport g = verify_generation_relations(r.max_k);
  r.details = {{"mpgs_checked", g.mpgs_checked},
               {"bridges_checked", g.bridges_checked},
               {"extensions_checked", g.extensions_checked},
               {"mpg_to_mpg", g.mpg_to_mpg},
               {"bridge_to_bridge", g.bridge_to_bridge},
               {"bridge_to_mpg", g.bridge_to_mpg},
               {"mpg_never_to_bridge", g.mpg_never_to_bridge}};
  r.failures = g.failures;
}

}  // namespace

std::vector<std::string_view> suite_names() {
  return {"diameter", "hamilton", "selfcomp", "bijection", "counting", "generation"};
}

int suite_limit(std::string_view suite) {
  if (suite == "diameter") return kMaxExhaustiveReductionOrder;
  if (suite == "generation") return kMaxGenerationCheckOrder;
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw GraphError(ErrorCode::BadParams, "unknown suite " + std::string(suite));
  return kMaxEnumerationOrder;
}

SuiteResult run_suite(std::string_view suite, int max_k, int jobs) {
  const int limit = suite_limit(suite);
  if (max_k < 1) throw GraphError(ErrorCode::BadParams, "max-k must be positive");
  if (max_k > limit)
    throw GraphError(ErrorCode::SizeExceeded,
                     "suite " + std::string(suite) + " is limited to " + std::to_string(limit) + " vertices");
  SuiteResult r;
  r.suite = suite;
  r.max_k = max_k;
  if (suite == "diameter") diameter_suite(r, jobs);
  if (suite == "hamilton") hamilton_suite(r, jobs);
  if (suite == "selfcomp") selfcomp_suite(r, jobs);
  if (suite == "bijection") bijection_suite(r, jobs);
  if (suite == "counting") counting_suite(r, jobs);
  if (suite == "generation") generation_suite(r);
  return r;
}

Json suite_json(const SuiteResult& r) {
  return Json{{"suite", r.suite},
              {"max_k", r.max_k},
              {"passed", r.passed()},
              {"failures", r.failures},
              {"discrepancies", r.discrepancies},
              {"details", r.details}};
}

}  // namespace primegraph
