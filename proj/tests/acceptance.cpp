// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "primegraph/canonical.hpp"
#include "primegraph/classify.hpp"
#include "primegraph/coloring.hpp"
#include "primegraph/enumerate.hpp"
#include "primegraph/generate.hpp"
#include "primegraph/hamiltonian.hpp"
#include "primegraph/io.hpp"
#include "primegraph/reseminant.hpp"
#include "primegraph/structure.hpp"

using namespace primegraph;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass || detail.size() < 400) detail += (detail.empty() ? "" : "; ") + what;
    pass = false;
  }
};

std::vector<SimpleGraph> connected_primes(int k) {
  std::vector<SimpleGraph> out;
  for (const CanonicalForm& f : enumerate_class(k, GraphClass::Prime)) {
    SimpleGraph g = f.to_graph();
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

std::string g6(const SimpleGraph& g) { return serialize_graph6(g); }

Verdict bridge_law() {
  Verdict v;
  for (int m = 1; m <= 8; ++m)
    for (int n = 1; n <= m && m + n <= 9; ++n) {
      const bool expected = (m > 1 && n > 1) || (n == 1 && m <= 2);
      v.require(is_mcpg(bridge_graph(m, n)) == expected,
                "B_{" + std::to_string(m) + "," + std::to_string(n) + "}");
      v.require(oracle::mcpg(oracle::matrix(bridge_graph(m, n))) == expected, "oracle disagrees");
    }
  return v;
}

Verdict mcpg_minus_mpg() {
  Verdict v;
  for (int k = 2; k <= 8; ++k)
    for (const CanonicalForm& f : enumerate_class(k, GraphClass::Mcpg)) {
      const SimpleGraph g = f.to_graph();
      if (is_mpg(g)) continue;
      const auto spec = recognize_bridge(g);
      v.require(spec && spec->admissible(), "non-bridge " + g6(g));
    }
  return v;
}

Verdict diameter_theorem() {
  Verdict v;
  for (int k = 1; k <= 8; ++k)
    for (const SimpleGraph& g : connected_primes(k)) {
      const int d = oracle::diameter(oracle::matrix(g));
      const DiameterClass c = classify_diameter(g);
      const bool ok = d <= 1 ? c == DiameterClass::Complete
                              : (d == 2 ? c == DiameterClass::Generic : d == 3 && c == DiameterClass::BridgeBound);
      v.require(ok, "tag mismatch on " + g6(g));
    }
  std::vector<std::string> converse;
  int forward_failures = 0;
  for (int k = 2; k <= 7; ++k)
    for (const SimpleGraph& g : connected_primes(k)) {
      const DiameterCrossCheck x = cross_check_diameter(g);
      if (!x.forward_holds) ++forward_failures;
      if (!x.converse_holds) converse.push_back(g6(g));
    }
  v.require(forward_failures == 0, std::to_string(forward_failures) + " diameter-3 graphs with a non-bridge reduction");
  if (!converse.empty()) {
    std::string list;
    for (std::size_t i = 0; i < converse.size() && i < 5; ++i) list += (i ? " " : "") + converse[i];
    v.require(false, "converse fails on " + std::to_string(converse.size()) +
                         " graphs of diameter < 3 whose reductions all end in bridge graphs, e.g. " + list +
                         " (C4 = Ch, K4 = C~: B_{2,2} is the only 4-vertex MCPG)");
  }
  return v;
}

Verdict diameter3_coloring() {
  Verdict v;
  int seen = 0;
  for (int k = 1; k <= 8; ++k)
    for (const SimpleGraph& g : connected_primes(k)) {
      if (diameter(g) != 3) continue;
      ++seen;
      const auto colors = diameter3_complement_coloring(g);
      v.require(is_proper_coloring(complement(g), colors), g6(g));
      for (int c : colors) v.require(c == 0 || c == 1, "third color on " + g6(g));
    }
  v.detail = v.pass ? std::to_string(seen) + " graphs" : v.detail;
  return v;
}

Verdict mpg_diameter() {
  Verdict v;
  for (int k = 1; k <= 9; ++k)
    for (const CanonicalForm& f : enumerate_class(k, GraphClass::Mpg))
      v.require(oracle::diameter(oracle::matrix(f.to_graph())) == 2, g6(f.to_graph()));
  return v;
}

Verdict hamiltonicity() {
  Verdict v;
  for (int k = 1; k <= 9; ++k)
    for (const CanonicalForm& f : enumerate_class(k, GraphClass::Mpg)) {
      const SimpleGraph g = f.to_graph();
      const auto cycle = hamiltonian_cycle(g);
      v.require(cycle && is_hamiltonian_cycle(g, *cycle), "MPG without cycle " + g6(g));
    }
  int non_hamiltonian = 0;
  for (int k = 1; k <= 8; ++k)
    for (const SimpleGraph& g : connected_primes(k)) {
      const HamiltonianVerdict h = is_hamiltonian_prime(g);
      v.require(h.hamiltonian == oracle::hamiltonian(oracle::matrix(g)), "backtracking disagrees on " + g6(g));
      if (h.hamiltonian) continue;
      ++non_hamiltonian;
      v.require(h.reason != NonHamiltonianReason::Unexplained, "unexplained " + g6(g));
    }
  if (v.pass) v.detail = std::to_string(non_hamiltonian) + " non-Hamiltonian graphs, all explained";
  return v;
}

Verdict path_counts() {
  Verdict v;
  for (int m = 1; m <= 9; ++m)
    for (int n = 1; n <= m && m + n <= 10; ++n)
      v.require(count_hamiltonian_paths(bridge_graph(m, n)) == hamiltonian_path_count_bridge(m, n) &&
                    hamiltonian_path_count_bridge(m, n) == oracle::factorial(m - 1) * oracle::factorial(n - 1),
                "B_{" + std::to_string(m) + "," + std::to_string(n) + "}");
  return v;
}

Verdict self_complementary() {
  Verdict v;
  std::set<CanonicalForm> found;
  for (int k = 1; k <= 9; ++k)
    for (const CanonicalForm& f : enumerate_class(k, GraphClass::Mcpg)) {
      const SimpleGraph g = f.to_graph();
      if (is_self_complementary(g)) found.insert(f);
      if (k <= 7)
        v.require(is_self_complementary(g) ==
                      oracle::isomorphic(oracle::matrix(g), oracle::complement(oracle::matrix(g))),
                  "oracle disagrees on " + g6(g));
    }
  v.require(found == std::set<CanonicalForm>{canonical_form(bridge_graph(2, 2)), canonical_form(SimpleGraph::cycle(5))},
            std::to_string(found.size()) + " found");
  return v;
}

Verdict reseminant_agreement() {
  Verdict v;
  const SimpleGraph c5 = SimpleGraph::cycle(5);
  const auto d10 = oracle::dihedral(5);
  std::string first;
  for (int k = 0; k <= 12; ++k) {
    const Count brute = oracle::orbit_count(d10, 5, k);
    v.require(count_orbits(c5, k) == brute && closed_form_c5(k) == brute, "k = " + std::to_string(k));
    if (k < 3) first += (k ? "," : "") + brute.str();
    if (k + 5 > 10) continue;
    std::set<CanonicalForm> realized;
    for (auto t : oracle::tuples(5, k)) {
      for (int& x : t) ++x;
      realized.insert(canonical_form(realize({c5, t})));
    }
    v.require(Count(realized.size()) == brute, "realizations at k = " + std::to_string(k));
  }
  v.require(first == "1,1,3", "first values " + first);
  if (v.pass) v.detail = "first values " + first;
  return v;
}

Verdict bracelets() {
  Verdict v;
  for (int total = 5; total <= 35; ++total) {
    v.require(bracelet_form(total) == closed_form_c5(total - 5), "v = " + std::to_string(total));
    if (total <= 18) v.require(bracelet_form(total) == oracle::bracelets(total, 5), "bead count v = " + std::to_string(total));
  }
  if (v.pass) v.detail = "offset: formula argument = total vertices - 5";
  return v;
}

Verdict bijection() {
  Verdict v;
  const EnumerationReport r = build_enumeration_report(8);
  for (const LevelReport& l : r.levels) {
    v.require(l.bijection && l.pdmpg == l.max_tf3c && l.mpg == l.max_tf3c_chromatic3, "k = " + std::to_string(l.k));
    std::set<CanonicalForm> images;
    for (const CanonicalForm& f : enumerate_class(l.k, GraphClass::Pdmpg))
      images.insert(canonical_form(complement(f.to_graph())));
    const auto tf = enumerate_class(l.k, GraphClass::MaxTf3c);
    v.require(images == std::set<CanonicalForm>(tf.begin(), tf.end()), "image mismatch at k = " + std::to_string(l.k));
  }
  return v;
}

Verdict counting() {
  Verdict v;
  std::string notes;
  for (int k = 1; k <= 8; ++k) {
    const CountingDeltas d = counting_deltas(k);
    if (k % 2 == 1) {
      v.require(d.pdmpg_min2_matches(), "PDMPG at k = " + std::to_string(k));
      v.require(d.mcpg_matches(), "MCPG at k = " + std::to_string(k));
    } else if (!d.pdmpg_matches() || !d.mcpg_matches()) {
      notes += " k=" + std::to_string(k);
    }
  }
  if (v.pass) v.detail = "odd k match (K1 not counted at k = 1); even-k off by one reported at" + notes;
  return v;
}

Verdict folklore() {
  Verdict v;
  for (int q = 1; q <= 2; ++q) {
    const std::uint64_t seeds = std::uint64_t{1} << (2 * q * q);
    std::set<CanonicalForm> labeled;
    for (std::uint64_t bits = 0; bits < seeds; ++bits) {
      const SimpleGraph g = folklore_embed(bipartite_seed(q, bits), q);
      labeled.insert(CanonicalForm::of_labeled(g));
      v.require(recover_seed(g, q) == bits, "seed not recoverable");
      const auto a = oracle::matrix(g);
      v.require(!oracle::has_triangle(a) && oracle::colorable(a, 3), "embedding not TF3C");
      const SimpleGraph s = saturate_tf3c(g);
      v.require(is_max_tf3c(s), "saturation not maximal");
    }
    v.require(labeled.size() == seeds && lower_bound_census(q) == seeds, "q = " + std::to_string(q));
  }
  return v;
}

Verdict generation() {
  Verdict v;
  const GenerationReport r = verify_generation_relations(6);
  v.require(r.all_confirmed(), r.failures.empty() ? "relation failed" : r.failures.front());
  for (int k = 5; k <= 6; ++k)
    for (const CanonicalForm& f : enumerate_class(k, GraphClass::Mpg))
      for (Bits nb = 0; nb < (Bits{1} << k); ++nb)
        v.require(!recognize_bridge(add_vertex(f.to_graph(), nb)).has_value(), "MPG extension is a bridge graph");
  return v;
}

Verdict graph6_round_trip() {
  Verdict v;
  for (int k = 1; k <= 7; ++k)
    for (const CanonicalForm& f : all_graphs(k)) {
      const std::string s = serialize_graph6(f.to_graph());
      v.require(serialize_graph6(parse_graph6(s)) == s && parse_graph6(s) == f.to_graph(), s);
    }
  // Written by networkx.
  v.require(serialize_graph6(SimpleGraph::cycle(5)) == "Dhc", "C5");
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"bridge-graph MCPG law", bridge_law},
      {"MCPG minus MPG are admissible bridges", mcpg_minus_mpg},
      {"diameter theorem", diameter_theorem},
      {"diameter 3 gives bipartite complement", diameter3_coloring},
      {"MPG diameter is 2", mpg_diameter},
      {"Hamiltonicity", hamiltonicity},
      {"bridge Hamiltonian path counts", path_counts},
      {"self-complementary MCPGs", self_complementary},
      {"reseminant triple agreement", reseminant_agreement},
      {"bracelet alignment", bracelets},
      {"PDMPG / maximal TF3C bijection", bijection},
      {"counting corollaries", counting},
      {"folklore construction", folklore},
      {"generation relations", generation},
      {"graph6 round trip", graph6_round_trip},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::printf("%s %2zu %s%s%s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, v.detail.empty() ? "" : ": ",
                v.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
