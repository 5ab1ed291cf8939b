#include <doctest.h>

#include "error_code.hpp"
#include "named_graphs.hpp"
#include "oracles.hpp"
#include "primegraph/canonical.hpp"
#include "primegraph/classify.hpp"
#include "primegraph/coloring.hpp"
#include "primegraph/enumerate.hpp"
#include "primegraph/generate.hpp"
#include "primegraph/hamiltonian.hpp"
#include "primegraph/structure.hpp"

using namespace primegraph;

namespace {
SimpleGraph two_cliques(int a, int b) { return disjoint_union(SimpleGraph::complete(a), SimpleGraph::complete(b)); }
}  // namespace

TEST_CASE("classify_diameter examples") {
  CHECK(classify_diameter(SimpleGraph::complete(4)) == DiameterClass::Complete);
  CHECK(classify_diameter(SimpleGraph(1)) == DiameterClass::Complete);
  CHECK(classify_diameter(SimpleGraph::cycle(5)) == DiameterClass::Generic);
  CHECK(classify_diameter(bridge_graph(3, 2)) == DiameterClass::BridgeBound);
  CHECK(classify_diameter(two_cliques(3, 2)) == DiameterClass::DisconnectedCompleteComponents);
  CHECK(classify_diameter(named::non_hamiltonian7()) == DiameterClass::BridgeBound);
  CHECK(error_code_of([] { classify_diameter(SimpleGraph::cycle(7)); }) == ErrorCode::NotPrime);
}

TEST_CASE("prime graphs have diameter at most 3 and disconnected ones are two cliques") {
  for (int k = 1; k <= 8; ++k)
    for (const CanonicalForm& f : enumerate_class(k, GraphClass::Prime)) {
      const SimpleGraph g = f.to_graph();
      const int d = oracle::diameter(oracle::matrix(g));
      REQUIRE(d <= 3);
      if (d < 0) {
        const auto parts = components(g);
        REQUIRE(parts.size() == 2);
        for (const VertexSet& p : parts) REQUIRE(is_clique(g, p.bits()));
      }
      const DiameterClass c = classify_diameter(g);
      REQUIRE((c == DiameterClass::DisconnectedCompleteComponents) == (d < 0));
      REQUIRE((c == DiameterClass::Complete) == (d == 0 || d == 1));
      REQUIRE((c == DiameterClass::BridgeBound) == (d == 3));
    }
}

TEST_CASE("diameter-3 complement coloring") {
  for (const SimpleGraph& g : {bridge_graph(2, 2), bridge_graph(4, 3), named::non_hamiltonian7()}) {
    const auto colors = diameter3_complement_coloring(g);
    CHECK(is_proper_coloring(complement(g), colors));
    for (int c : colors) CHECK((c == 0 || c == 1));
  }
  for (int k = 4; k <= 8; ++k)
    for (const CanonicalForm& f : enumerate_class(k, GraphClass::Prime)) {
      const SimpleGraph g = f.to_graph();
      if (diameter(g) != 3) continue;
      REQUIRE(is_proper_coloring(complement(g), diameter3_complement_coloring(g)));
    }
  CHECK(error_code_of([] { diameter3_complement_coloring(SimpleGraph::cycle(5)); }) ==
        ErrorCode::PreconditionFailed);
}

TEST_CASE("diameter cross-check: forward direction holds, converse does not") {
  const DiameterCrossCheck b = cross_check_diameter(bridge_graph(3, 2));
  CHECK(b.tag == DiameterClass::BridgeBound);
  CHECK(b.forward_holds);
  CHECK(b.reductions_all_bridges);
  const DiameterCrossCheck c4 = cross_check_diameter(SimpleGraph::cycle(4));
  CHECK(c4.reductions_all_bridges);
  CHECK(c4.tag == DiameterClass::Generic);
  CHECK_FALSE(c4.converse_holds);
  CHECK_FALSE(cross_check_diameter(SimpleGraph::complete(4)).converse_holds);
  CHECK(cross_check_diameter(SimpleGraph::cycle(5)).consistent());
  for (int k = 2; k <= 7; ++k)
    for (const CanonicalForm& f : enumerate_class(k, GraphClass::Prime)) {
      const SimpleGraph g = f.to_graph();
      if (!is_connected(g)) continue;
      REQUIRE(cross_check_diameter(g).forward_holds);
    }
}

TEST_CASE("removing edges never shrinks the diameter") {
  for (int k = 2; k <= 7; ++k)
    for (const CanonicalForm& f : enumerate_class(k, GraphClass::Prime)) {
      const SimpleGraph g = f.to_graph();
      const auto d = diameter(g);
      if (!d) continue;
      for (const Edge& e : g.edges()) {
        const auto d2 = diameter(without_edge(g, e));
        if (d2) REQUIRE(*d2 >= *d);
      }
    }
}

TEST_CASE("Hamiltonicity of prime graphs") {
  const HamiltonianVerdict nh7 = is_hamiltonian_prime(named::non_hamiltonian7());
  CHECK_FALSE(nh7.hamiltonian);
  CHECK(nh7.reason == NonHamiltonianReason::BridgeWithSharedExtraEdges);
  CHECK(match_bridge_with_shared_extra_edges(named::non_hamiltonian7()).has_value());

  const HamiltonianVerdict kk = is_hamiltonian_prime(two_cliques(3, 3));
  CHECK(kk.reason == NonHamiltonianReason::DisconnectedTwoComplete);
  CHECK(is_hamiltonian_prime(SimpleGraph(1)).reason == NonHamiltonianReason::TooFewVertices);
  CHECK(is_hamiltonian_prime(bridge_graph(3, 3)).reason == NonHamiltonianReason::BridgeWithSharedExtraEdges);

  const HamiltonianVerdict c5 = is_hamiltonian_prime(SimpleGraph::cycle(5));
  CHECK(c5.hamiltonian);
  REQUIRE(c5.cycle.has_value());
  CHECK(is_hamiltonian_cycle(SimpleGraph::cycle(5), *c5.cycle));
  CHECK(error_code_of([] { is_hamiltonian_prime(SimpleGraph::cycle(7)); }) == ErrorCode::NotPrime);

  for (int k = 1; k <= 7; ++k)
    for (const CanonicalForm& f : enumerate_class(k, GraphClass::Prime)) {
      const SimpleGraph g = f.to_graph();
      const HamiltonianVerdict v = is_hamiltonian_prime(g);
      REQUIRE(v.hamiltonian == oracle::hamiltonian(oracle::matrix(g)));
      if (v.hamiltonian) {
        REQUIRE(v.cycle.has_value());
        REQUIRE(is_hamiltonian_cycle(g, *v.cycle));
      } else {
        REQUIRE(v.reason != NonHamiltonianReason::Unexplained);
        REQUIRE(v.reason != NonHamiltonianReason::None);
      }
    }
  for (int k = 5; k <= 9; ++k)
    for (const CanonicalForm& f : enumerate_class(k, GraphClass::Mpg)) {
      REQUIRE(is_hamiltonian_prime(f.to_graph()).hamiltonian);
      REQUIRE(diameter(f.to_graph()) == 2);
    }
}

TEST_CASE("Hamiltonian paths of bridge graphs") {
  CHECK(hamiltonian_path_count_bridge(2, 2) == 1);
  CHECK(hamiltonian_path_count_bridge(4, 4) == 36);
  CHECK(hamiltonian_path_count_bridge(5, 3) == 48);
  CHECK(error_code_of([] { hamiltonian_path_count_bridge(2, 3); }) == ErrorCode::BadParams);
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= m; ++n)
      CHECK(hamiltonian_path_count_bridge(m, n) ==
            oracle::hamiltonian_paths(oracle::matrix(bridge_graph(m, n))));
}

TEST_CASE("self-complementary graphs") {
  CHECK(is_self_complementary(SimpleGraph::cycle(5)));
  CHECK(is_self_complementary(bridge_graph(2, 2)));
  CHECK(is_self_complementary(SimpleGraph::path(4)));
  CHECK(is_self_complementary(SimpleGraph(1)));
  CHECK_FALSE(is_self_complementary(SimpleGraph::complete(2)));
  CHECK_FALSE(is_self_complementary(SimpleGraph::cycle(6)));
  CHECK_FALSE(is_self_complementary(SimpleGraph::complete(7)));
  for (int k = 1; k <= 7; ++k)
    for (const CanonicalForm& f : all_graphs(k)) {
      const SimpleGraph g = f.to_graph();
      const bool sc = is_self_complementary(g);
      REQUIRE(sc == oracle::isomorphic(oracle::matrix(g), oracle::complement(oracle::matrix(g))));
      if (k % 4 == 2 || k % 4 == 3) REQUIRE_FALSE(sc);
    }
  std::set<CanonicalForm> found;
  for (int k = 1; k <= 9; ++k)
    for (const CanonicalForm& f : enumerate_class(k, GraphClass::Mcpg))
      if (is_self_complementary(f.to_graph())) found.insert(f);
  CHECK(found == std::set<CanonicalForm>{canonical_form(bridge_graph(2, 2)), canonical_form(SimpleGraph::cycle(5))});
}
