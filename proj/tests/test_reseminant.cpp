#include <doctest.h>

#include <algorithm>
#include <limits>
#include <set>

#include "error_code.hpp"
#include "named_graphs.hpp"
#include "oracles.hpp"
#include "primegraph/canonical.hpp"
#include "primegraph/classify.hpp"
#include "primegraph/enumerate.hpp"
#include "primegraph/generate.hpp"
#include "primegraph/reseminant.hpp"

using namespace primegraph;

namespace {

const SimpleGraph kC5 = SimpleGraph::cycle(5);

// Multiplicity tuples of the pentagon's dihedral orbit.
std::set<std::vector<int>> d10_orbit(const std::vector<int>& t) {
  std::set<std::vector<int>> out;
  for (const auto& p : oracle::dihedral(5)) {
    std::vector<int> img(5);
    for (int i = 0; i < 5; ++i) img[p[i]] = t[i];
    out.insert(img);
  }
  return out;
}

std::uint64_t to_u64(const Count& c) { return c.convert_to<std::uint64_t>(); }

// All distinct canonical realizations over C5 with k extra vertices.
std::size_t distinct_realizations(int k) {
  std::set<CanonicalForm> seen;
  for (auto t : oracle::tuples(5, k)) {
    for (int& x : t) ++x;
    seen.insert(canonical_form(realize({kC5, t})));
  }
  return seen.size();
}

}  // namespace

TEST_CASE("clusters") {
  CHECK(clusters(SimpleGraph::complete(4)).sizes() == std::vector<int>{4});
  CHECK(clusters(kC5).sizes() == std::vector<int>{1, 1, 1, 1, 1});
  CHECK(is_base_graph(kC5));
  CHECK_FALSE(is_base_graph(SimpleGraph::complete(3)));
  CHECK(clusters(bridge_graph(3, 2)).sizes() == std::vector<int>{2, 1, 1, 1});
  CHECK(is_base_graph(named::base_mpg8()));
  CHECK(clusters(named::base_mpg8()).sizes() == std::vector<int>(8, 1));
  // Vertices are identical iff closed neighborhoods agree: brute force on C5 duplicates.
  const SimpleGraph g = realize({kC5, {3, 1, 2, 1, 1}});
  const auto a = oracle::matrix(g);
  for (const VertexSet& b : clusters(g).blocks)
    for (int u : b.members())
      for (int v = 0; v < g.order(); ++v) {
        bool same = u == v || a[u][v];
        for (int w = 0; w < g.order() && same; ++w)
          if (w != u && w != v) same = a[u][w] == a[v][w];
        CHECK(same == b.contains(v));
      }
}

TEST_CASE("base_of and realize") {
  CHECK(base_of(SimpleGraph::complete(5)) == SimpleGraph(1));
  CHECK(are_isomorphic(base_of(realize({kC5, {3, 2, 1, 4, 1}})), kC5));
  CHECK(realize({kC5, {1, 1, 1, 1, 1}}) == kC5);
  CHECK(are_isomorphic(realize({kC5, {2, 1, 1, 1, 1}}), vertex_duplication(kC5, 0)));
  const SimpleGraph g = realize({kC5, {3, 2, 1, 1, 1}});
  CHECK(g.order() == 8);
  CHECK(induced_subgraph(g, VertexSet::range(0, 5)) == kC5);
  // Duplication order does not matter.
  CHECK(are_isomorphic(g, vertex_duplication(vertex_duplication(vertex_duplication(kC5, 1), 0), 0)));
  CHECK(are_isomorphic(g, vertex_duplication(vertex_duplication(vertex_duplication(kC5, 0), 1), 0)));

  CHECK(error_code_of([] { realize({kC5, {1, 1, 1, 1}}); }) == ErrorCode::BadSpec);
  CHECK(error_code_of([] { realize({kC5, {1, 0, 1, 1, 1}}); }) == ErrorCode::BadSpec);
  CHECK(error_code_of([] { realize({SimpleGraph::complete(2), {1, 1}}); }) == ErrorCode::BadSpec);
  CHECK(error_code_of([] { realize({kC5, {61, 1, 1, 1, 1}}); }) == ErrorCode::BadSpec);
  CHECK(realize({kC5, {60, 1, 1, 1, 1}}).order() == 64);
}

TEST_CASE("is_reseminant") {
  const auto self = is_reseminant(kC5, kC5);
  REQUIRE(self.has_value());
  CHECK(self->multiplicities == std::vector<int>{1, 1, 1, 1, 1});
  CHECK_FALSE(is_reseminant(named::base_mpg8(), kC5).has_value());
  CHECK_FALSE(is_reseminant(SimpleGraph::complete(4), kC5).has_value());
  CHECK(error_code_of([] { is_reseminant(kC5, SimpleGraph::complete(2)); }) == ErrorCode::NotBaseGraph);

  for (int k = 0; k <= 4; ++k)
    for (auto t : oracle::tuples(5, k)) {
      for (int& x : t) ++x;
      const SimpleGraph g = realize({kC5, t});
      const auto spec = is_reseminant(g, kC5);
      REQUIRE(spec.has_value());
      REQUIRE(d10_orbit(t).count(spec->multiplicities) == 1);
      REQUIRE(are_isomorphic(realize(*spec), g));
    }
  const auto back = is_reseminant(realize({kC5, {3, 2, 1, 1, 1}}), kC5);
  REQUIRE(back.has_value());
  CHECK(d10_orbit({3, 2, 1, 1, 1}).count(back->multiplicities) == 1);
}

TEST_CASE("every 8-vertex MPG except one is reseminant") {
  int reseminant = 0;
  for (const CanonicalForm& f : enumerate_class(8, GraphClass::Mpg)) {
    const SimpleGraph g = f.to_graph();
    if (is_reseminant(g, kC5)) {
      ++reseminant;
    } else {
      CHECK(is_base_graph(g));
      CHECK(are_isomorphic(g, named::base_mpg8()));
    }
  }
  CHECK(reseminant == 5);
}

TEST_CASE("orbit counts") {
  const std::vector<std::uint64_t> first{1, 1, 3, 5, 10, 16, 26};
  for (int k = 0; k < static_cast<int>(first.size()); ++k) CHECK(to_u64(count_orbits(kC5, k)) == first[k]);
  for (int k = 0; k <= 9; ++k) {
    const std::uint64_t brute = oracle::orbit_count(oracle::dihedral(5), 5, k);
    CHECK(to_u64(count_orbits(kC5, k)) == brute);
    CHECK(to_u64(closed_form_c5(k)) == brute);
  }
  // Other bases: orbit count against the brute-force group action.
  for (const SimpleGraph& base : {SimpleGraph::path(4), SimpleGraph(1), named::base_mpg8()}) {
    std::vector<std::vector<int>> group;
    for (const auto& p : automorphisms(base)) group.push_back(p);
    for (int k = 0; k <= 4; ++k) CHECK(to_u64(count_orbits(base, k)) == oracle::orbit_count(group, base.order(), k));
  }
  CHECK(error_code_of([] { count_orbits(SimpleGraph::complete(2), 1); }) == ErrorCode::NotBaseGraph);
  CHECK(error_code_of([] { count_orbits(SimpleGraph::path(11), 1); }) == ErrorCode::SizeExceeded);
}

TEST_CASE("orbits count non-isomorphic realizations") {
  for (int k = 0; k <= 5; ++k) CHECK(distinct_realizations(k) == to_u64(count_orbits(kC5, k)));
}

TEST_CASE("realizations are MPGs with the expected clusters") {
  for (int k = 0; k <= 3; ++k)
    for (auto t : oracle::tuples(5, k)) {
      for (int& x : t) ++x;
      const SimpleGraph g = realize({kC5, t});
      REQUIRE(is_mpg(g));
      auto sizes = clusters(g).sizes();
      auto want = t;
      std::sort(sizes.begin(), sizes.end());
      std::sort(want.begin(), want.end());
      REQUIRE(sizes == want);
    }
}

TEST_CASE("closed forms") {
  CHECK(to_u64(reflection_fixed_tuples(0)) == 1);
  CHECK(to_u64(reflection_fixed_tuples(2)) == 3);
  CHECK(to_u64(reflection_fixed_tuples(3)) == 3);
  const std::vector<int> reflection{0, 4, 3, 2, 1};
  for (int k = 0; k <= 10; ++k) {
    std::uint64_t fixed = 0;
    for (const auto& t : oracle::tuples(5, k)) {
      std::vector<int> img(5);
      for (int i = 0; i < 5; ++i) img[reflection[i]] = t[i];
      fixed += img == t;
    }
    CHECK(to_u64(reflection_fixed_tuples(k)) == fixed);
  }
  for (int v = 5; v <= 20; ++v) {
    const std::uint64_t brute = oracle::bracelets(v, 5);
    CHECK(to_u64(bracelet_form(v)) == brute);
    CHECK(to_u64(closed_form_c5(v - 5)) == brute);
  }
  for (int k = 0; k <= 200; ++k) CHECK(closed_form_c5(k) == count_orbits(kC5, k));
  CHECK(bracelet_floor_formula(0) == 1);
  CHECK(error_code_of([] { bracelet_form(4); }) == ErrorCode::BadParams);
  CHECK(closed_form_c5(1000) > Count(std::numeric_limits<std::uint64_t>::max() >> 40));
}
