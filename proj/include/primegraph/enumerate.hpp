#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "primegraph/canonical.hpp"
#include "primegraph/graph.hpp"

namespace primegraph {

inline constexpr int kMaxEnumerationOrder = 9;

enum class GraphClass { All, Prime, Mpg, Mcpg, Pdmpg, MaxTf3c };

std::string_view to_string(GraphClass cls);
std::optional<GraphClass> parse_graph_class(std::string_view name);

/// Triangle-free, 3-colorable, and no non-edge can be added keeping both.
bool is_max_tf3c(const SimpleGraph& g);

/// Triangle-free and every non-edge closes a triangle.
bool is_max_triangle_free(const SimpleGraph& g);

bool in_class(const SimpleGraph& g, GraphClass cls);

/// Every graph on k vertices up to isomorphism, as sorted canonical forms.
///
/// Orderly generation: a canonical graph minus its last vertex is canonical,
/// so level k is every one-vertex extension of level k-1 that passes
/// is_canonical. Levels are computed once per process and cached. `jobs`
/// splits the parents of each level across threads; the output does not
/// depend on it. Throws SIZE_EXCEEDED above 9.
const std::vector<CanonicalForm>& all_graphs(int k, int jobs = 1);

/// Sorted canonical forms of the members of `cls` on k vertices.
std::vector<CanonicalForm> enumerate_class(int k, GraphClass cls, int jobs = 1);

/// Measured set differences against the closed-form predictions
/// floor((k-1)/2) and floor((k-1)/2) - 1. The second applies only for k > 3.
struct CountingDeltas {
  int k = 0;
  std::int64_t pdmpg_minus_mpg = 0;
  /// Same, counting PDMPGs only when they have at least two vertices.
  std::int64_t pdmpg_minus_mpg_min2 = 0;
  std::int64_t mcpg_minus_mpg = 0;
  std::int64_t predicted_pdmpg_minus_mpg = 0;
  std::optional<std::int64_t> predicted_mcpg_minus_mpg;

  bool pdmpg_matches() const { return pdmpg_minus_mpg == predicted_pdmpg_minus_mpg; }
  bool pdmpg_min2_matches() const { return pdmpg_minus_mpg_min2 == predicted_pdmpg_minus_mpg; }
  bool mcpg_matches() const { return !predicted_mcpg_minus_mpg || mcpg_minus_mpg == *predicted_mcpg_minus_mpg; }
};

CountingDeltas counting_deltas(int k, int jobs = 1);

/// Complementation maps PDMPG_k onto MAX_TF3C_k, and MPG_k onto the members of
/// MAX_TF3C_k with chromatic number 3.
bool verify_bijection(int k, int jobs = 1);

struct LevelReport {
  int k = 0;
  std::int64_t graphs = 0;
  std::int64_t prime = 0;
  std::int64_t mpg = 0;
  std::int64_t mcpg = 0;
  std::int64_t pdmpg = 0;
  std::int64_t max_tf3c = 0;
  std::int64_t max_tf3c_chromatic3 = 0;
  std::int64_t max_triangle_free = 0;
  CountingDeltas deltas;
  bool bijection = false;
  std::vector<std::string> discrepancies;
  /// Hard invariants: count ordering and the two bijection equalities.
  std::vector<std::string> violations;
};

struct EnumerationReport {
  std::vector<LevelReport> levels;

  bool invariants_hold() const;
};

EnumerationReport build_enumeration_report(int max_k, int jobs = 1);

/// Eleven-vertex Groetzsch graph: maximal triangle-free with chromatic number 4.
SimpleGraph grotzsch_graph();

// Lower-bound construction for labeled maximal triangle-free 3-colorable graphs.

/// Bipartite seed on 3q vertices, parts A = 0..q-1 and B = q..3q-1. Bit
/// (a * 2q + (b - q)) of `bits` selects edge a-b.
SimpleGraph bipartite_seed(int q, std::uint64_t bits);

/// Embeds a bipartite seed (parts A = 0..q-1, B = q..3q-1) into a graph on 4q
/// vertices: seed edges are kept and A' = 3q..4q-1 is added, where a'_i is
/// adjacent to a_i and to every b in B not adjacent to a_i.
/// Throws BAD_PARTS if the seed is not bipartite with those parts.
SimpleGraph folklore_embed(const SimpleGraph& bipartite, int q);

/// Seed bits read back from the A'-B adjacency of an embedding.
std::uint64_t recover_seed(const SimpleGraph& embedding, int q);

/// Adds non-edges in lexicographic order whenever the graph stays
/// triangle-free and 3-colorable. One pass is maximal: both properties only
/// get harder to keep as edges are added.
/// Throws PRECONDITION_FAILED unless g is triangle-free and 3-colorable.
SimpleGraph saturate_tf3c(const SimpleGraph& g);

/// Number of distinct labeled embeddings over all 2^(2q^2) seeds.
/// Throws SIZE_EXCEEDED above q = 3, BAD_PARAMS below 1.
std::uint64_t lower_bound_census(int q);

}  // namespace primegraph
