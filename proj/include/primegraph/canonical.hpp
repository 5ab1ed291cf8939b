#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "primegraph/graph.hpp"

namespace primegraph {

/// Graphs up to this order are canonized by the exact minimum over every
/// relabeling; larger graphs use partition refinement with individualization.
inline constexpr int kExhaustiveCanonicalLimit = 12;
inline constexpr int kMaxAutomorphismOrder = 10;

/// Upper-triangle adjacency string of a canonically relabeled graph.
///
/// Bit order is column-major over the upper triangle, the order graph6 uses:
/// (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ... For n <= 12 the string is
/// the lexicographic minimum over all n! relabelings. Two graphs have equal
/// forms iff they are isomorphic.
class CanonicalForm {
 public:
  CanonicalForm() = default;

  /// Upper-triangle string of g exactly as labeled (no canonization).
  static CanonicalForm of_labeled(const SimpleGraph& g);

  int order() const noexcept { return n_; }
  std::size_t bit_count() const noexcept { return static_cast<std::size_t>(n_) * (n_ - 1) / 2; }
  bool bit(std::size_t pos) const noexcept { return (words_[pos / 64] >> (63 - pos % 64)) & 1U; }
  /// "0"/"1" rendering of the upper-triangle string.
  std::string bit_string() const;
  SimpleGraph to_graph() const;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;

  std::size_t hash() const noexcept;

 private:
  int n_ = 0;
  std::vector<Bits> words_;  // bit p stored MSB-first in words_[p / 64]
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept { return f.hash(); }
};

struct CanonicalLabeling {
  CanonicalForm form;
  /// labeling[v] is the canonical position of vertex v:
  /// relabel(g, labeling) == form.to_graph().
  std::vector<int> labeling;
};

CanonicalLabeling canonical_labeling(const SimpleGraph& g);

inline CanonicalForm canonical_form(const SimpleGraph& g) { return canonical_labeling(g).form; }

/// True iff g is already its own canonical relabeling. Requires n <= 12.
/// Exits early on the first relabeling that beats g's own string, which makes
/// it the workhorse of orderly generation.
bool is_canonical(const SimpleGraph& g);

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

using Permutation = std::vector<int>;

/// All adjacency-preserving permutations, in lexicographic order.
/// Throws SIZE_EXCEEDED above 10 vertices.
std::vector<Permutation> automorphisms(const SimpleGraph& g);

/// Bit mask of true or false twins of v with smaller index. Swapping twins is
/// an automorphism, so searches may fix the relative order of twins.
std::vector<Bits> smaller_twins(const SimpleGraph& g);

}  // namespace primegraph
