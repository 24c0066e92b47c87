#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "orderlink/digraph.hpp"
#include "orderlink/sequence.hpp"

namespace orderlink {

/// Which part of an extremal construction a vertex belongs to. Overlapping
/// cliques tag their shared vertices as X: every crossing has to use them.
enum class Part { A, B, X, S };

const char* part_name(Part p);

struct VertexRole {
  Part part = Part::A;
  /// Construction name ("x1", "y2", "s3", ...) or empty.
  std::string name;
};

/// A digraph that meets a degree bound minus one yet defeats the request
/// stored alongside it.
///
/// Layout is fixed: the A-only vertices come first, then the shared vertices
/// (if A and B overlap), then B-only, then X, then the new special vertices.
struct ExtremalWitness {
  Digraph digraph;
  std::string construction;  ///< "extremal-linked" or "extremal-ordered"
  std::string case_label;    ///< "Case 1", "Case 2", "Case 3"
  /// The sequence the construction defeats. For a linkage construction this
  /// is x_1..x_ℓ, y_1..y_ℓ.
  std::vector<VertexId> special_sequence;
  /// Source/target pairs (linkage constructions only).
  std::vector<TerminalPair> pairs;
  std::vector<VertexRole> roles;

  SpecialSequence sequence() const { return SpecialSequence(special_sequence); }
  LinkRequest link_request() const { return LinkRequest(pairs); }
};

/// Every ordered pair of distinct vertices joined. n >= 1.
Digraph complete_digraph(std::size_t n);

/// Digraph on n vertices with δ = ⌈n/2⌉+ℓ−2 that is not ℓ-linked.
/// Requires ℓ >= 2 and n >= 2ℓ; odd n additionally needs ⌈n/2⌉−ℓ−1 >= 1.
/// Throws GraphError naming the failed case precondition otherwise.
ExtremalWitness extremal_linked(std::size_t ell, std::size_t n);

/// Digraph on n vertices with δ = ⌈(n+k)/2⌉−2 that is not k-ordered.
/// Requires k >= 2 and n >= 2k. Even k uses overlapping cliques for both
/// parities of n; odd k uses the X-bridged construction (n even) or
/// overlapping cliques (n odd).
ExtremalWitness extremal_ordered(std::size_t k, std::size_t n);

/// Random digraph with δ >= d, reproducible from `seed`.
///
/// Every vertex first picks d distinct random out-neighbours; vertices whose
/// in-degree falls short then receive arcs from uniformly random
/// non-in-neighbours until it reaches d. Requires d <= n-1.
Digraph random_min_degree(std::size_t n, std::size_t d, std::uint64_t seed);

/// ⌈a / b⌉ for non-negative integers.
constexpr std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

}  // namespace orderlink
