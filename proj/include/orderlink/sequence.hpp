#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "orderlink/digraph.hpp"

namespace orderlink {

/// Ordered distinct vertices s_1..s_k that a cycle must meet in order.
/// Indices are 0-based here; segment i runs from at(i) to next(i), and the
/// last segment wraps back to at(0).
class SpecialSequence {
 public:
  SpecialSequence() = default;
  /// Throws GraphError on an empty or repeating sequence.
  explicit SpecialSequence(std::vector<VertexId> vertices);

  std::size_t size() const noexcept { return vertices_.size(); }
  VertexId at(std::size_t i) const { return vertices_.at(i % vertices_.size()); }
  VertexId next(std::size_t i) const { return at(i + 1); }
  std::size_t succ(std::size_t i) const { return (i + 1) % size(); }
  std::size_t pred(std::size_t i) const { return (i + size() - 1) % size(); }
  std::span<const VertexId> vertices() const noexcept { return vertices_; }

  /// Throws GraphError if some special is not a vertex of `d`.
  void validate_against(const Digraph& d) const;
  VertexSet as_set(std::size_t universe) const;

 private:
  std::vector<VertexId> vertices_;
};

struct TerminalPair {
  VertexId source = 0;
  VertexId target = 0;
  bool operator==(const TerminalPair&) const = default;
};

/// ℓ source/target pairs with all 2ℓ endpoints distinct.
class LinkRequest {
 public:
  LinkRequest() = default;
  explicit LinkRequest(std::vector<TerminalPair> pairs);

  std::size_t size() const noexcept { return pairs_.size(); }
  std::span<const TerminalPair> pairs() const noexcept { return pairs_; }
  /// x_1, y_1, x_2, y_2, ..., the order a cycle must meet to yield the linkage.
  SpecialSequence interleaved() const;
  void validate_against(const Digraph& d) const;

 private:
  std::vector<TerminalPair> pairs_;
};

}  // namespace orderlink
