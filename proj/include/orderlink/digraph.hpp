#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "orderlink/vertex_set.hpp"

namespace orderlink {

/// Raised when a digraph, sequence or request is built from invalid input.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a caller breaks a documented precondition of an operation.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Arc {
  VertexId tail = 0;
  VertexId head = 0;
  auto operator<=>(const Arc&) const = default;
};

/// Simple digraph on vertices 0..n-1: no loops, no parallel arcs, antiparallel
/// pairs allowed. Immutable once built; out- and in-adjacency are mirrored
/// bitsets so neighbourhood intersections cost O(n / 64).
class Digraph {
 public:
  Digraph() = default;

  std::size_t order() const noexcept { return out_.size(); }
  std::size_t arc_count() const noexcept { return arc_count_; }

  const VertexSet& out(VertexId v) const { return out_.at(v); }
  const VertexSet& in(VertexId v) const { return in_.at(v); }
  std::size_t out_degree(VertexId v) const { return out_degree_.at(v); }
  std::size_t in_degree(VertexId v) const { return in_degree_.at(v); }
  bool has_arc(VertexId u, VertexId v) const { return out_.at(u).test(v); }

  /// All arcs in (tail, head) lexicographic order.
  std::vector<Arc> arcs() const;

  VertexSet empty_set() const { return VertexSet(order()); }
  VertexSet all_vertices() const { return VertexSet::full(order()); }

 private:
  friend class DigraphBuilder;

  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
  std::vector<std::size_t> out_degree_;
  std::vector<std::size_t> in_degree_;
  std::size_t arc_count_ = 0;
};

/// Accumulates arcs and freezes them into a Digraph. Duplicate arcs are
/// absorbed; loops and out-of-range endpoints raise GraphError.
class DigraphBuilder {
 public:
  explicit DigraphBuilder(std::size_t n);

  DigraphBuilder& add_arc(VertexId u, VertexId v);
  /// Adds u->v and v->u.
  DigraphBuilder& add_edge(VertexId u, VertexId v);
  /// Adds every arc between distinct members of `members` (a complete digraph).
  DigraphBuilder& add_clique(std::span<const VertexId> members);
  /// Adds every arc from `from` to `to` (skipping would-be loops).
  DigraphBuilder& add_all_arcs(std::span<const VertexId> from, std::span<const VertexId> to);

  std::size_t order() const noexcept { return out_.size(); }
  bool has_arc(VertexId u, VertexId v) const { return out_.at(u).test(v); }
  const VertexSet& out(VertexId v) const { return out_.at(v); }
  const VertexSet& in(VertexId v) const { return in_.at(v); }
  std::size_t out_degree(VertexId v) const { return out_degree_.at(v); }
  std::size_t in_degree(VertexId v) const { return in_degree_.at(v); }

  Digraph build() &&;

 private:
  void check(VertexId u, VertexId v) const;

  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
  std::vector<std::size_t> out_degree_;
  std::vector<std::size_t> in_degree_;
  std::size_t arc_count_ = 0;
};

Digraph build_digraph(std::size_t n, std::span<const Arc> arcs);

/// δ(D) = min over v of min(d⁺(v), d⁻(v)). Requires n >= 1.
std::size_t min_semi_degree(const Digraph& d);

/// N⁺_A(x): out-neighbours of x inside `within`.
VertexSet restricted_out_neighbors(const Digraph& d, VertexId x, const VertexSet& within);
/// N⁻_A(x): in-neighbours of x inside `within`.
VertexSet restricted_in_neighbors(const Digraph& d, VertexId x, const VertexSet& within);

/// Some arc a->b with a in `from`, b in `to` (smallest tail, then head), if any.
/// The two sets must be disjoint.
std::optional<Arc> find_arc_between(const Digraph& d, const VertexSet& from, const VertexSet& to);

/// A directed path given by its vertex sequence. Validity is relative to a
/// digraph; see path_defect().
struct Path {
  std::vector<VertexId> vertices;

  Path() = default;
  Path(std::initializer_list<VertexId> vs) : vertices(vs) {}
  explicit Path(std::vector<VertexId> vs) : vertices(std::move(vs)) {}

  std::size_t length() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
  VertexId source() const { return vertices.front(); }
  VertexId target() const { return vertices.back(); }
  std::span<const VertexId> interior() const {
    if (vertices.size() < 2) return {};
    return std::span<const VertexId>(vertices).subspan(1, vertices.size() - 2);
  }
  bool operator==(const Path&) const = default;
};

/// Why `p` is not a directed path of `d`, or nullopt if it is one. With
/// `closed`, `p` must instead be a cycle written with its first vertex
/// repeated at the end.
std::optional<std::string> path_defect(const Digraph& d, const Path& p, bool closed = false);

}  // namespace orderlink
