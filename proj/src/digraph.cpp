#include "orderlink/digraph.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace orderlink {

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count_);
  for (VertexId u = 0; u < order(); ++u)
    for (VertexId v : out_[u]) result.push_back({u, v});
  return result;
}

DigraphBuilder::DigraphBuilder(std::size_t n)
    : out_(n, VertexSet(n)), in_(n, VertexSet(n)), out_degree_(n, 0), in_degree_(n, 0) {
  if (n >= static_cast<std::size_t>(kNoVertex))
    throw GraphError("digraph order " + std::to_string(n) + " exceeds the vertex id range");
}

void DigraphBuilder::check(VertexId u, VertexId v) const {
  const auto arc = "arc (" + std::to_string(u) + "," + std::to_string(v) + ")";
  if (u >= order() || v >= order())
    throw GraphError(arc + ": endpoint out of range for n=" + std::to_string(order()));
  if (u == v) throw GraphError(arc + ": self-loop");
}

DigraphBuilder& DigraphBuilder::add_arc(VertexId u, VertexId v) {
  check(u, v);
  if (!out_[u].test(v)) {
    out_[u].set(v);
    in_[v].set(u);
    ++out_degree_[u];
    ++in_degree_[v];
    ++arc_count_;
  }
  return *this;
}

DigraphBuilder& DigraphBuilder::add_edge(VertexId u, VertexId v) {
  add_arc(u, v);
  return add_arc(v, u);
}

DigraphBuilder& DigraphBuilder::add_clique(std::span<const VertexId> members) {
  return add_all_arcs(members, members);
}

DigraphBuilder& DigraphBuilder::add_all_arcs(std::span<const VertexId> from,
                                             std::span<const VertexId> to) {
  for (VertexId u : from)
    for (VertexId v : to)
      if (u != v) add_arc(u, v);
  return *this;
}

Digraph DigraphBuilder::build() && {
  Digraph d;
  d.out_ = std::move(out_);
  d.in_ = std::move(in_);
  d.out_degree_ = std::move(out_degree_);
  d.in_degree_ = std::move(in_degree_);
  d.arc_count_ = arc_count_;
  return d;
}

Digraph build_digraph(std::size_t n, std::span<const Arc> arcs) {
  DigraphBuilder b(n);
  for (const Arc& a : arcs) b.add_arc(a.tail, a.head);
  return std::move(b).build();
}

std::size_t min_semi_degree(const Digraph& d) {
  if (d.order() == 0) throw ContractViolation("min_semi_degree: digraph has no vertices");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (VertexId v = 0; v < d.order(); ++v)
    best = std::min({best, d.out_degree(v), d.in_degree(v)});
  return best;
}

VertexSet restricted_out_neighbors(const Digraph& d, VertexId x, const VertexSet& within) {
  return d.out(x) & within;
}

VertexSet restricted_in_neighbors(const Digraph& d, VertexId x, const VertexSet& within) {
  return d.in(x) & within;
}

std::optional<Arc> find_arc_between(const Digraph& d, const VertexSet& from, const VertexSet& to) {
  if (from.intersects(to)) throw ContractViolation("find_arc_between: vertex sets overlap");
  for (VertexId a : from)
    if (VertexId b = d.out(a).first_common(to); b != kNoVertex) return Arc{a, b};
  return std::nullopt;
}

std::optional<std::string> path_defect(const Digraph& d, const Path& p, bool closed) {
  if (p.vertices.size() < (closed ? 3U : 2U)) return "path has too few vertices";
  if (closed && p.source() != p.target()) return "cycle does not return to its start";
  VertexSet seen(d.order());
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    VertexId v = p.vertices[i];
    if (v >= d.order()) return "vertex " + std::to_string(v) + " out of range";
    const bool closing = closed && i + 1 == p.vertices.size();
    if (seen.test(v) && !closing) return "vertex " + std::to_string(v) + " repeated";
    seen.set(v);
    if (i > 0 && !d.has_arc(p.vertices[i - 1], v))
      return "arc absent: " + std::to_string(p.vertices[i - 1]) + "->" + std::to_string(v);
  }
  return std::nullopt;
}

}  // namespace orderlink
