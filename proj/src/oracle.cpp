#include "orderlink/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_set>

namespace orderlink {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(VertexId v) { return Mask{1} << v; }

void check_cap(const Digraph& d, const OracleLimits& limits, const char* what) {
  const std::size_t cap = std::min<std::size_t>(limits.max_order, 64);
  if (d.order() > cap)
    throw OracleRefused(std::string(what) + ": n=" + std::to_string(d.order()) +
                        " exceeds the exhaustive-search cap of " + std::to_string(cap));
}

std::vector<Mask> out_masks(const Digraph& d) {
  std::vector<Mask> out(d.order(), 0);
  for (VertexId u = 0; u < d.order(); ++u)
    for (VertexId v : d.out(u)) out[u] |= bit(v);
  return out;
}

struct Leg {
  VertexId source;
  VertexId target;
};

/// Backtracking over internally disjoint leg paths, legs filled in order.
/// Failed states (leg, current vertex, used set) are memoised: whether the
/// remaining legs can be completed depends on nothing else.
class LegSearch {
 public:
  LegSearch(const Digraph& d, std::vector<Leg> legs) : out_(out_masks(d)), legs_(std::move(legs)) {
    for (const Leg& l : legs_) terminals_ |= bit(l.source) | bit(l.target);
  }

  std::optional<std::vector<Path>> run() {
    paths_.assign(legs_.size(), Path{});
    if (!remaining_legs_reachable(0, terminals_)) return std::nullopt;
    paths_[0].vertices.push_back(legs_[0].source);
    if (extend(0, legs_[0].source, terminals_)) return paths_;
    return std::nullopt;
  }

 private:
  struct Key {
    Mask used;
    VertexId at;
    std::uint32_t leg;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      std::uint64_t h = k.used * 0x9E3779B97F4A7C15ULL;
      h ^= (static_cast<std::uint64_t>(k.at) << 32 | k.leg) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
      return static_cast<std::size_t>(h);
    }
  };

  bool reachable(VertexId from, VertexId to, Mask used) const {
    Mask seen = bit(from);
    Mask frontier = bit(from);
    const Mask free = ~used;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= out_[std::countr_zero(f)];
      if (next & bit(to)) return true;
      next &= free & ~seen;
      seen |= next;
      frontier = next;
    }
    return false;
  }

  bool remaining_legs_reachable(std::size_t first_leg, Mask used) const {
    for (std::size_t i = first_leg; i < legs_.size(); ++i)
      if (!reachable(legs_[i].source, legs_[i].target, used)) return false;
    return true;
  }

  bool extend(std::size_t leg, VertexId at, Mask used) {
    const Key key{used, at, static_cast<std::uint32_t>(leg)};
    if (failed_.contains(key)) return false;
    const VertexId target = legs_[leg].target;
    Path& path = paths_[leg];

    if (out_[at] & bit(target)) {
      path.vertices.push_back(target);
      if (leg + 1 == legs_.size()) return true;
      if (remaining_legs_reachable(leg + 1, used)) {
        paths_[leg + 1].vertices.assign(1, legs_[leg + 1].source);
        if (extend(leg + 1, legs_[leg + 1].source, used)) return true;
      }
      path.vertices.pop_back();
    }

    for (Mask cand = out_[at] & ~used; cand; cand &= cand - 1) {
      const auto w = static_cast<VertexId>(std::countr_zero(cand));
      const Mask next_used = used | bit(w);
      if (!reachable(w, target, next_used)) continue;
      path.vertices.push_back(w);
      if (extend(leg, w, next_used)) return true;
      path.vertices.pop_back();
    }
    failed_.insert(key);
    return false;
  }

  std::vector<Mask> out_;
  std::vector<Leg> legs_;
  Mask terminals_ = 0;
  std::vector<Path> paths_;
  std::unordered_set<Key, KeyHash> failed_;
};

}  // namespace

std::optional<Certificate> find_ordered_cycle(const Digraph& d, const SpecialSequence& s,
                                              OracleLimits limits) {
  check_cap(d, limits, "exists_ordered_cycle");
  s.validate_against(d);
  std::vector<Leg> legs;
  for (std::size_t i = 0; i < s.size(); ++i) legs.push_back({s.at(i), s.next(i)});
  auto paths = LegSearch(d, std::move(legs)).run();
  if (!paths) return std::nullopt;
  return Certificate{Certificate::Kind::OrderedCycle, std::move(*paths)};
}

bool exists_ordered_cycle(const Digraph& d, const SpecialSequence& s, OracleLimits limits) {
  return find_ordered_cycle(d, s, limits).has_value();
}

std::optional<Certificate> find_linkage(const Digraph& d, const LinkRequest& request,
                                        OracleLimits limits) {
  check_cap(d, limits, "exists_linkage");
  request.validate_against(d);
  std::vector<Leg> legs;
  for (const auto& p : request.pairs()) legs.push_back({p.source, p.target});
  auto paths = LegSearch(d, std::move(legs)).run();
  if (!paths) return std::nullopt;
  return Certificate{Certificate::Kind::Linkage, std::move(*paths)};
}

bool exists_linkage(const Digraph& d, const LinkRequest& request, OracleLimits limits) {
  return find_linkage(d, request, limits).has_value();
}

std::size_t max_disjoint_short_paths(const Digraph& d, VertexId u, VertexId v,
                                     std::size_t max_length, OracleLimits limits) {
  check_cap(d, limits, "max_disjoint_short_paths");
  if (u >= d.order() || v >= d.order() || u == v)
    throw ContractViolation("max_disjoint_short_paths: endpoints must be distinct vertices");
  if (max_length == 0) return 0;

  // Interior vertices are renumbered densely, skipping u and v.
  std::vector<int> slot(d.order(), -1);
  std::size_t m = 0;
  for (VertexId w = 0; w < d.order(); ++w)
    if (w != u && w != v) slot[w] = static_cast<int>(m++);
  if (m > 26)
    throw OracleRefused("max_disjoint_short_paths: " + std::to_string(m) +
                        " candidate interior vertices exceeds the packing table limit of 26");

  const std::size_t direct = d.has_arc(u, v) ? 1 : 0;
  std::vector<Mask> interiors;
  std::vector<VertexId> stack{u};
  Mask inside = 0;
  // Depth-limited enumeration of simple u->v paths with at least one interior vertex.
  auto enumerate = [&](auto&& self, VertexId at) -> void {
    if (stack.size() >= 2 && d.has_arc(at, v)) interiors.push_back(inside);
    if (stack.size() >= max_length) return;  // one more interior vertex would exceed max_length
    for (VertexId w : d.out(at)) {
      if (w == u || w == v || (inside & bit(static_cast<VertexId>(slot[w])))) continue;
      stack.push_back(w);
      inside |= bit(static_cast<VertexId>(slot[w]));
      self(self, w);
      inside &= ~bit(static_cast<VertexId>(slot[w]));
      stack.pop_back();
    }
  };
  enumerate(enumerate, u);

  std::sort(interiors.begin(), interiors.end());
  interiors.erase(std::unique(interiors.begin(), interiors.end()), interiors.end());
  std::vector<std::vector<Mask>> by_lowest(m);
  for (Mask p : interiors) by_lowest[std::countr_zero(p)].push_back(p);

  // best(F): most disjoint interiors inside F. The lowest vertex of F is
  // either unused or the lowest vertex of the chosen interior covering it.
  std::vector<std::int8_t> memo(std::size_t{1} << m, -1);
  auto best = [&](auto&& self, Mask free) -> int {
    if (free == 0) return 0;
    auto& slot_value = memo[free];
    if (slot_value >= 0) return slot_value;
    const int w = std::countr_zero(free);
    int result = self(self, free & ~bit(static_cast<VertexId>(w)));
    for (Mask p : by_lowest[w])
      if ((p & free) == p) result = std::max(result, 1 + self(self, free & ~p));
    memo[free] = static_cast<std::int8_t>(result);
    return result;
  };
  const Mask all = m == 64 ? ~Mask{0} : (Mask{1} << m) - 1;
  return direct + static_cast<std::size_t>(best(best, all));
}

Verdict verify_ordered_cycle(const Digraph& d, const SpecialSequence& s, std::span<const Path> segments) {
  const std::size_t k = s.size();
  if (segments.size() != k)
    return Verdict::fail("segment count " + std::to_string(segments.size()) + " != k=" + std::to_string(k));
  for (VertexId v : s.vertices())
    if (v >= d.order()) return Verdict::fail("special vertex out of range");
  const VertexSet specials = s.as_set(d.order());
  VertexSet used(d.order());
  for (std::size_t i = 0; i < k; ++i) {
    const Path& p = segments[i];
    const auto tag = "segment " + std::to_string(i) + ": ";
    if (p.vertices.empty() || p.source() != s.at(i) || p.target() != s.next(i))
      return Verdict::fail(tag + "wrong endpoints");
    if (auto defect = path_defect(d, p, k == 1)) return Verdict::fail(tag + *defect);
    for (VertexId w : p.interior()) {
      if (specials.test(w)) return Verdict::fail(tag + "interior meets special vertex " + std::to_string(w));
      if (used.test(w)) return Verdict::fail(tag + "interior collision at vertex " + std::to_string(w));
      used.set(w);
    }
  }
  return Verdict::pass();
}

Verdict verify_linkage(const Digraph& d, const LinkRequest& request, std::span<const Path> paths) {
  if (paths.size() != request.size())
    return Verdict::fail("path count " + std::to_string(paths.size()) + " != " + std::to_string(request.size()));
  VertexSet used(d.order());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const Path& p = paths[i];
    const auto& want = request.pairs()[i];
    const auto tag = "path " + std::to_string(i) + ": ";
    if (p.vertices.empty() || p.source() != want.source || p.target() != want.target)
      return Verdict::fail(tag + "wrong endpoints");
    if (auto defect = path_defect(d, p)) return Verdict::fail(tag + *defect);
    for (VertexId w : p.vertices) {
      if (used.test(w)) return Verdict::fail(tag + "vertex " + std::to_string(w) + " shared with another path");
      used.set(w);
    }
  }
  return Verdict::pass();
}

}  // namespace orderlink
