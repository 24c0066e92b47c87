#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "orderlink/digraph.hpp"
#include "orderlink/sequence.hpp"

namespace orderlink {

/// Exhaustive search refused because the instance is above the size cap.
class OracleRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The exact procedures are exponential; callers opt into larger instances
/// by raising the cap explicitly. Hard ceiling is 64 vertices.
struct OracleLimits {
  std::size_t max_order = 24;
};

struct Certificate {
  enum class Kind { OrderedCycle, Linkage };
  Kind kind = Kind::OrderedCycle;
  std::vector<Path> segments;
};

/// A cycle meeting the specials in order, as one segment per consecutive
/// pair, or nullopt if none exists. No length bound.
std::optional<Certificate> find_ordered_cycle(const Digraph& d, const SpecialSequence& s,
                                              OracleLimits limits = {});
bool exists_ordered_cycle(const Digraph& d, const SpecialSequence& s, OracleLimits limits = {});

/// Pairwise vertex-disjoint source->target paths, or nullopt if none exist.
std::optional<Certificate> find_linkage(const Digraph& d, const LinkRequest& request,
                                        OracleLimits limits = {});
bool exists_linkage(const Digraph& d, const LinkRequest& request, OracleLimits limits = {});

/// Exact maximum number of pairwise internally disjoint u->v paths of length
/// at most `max_length`.
std::size_t max_disjoint_short_paths(const Digraph& d, VertexId u, VertexId v,
                                     std::size_t max_length, OracleLimits limits = {});

struct Verdict {
  bool ok = true;
  std::string reason;
  explicit operator bool() const noexcept { return ok; }
  static Verdict pass() { return {}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }
};

/// Accepts exactly the segment lists forming a cycle that meets s_1..s_k in
/// order: segment i is a path of `d` from s_i to s_{i+1}, interiors avoid
/// every special and are pairwise disjoint.
Verdict verify_ordered_cycle(const Digraph& d, const SpecialSequence& s, std::span<const Path> segments);

/// Accepts exactly ℓ pairwise vertex-disjoint paths, path i joining pair i.
Verdict verify_linkage(const Digraph& d, const LinkRequest& request, std::span<const Path> paths);

}  // namespace orderlink
