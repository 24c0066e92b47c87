#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orderlink/digraph.hpp"
#include "orderlink/sequence.hpp"

namespace orderlink {

/// Longest segment the constructive argument ever produces.
inline constexpr std::size_t kMaxSegmentLength = 6;

/// Families of s_j -> s_{j+1} paths indexed by segment j. Index j belongs to
/// J exactly when its family is non-empty; t_j is the family size. The
/// class only stores paths; system_defect() checks them against a digraph.
class PathSystem {
 public:
  PathSystem() = default;
  explicit PathSystem(std::size_t k) : families_(k) {}

  std::size_t k() const noexcept { return families_.size(); }
  bool contains(std::size_t j) const { return !families_.at(j).empty(); }
  std::size_t multiplicity(std::size_t j) const { return families_.at(j).size(); }
  /// |J|
  std::size_t index_count() const;
  /// Σ t_j
  std::size_t total_paths() const;
  std::vector<std::size_t> indices() const;

  const std::vector<Path>& family(std::size_t j) const { return families_.at(j); }
  void add(std::size_t j, Path p) { families_.at(j).push_back(std::move(p)); }
  /// The family of j becomes exactly {p}.
  void replace(std::size_t j, Path p);
  /// Removes and returns the family of j.
  std::vector<Path> take(std::size_t j);

  /// X′: every vertex interior to some path of the system.
  VertexSet interiors(std::size_t universe) const;
  VertexSet interiors_of(std::size_t j, std::size_t universe) const;

 private:
  std::vector<std::vector<Path>> families_;
};

/// First violated system invariant, or nullopt: each path runs s_j -> s_{j+1}
/// in `d`, has length <= kMaxSegmentLength, avoids S internally, and all
/// interiors across all families are pairwise disjoint; t_j <= max_multiplicity.
std::optional<std::string> system_defect(const Digraph& d, const SpecialSequence& s,
                                         const PathSystem& system, std::size_t max_multiplicity);

}  // namespace orderlink
