#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orderlink/digraph.hpp"
#include "orderlink/path_system.hpp"
#include "orderlink/sequence.hpp"

namespace orderlink {

struct SolverOptions {
  /// Type threshold k₀. Defaults to 30k²; lowering it lets small fixtures
  /// reach the later augmentation rules.
  std::optional<std::size_t> type_threshold;
  /// Check the counting bounds the construction relies on, where they are
  /// used. Conditions the construction itself needs (a vertex
  /// to pick, an arc to use) are checked regardless.
  bool check_bounds = true;
  /// Record one StepRecord per augmentation.
  bool record_trace = true;
};

/// Where and why the solver stopped without a certificate.
struct Failure {
  std::string stage;
  std::string reason;
  std::string to_string() const { return stage + ": " + reason; }
};

/// Thrown inside the augmentation machinery; solve_* convert it to a
/// NotGuaranteed outcome.
class ProofStepFailure : public std::runtime_error {
 public:
  explicit ProofStepFailure(Failure f)
      : std::runtime_error(f.to_string()), failure_(std::move(f)) {}
  const Failure& failure() const noexcept { return failure_; }

 private:
  Failure failure_;
};

enum class Rule {
  DirectArc,        // tail -> head arc
  CommonNeighbor,   // tail -> x -> head, x in A∩B
  CrossArc,         // tail -> a -> b -> head
  TwoHopExtension,  // s_j u w s_{j+1} inside A or inside B
  BackArcDetour,    // through a B->A arc
  PairSwap,         // reroute one family to free a tail/head pair
  Endgame,          // reroute every covered index through anchors
};
const char* rule_name(Rule r);

struct StepRecord {
  Rule rule = Rule::DirectArc;
  std::size_t missing = 0;  // index being added
  std::size_t changed = 0;  // family that grew (equals `missing` for rules adding it)
  std::size_t j_before = 0, t_before = 0;
  std::size_t j_after = 0, t_after = 0;
  std::optional<std::size_t> reclassified;
  /// Strictly larger (|J|, Σt) or a reclassification.
  bool progressed() const;
};

struct SolveOutcome {
  enum class Status { Success, NotGuaranteed };
  Status status = Status::NotGuaranteed;
  std::vector<Path> segments;   // P_1..P_k on success
  std::vector<VertexId> cycle;  // s_1 ... back before s_1
  std::optional<Failure> failure;
  std::vector<StepRecord> trace;
  std::size_t augmentations = 0;
  std::vector<std::size_t> initial_hard;  // I as computed up front
  std::size_t k0 = 0;

  bool ok() const noexcept { return status == Status::Success; }
};

/// δ needed for the guarantee: ⌈n/2⌉−1 (k=1), ⌈n/2⌉ (k=2), ⌈(n+k)/2⌉−1 (k≥3).
std::size_t required_min_degree(std::size_t n, std::size_t k);
/// 200k³ for k ≥ 3, otherwise 0.
std::size_t required_order(std::size_t k);
bool hypothesis_holds(std::size_t n, std::size_t k, std::size_t delta);
std::size_t default_type_threshold(std::size_t k);

SolveOutcome solve_ordered(const Digraph& d, const SpecialSequence& s, const SolverOptions& options = {});
SolveOutcome solve_k1(const Digraph& d, VertexId s1);
SolveOutcome solve_k2(const Digraph& d, VertexId s1, VertexId s2);

/// Internally disjoint u->v paths of length <= max_length, added greedily:
/// the arc u->v if present, then repeatedly a shortest path whose interior
/// avoids everything used so far and `blocked`, breaking ties by the
/// lexicographically smallest interior. Stops after `limit` paths.
std::vector<Path> greedy_short_path_packing(const Digraph& d, VertexId u, VertexId v,
                                            std::size_t max_length,
                                            std::size_t limit = std::numeric_limits<std::size_t>::max(),
                                            const VertexSet* blocked = nullptr);

struct EasyIndices {
  std::vector<bool> hard;                       // membership in I
  std::vector<std::vector<Path>> certificates;  // exactly 6k paths for each easy index
  std::vector<std::size_t> hard_indices() const;
};
EasyIndices easy_indices(const Digraph& d, const SpecialSequence& s);

/// Closes a system covering every hard index into P_1..P_k, drawing each easy
/// segment from its certificate.
std::vector<Path> complete_system(const Digraph& d, const SpecialSequence& s, const PathSystem& partial,
                                  const EasyIndices& easy);

/// Working sets for adding the missing index m. Indices are relabelled
/// modulo k so that m plays the last index: tail = s_m, head = s_{m+1}.
struct Partition {
  std::size_t missing = 0;
  std::size_t k0 = 0;
  VertexId tail = kNoVertex;
  VertexId head = kNoVertex;
  VertexSet specials, a, b, x_prime, x_double_prime;

  VertexSet x() const { return x_prime | x_double_prime; }
  VertexSet y() const { return specials | x(); }
  VertexSet y_bar() const { return a | b; }
};
Partition build_partition(const Digraph& d, const SpecialSequence& s, const PathSystem& system,
                          std::size_t missing, std::size_t k0, bool check_bounds = true);

struct TypeProfile {
  std::vector<bool> out_a, out_b, in_a, in_b;                  // ≥ k₀ arcs
  std::vector<bool> sends_a, receives_a, sends_b, receives_b;  // ≥ 1 arc
  std::size_t q_out_a = 0, q_in_a = 0, q_out_b = 0, q_in_b = 0;
  std::vector<std::size_t> out_type_b;  // Q
};
/// Requires A∩B = ∅. With check_bounds, also enforces the type facts and
/// the partition size bound.
TypeProfile classify(const Digraph& d, const Partition& p, const SpecialSequence& s, bool check_bounds = true);

struct EndgameData {
  std::size_t rotation = 0;  // the missing index playing k
  std::vector<std::size_t> j_ab, j_ba;
  VertexId a0 = kNoVertex, b0 = kNoVertex, x0 = kNoVertex;
  struct Anchor {
    std::size_t j = 0;
    VertexId a = kNoVertex;  // a_j or a′_j
    VertexId b = kNoVertex;  // b_j or b′_j
    VertexId x = kNoVertex;
  };
  std::vector<Anchor> anchors_ab, anchors_ba;
  std::vector<std::pair<std::size_t, Path>> q;  // Q_j for j ∈ J
  Path q_k;
};
/// Requires A∩B = ∅ and no arc between A and B in either direction.
EndgameData endgame(const Digraph& d, const SpecialSequence& s, const Partition& p, const TypeProfile& profile,
                    const PathSystem& system, const SolverOptions& options);

struct AugmentState {
  AugmentState(const Digraph& graph, SpecialSequence seq, SolverOptions opts);
  const Digraph& d;
  SpecialSequence s;
  SolverOptions options;
  std::size_t k0;
  EasyIndices easy;
  PathSystem system;
};

struct StepResult {
  enum class Kind { Improved, Done, Failed };
  Kind kind = Kind::Done;
  std::optional<StepRecord> record;
  std::optional<Failure> failure;
};
/// Applies the first applicable rule for the smallest hard index missing
/// from J. Done once every hard index is covered.
StepResult augment(AugmentState& state);

struct LinkOutcome {
  SolveOutcome::Status status = SolveOutcome::Status::NotGuaranteed;
  std::vector<Path> paths;
  std::optional<Failure> failure;
  SolveOutcome ordered;
  bool ok() const noexcept { return status == SolveOutcome::Status::Success; }
};
LinkOutcome solve_linkage(const Digraph& d, const LinkRequest& request, const SolverOptions& options = {});

}  // namespace orderlink
