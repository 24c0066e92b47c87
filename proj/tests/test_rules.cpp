#include <gtest/gtest.h>

#include "orderlink/generators.hpp"
#include "orderlink/oracle.hpp"
#include "orderlink/solver.hpp"

using namespace orderlink;

namespace {

struct Fixture {
  Digraph d;
  AugmentState st;

  Fixture(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> arcs, std::vector<bool> hard)
      : d(build(n, arcs)), st(d, SpecialSequence({0, 1, 2}), SolverOptions{1, false, true}) {
    st.easy.hard = std::move(hard);
  }

  static Digraph build(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> arcs) {
    DigraphBuilder b(n);
    for (auto [u, v] : arcs) b.add_arc(u, v);
    return std::move(b).build();
  }

  StepRecord step() {
    StepResult r = augment(st);
    EXPECT_EQ(r.kind, StepResult::Kind::Improved) << (r.failure ? r.failure->to_string() : "");
    if (!r.record) return {};
    EXPECT_TRUE(r.record->progressed());
    EXPECT_FALSE(system_defect(d, st.s, st.system, 6 * 3)) << *system_defect(d, st.s, st.system, 6 * 3);
    return *r.record;
  }
};

Path P(std::vector<VertexId> v) { return Path{std::move(v)}; }

}  // namespace

TEST(Rules, DirectArc) {
  Fixture f(4, {{0, 1}}, {true, false, false});
  const auto rec = f.step();
  EXPECT_EQ(rec.rule, Rule::DirectArc);
  EXPECT_EQ(f.st.system.family(0).front(), P({0, 1}));
  EXPECT_EQ(augment(f.st).kind, StepResult::Kind::Done);
}

TEST(Rules, CommonNeighbor) {
  Fixture f(5, {{0, 3}, {3, 1}, {0, 4}}, {true, false, false});
  EXPECT_EQ(f.step().rule, Rule::CommonNeighbor);
  EXPECT_EQ(f.st.system.family(0).front(), P({0, 3, 1}));
}

TEST(Rules, CrossArc) {
  Fixture f(5, {{0, 3}, {3, 4}, {4, 1}}, {true, false, false});
  EXPECT_EQ(f.step().rule, Rule::CrossArc);
  EXPECT_EQ(f.st.system.family(0).front(), P({0, 3, 4, 1}));
}

TEST(Rules, SmallestMissingHardIndexFirst) {
  Fixture f(6, {{0, 1}, {1, 2}, {2, 0}}, {false, true, true});
  auto rec = f.step();
  EXPECT_EQ(rec.missing, 1u);
  rec = f.step();
  EXPECT_EQ(rec.missing, 2u);
  EXPECT_EQ(f.st.system.family(2).front(), P({2, 0}));
}

TEST(Rules, BackArcDetour) {
  // s0 s1 s2 = 0 1 2, a1 a2 = 3 4, b1 b2 = 5 6, x = 7
  Fixture f(8,
            {{2, 3}, {2, 4}, {5, 0}, {6, 0}, {0, 5}, {4, 1}, {5, 6}, {6, 3}, {3, 4}, {0, 7}, {7, 1}},
            {true, false, true});
  f.st.system.add(0, P({0, 7, 1}));
  const auto rec = f.step();
  EXPECT_EQ(rec.rule, Rule::BackArcDetour);
  EXPECT_EQ(rec.missing, 2u);
  EXPECT_EQ(rec.changed, 0u);
  EXPECT_EQ(rec.t_after, rec.t_before + 1);
  ASSERT_EQ(f.st.system.multiplicity(0), 2u);
  EXPECT_EQ(f.st.system.family(0)[1], P({0, 5, 6, 3, 4, 1}));
}

TEST(Rules, Endgame) {
  // a0 a1 a2 = 3 4 5, b0 b1 b2 = 6 7 8, x0 x1 x2 = 9 10 11, p = 12, q = 13
  Fixture f(14,
            {{2, 3}, {2, 4}, {2, 5}, {6, 0}, {7, 0}, {8, 0}, {0, 4}, {7, 1}, {1, 8}, {5, 2},
             {3, 9}, {9, 6}, {4, 10}, {10, 7}, {8, 11}, {11, 5}, {0, 12}, {12, 1}, {1, 13}, {13, 2}},
            {true, true, true});
  f.st.system.add(0, P({0, 12, 1}));
  f.st.system.add(1, P({1, 13, 2}));
  const auto rec = f.step();
  EXPECT_EQ(rec.rule, Rule::Endgame);
  EXPECT_EQ(rec.j_after, 3u);
  EXPECT_EQ(f.st.system.family(0).front(), P({0, 4, 10, 7, 1}));
  EXPECT_EQ(f.st.system.family(1).front(), P({1, 8, 11, 5, 2}));
  EXPECT_EQ(f.st.system.family(2).front(), P({2, 3, 9, 6, 0}));
  EXPECT_EQ(augment(f.st).kind, StepResult::Kind::Done);
  const auto segs = complete_system(f.d, f.st.s, f.st.system, f.st.easy);
  EXPECT_TRUE(verify_ordered_cycle(f.d, f.st.s, segs));
}

TEST(Rules, EndgameExposesItsAnchors) {
  Fixture f(14,
            {{2, 3}, {2, 4}, {2, 5}, {6, 0}, {7, 0}, {8, 0}, {0, 4}, {7, 1}, {1, 8}, {5, 2},
             {3, 9}, {9, 6}, {4, 10}, {10, 7}, {8, 11}, {11, 5}, {0, 12}, {12, 1}, {1, 13}, {13, 2}},
            {true, true, true});
  f.st.system.add(0, P({0, 12, 1}));
  f.st.system.add(1, P({1, 13, 2}));
  const Partition p = build_partition(f.d, f.st.s, f.st.system, 2, 1, false);
  const TypeProfile t = classify(f.d, p, f.st.s, false);
  const EndgameData e = endgame(f.d, f.st.s, p, t, f.st.system, f.st.options);
  EXPECT_EQ(e.rotation, 2u);
  EXPECT_EQ(e.j_ab, (std::vector<std::size_t>{0}));
  EXPECT_EQ(e.j_ba, (std::vector<std::size_t>{1}));
  EXPECT_EQ(e.q_k.length(), 4u);
  ASSERT_EQ(e.q.size(), 2u);
  for (const auto& [j, path] : e.q) EXPECT_EQ(path.length(), 4u) << j;
}

TEST(Rules, PairSwap) {
  // p = 3, α = 4 5 6, β = 7 8 9, z1 z2 = 10 11, a = 12, b = 13
  Fixture f(14,
            {{2, 4},  {2, 5},  {2, 6},  {2, 12}, {7, 0},  {8, 0},  {9, 0},  {13, 0},
             {4, 10}, {4, 11}, {5, 10}, {5, 11}, {6, 10}, {6, 11}, {10, 7}, {10, 8},
             {10, 9}, {11, 7}, {11, 8}, {11, 9}, {12, 5}, {8, 13}, {0, 12}, {13, 1},
             {9, 6},  {0, 3},  {3, 1}},
            {true, false, true});
  f.st.system.add(0, P({0, 3, 1}));
  const auto rec = f.step();
  EXPECT_EQ(rec.rule, Rule::PairSwap);
  EXPECT_EQ(rec.j_after, 2u);
  EXPECT_EQ(f.st.system.family(0).front(), P({0, 12, 5, 10, 8, 13, 1}));
  EXPECT_EQ(f.st.system.family(2).front(), P({2, 4, 11, 7, 0}));
}

TEST(Rules, ReclassificationRetiresAFullFamily) {
  DigraphBuilder b(22);
  for (VertexId u = 3; u <= 19; ++u) b.add_arc(0, u).add_arc(u, 1);
  b.add_arc(2, 20).add_arc(2, 21).add_arc(0, 20).add_arc(20, 21).add_arc(21, 1);
  const Digraph d = std::move(b).build();
  AugmentState st(d, SpecialSequence({0, 1, 2}), SolverOptions{1, false, true});
  st.easy.hard = {true, false, true};
  for (VertexId u = 3; u <= 19; ++u) st.system.add(0, P({0, u, 1}));
  const StepResult r = augment(st);
  ASSERT_EQ(r.kind, StepResult::Kind::Improved) << (r.failure ? r.failure->to_string() : "");
  EXPECT_EQ(r.record->rule, Rule::TwoHopExtension);
  ASSERT_TRUE(r.record->reclassified);
  EXPECT_EQ(*r.record->reclassified, 0u);
  EXPECT_TRUE(r.record->progressed());
  EXPECT_FALSE(st.easy.hard[0]);
  EXPECT_EQ(st.easy.certificates[0].size(), 18u);
  EXPECT_FALSE(st.system.contains(0));
}

TEST(Rules, ProgressMeasure) {
  StepRecord r;
  r.j_before = 1, r.t_before = 3, r.j_after = 1, r.t_after = 3;
  EXPECT_FALSE(r.progressed());
  r.t_after = 4;
  EXPECT_TRUE(r.progressed());
  r.t_after = 2, r.j_after = 2;
  EXPECT_TRUE(r.progressed());
  r.j_after = 0, r.t_after = 0;
  EXPECT_FALSE(r.progressed());
  r.reclassified = 1;
  EXPECT_TRUE(r.progressed());
}

// Two cliques sharing three plain vertices, s0 s2 on one side, s1 on the other.
// Indices 0 and 1 are hard and get covered through (a).
TEST(RegimeStructures, OverlappingCliquesSharingThreeVertices) {
  const std::size_t n = 5401;
  std::vector<VertexId> left{0, 2}, right{1};
  for (VertexId v = 3; v < 6; ++v) left.push_back(v), right.push_back(v);
  for (VertexId v = 6; left.size() < 2702; ++v) left.push_back(v);
  for (VertexId v = static_cast<VertexId>(left.size() + 1); v < n; ++v) right.push_back(v);
  ASSERT_EQ(right.size(), 2702u);
  DigraphBuilder b(n);
  b.add_clique(left);
  b.add_clique(right);
  const Digraph d = std::move(b).build();
  ASSERT_GE(min_semi_degree(d), required_min_degree(n, 3));
  const SpecialSequence s({0, 1, 2});
  const auto r = solve_ordered(d, s);
  ASSERT_TRUE(r.ok()) << r.failure->to_string();
  EXPECT_TRUE(verify_ordered_cycle(d, s, r.segments));
  EXPECT_EQ(r.initial_hard, (std::vector<std::size_t>{0, 1}));
  ASSERT_EQ(r.trace.size(), 2u);
  for (const auto& step : r.trace) EXPECT_EQ(step.rule, Rule::CommonNeighbor);
}

TEST(RegimeStructures, ExtremalPlusUniversalVertex) {
  const auto w = extremal_ordered(3, 5400);
  DigraphBuilder b(5401);
  for (Arc a : w.digraph.arcs()) b.add_arc(a.tail, a.head);
  for (VertexId v = 0; v < 5400; ++v) b.add_edge(v, 5400);
  const Digraph d = std::move(b).build();
  ASSERT_TRUE(hypothesis_holds(5401, 3, min_semi_degree(d)));
  const SpecialSequence s = w.sequence();
  const auto r = solve_ordered(d, s);
  ASSERT_TRUE(r.ok()) << r.failure->to_string();
  EXPECT_TRUE(verify_ordered_cycle(d, s, r.segments));
  EXPECT_FALSE(r.initial_hard.empty());
  for (const auto& step : r.trace) EXPECT_TRUE(step.progressed());
}
