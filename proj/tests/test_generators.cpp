#include <gtest/gtest.h>

#include "orderlink/generators.hpp"
#include "orderlink/oracle.hpp"
#include "test_support.hpp"

using namespace orderlink;
using orderlink::testing::named;
using orderlink::testing::part_members;

namespace {

std::size_t linked_bound(std::size_t ell, std::size_t n) { return ceil_div(n, 2) + ell - 2; }
std::size_t ordered_bound(std::size_t k, std::size_t n) { return ceil_div(n + k, 2) - 2; }

bool linked_feasible(std::size_t ell, std::size_t n) { return n % 2 == 0 || n >= 2 * ell + 3; }

}  // namespace

TEST(Complete, SmallCases) {
  EXPECT_EQ(complete_digraph(1).arc_count(), 0u);
  const Digraph k4 = complete_digraph(4);
  EXPECT_EQ(k4.arc_count(), 12u);
  EXPECT_EQ(min_semi_degree(k4), 3u);
  EXPECT_THROW(complete_digraph(0), GraphError);
}

TEST(Complete, TenVerticesAreThreeOrdered) {
  const Digraph k10 = complete_digraph(10);
  for (VertexId a = 0; a < 4; ++a)
    for (VertexId b = 4; b < 7; ++b)
      for (VertexId c : {7u, 9u}) EXPECT_TRUE(exists_ordered_cycle(k10, SpecialSequence({b, a, c})));
}

TEST(ExtremalLinked, CaseOneArithmetic) {
  const auto w = extremal_linked(2, 8);
  EXPECT_EQ(w.case_label, "Case 1");
  EXPECT_EQ(part_members(w, Part::A).size() + part_members(w, Part::X).size(), 5u);
  EXPECT_EQ(part_members(w, Part::B).size() + part_members(w, Part::X).size(), 5u);
  EXPECT_EQ(part_members(w, Part::X).size(), 2u);
  EXPECT_EQ(min_semi_degree(w.digraph), 4u);
}

TEST(ExtremalLinked, CaseTwoArithmetic) {
  const auto w = extremal_linked(2, 9);
  EXPECT_EQ(w.case_label, "Case 2");
  EXPECT_EQ(part_members(w, Part::A).size(), 2u);
  EXPECT_EQ(part_members(w, Part::B).size(), 2u);
  EXPECT_EQ(part_members(w, Part::X).size(), 1u);
  const auto s = part_members(w, Part::S);
  ASSERT_EQ(s.size(), 4u);
  for (VertexId v : s) {
    EXPECT_EQ(std::min(w.digraph.out_degree(v), w.digraph.in_degree(v)), 5u);
  }
  EXPECT_EQ(min_semi_degree(w.digraph), 5u);
}

TEST(ExtremalLinked, CaseTwoLacksTheForbiddenArcs) {
  for (std::size_t ell = 2; ell <= 4; ++ell) {
    const auto w = extremal_linked(ell, 2 * ell + 5);
    EXPECT_FALSE(w.digraph.has_arc(named(w, "x1"), named(w, "y1")));
    EXPECT_FALSE(w.digraph.has_arc(named(w, "x2"), named(w, "y2")));
    EXPECT_TRUE(w.digraph.has_arc(named(w, "y1"), named(w, "x1")));
  }
}

TEST(ExtremalLinked, WitnessPairsFollowTheConstruction) {
  const auto w = extremal_linked(3, 12);
  ASSERT_EQ(w.pairs.size(), 3u);
  EXPECT_EQ(w.roles[w.pairs[2].source].part, Part::A);
  EXPECT_EQ(w.roles[w.pairs[2].target].part, Part::B);
  for (int i = 0; i < 2; ++i) {
    EXPECT_EQ(w.roles[w.pairs[i].source].part, Part::X);
    EXPECT_EQ(w.roles[w.pairs[i].target].part, Part::X);
  }
  EXPECT_EQ(w.special_sequence.size(), 6u);
}

TEST(ExtremalLinked, OracleConfirmsNotLinked) {
  for (std::size_t n : {8u, 9u, 10u}) {
    const auto w = extremal_linked(2, n);
    EXPECT_FALSE(exists_linkage(w.digraph, w.link_request())) << n;
  }
}

TEST(ExtremalLinked, InfeasibleCasesAreNamed) {
  EXPECT_THROW(extremal_linked(1, 8), GraphError);
  EXPECT_THROW(extremal_linked(3, 5), GraphError);
  try {
    extremal_linked(3, 7);
    FAIL();
  } catch (const GraphError& e) {
    EXPECT_NE(std::string(e.what()).find("Case 2"), std::string::npos);
  }
}

TEST(ExtremalLinked, DegreeExactOverSweep) {
  for (std::size_t ell = 2; ell <= 4; ++ell)
    for (std::size_t n = 2 * ell; n <= 60; ++n) {
      if (!linked_feasible(ell, n)) {
        EXPECT_THROW(extremal_linked(ell, n), GraphError);
        continue;
      }
      const auto w = extremal_linked(ell, n);
      EXPECT_EQ(w.digraph.order(), n);
      EXPECT_EQ(min_semi_degree(w.digraph), linked_bound(ell, n)) << ell << "," << n;
      EXPECT_EQ(w.roles.size(), n);
    }
}

TEST(ExtremalOrdered, CaseTwoArithmetic) {
  const auto w = extremal_ordered(2, 8);
  EXPECT_EQ(w.case_label, "Case 2");
  EXPECT_EQ(part_members(w, Part::A).size() + part_members(w, Part::X).size(), 4u);
  EXPECT_EQ(part_members(w, Part::B).size() + part_members(w, Part::X).size(), 5u);
  EXPECT_EQ(part_members(w, Part::X).size(), 1u);
  EXPECT_EQ(min_semi_degree(w.digraph), 3u);
  EXPECT_EQ(w.roles[w.special_sequence[0]].part, Part::A);
  EXPECT_EQ(w.roles[w.special_sequence[1]].part, Part::B);
}

TEST(ExtremalOrdered, CaseOneArithmetic) {
  const auto w = extremal_ordered(3, 10);
  EXPECT_EQ(w.case_label, "Case 1");
  const auto a = part_members(w, Part::A);
  EXPECT_EQ(a.size(), 3u);
  EXPECT_EQ(part_members(w, Part::B).size(), 3u);
  EXPECT_EQ(part_members(w, Part::X).size(), 1u);
  for (VertexId v : a) {
    EXPECT_EQ(std::min(w.digraph.out_degree(v), w.digraph.in_degree(v)), 5u);
  }
}

TEST(ExtremalOrdered, CaseThreeIsNotThreeOrdered) {
  const auto w = extremal_ordered(3, 9);
  EXPECT_EQ(w.case_label, "Case 3");
  EXPECT_EQ(part_members(w, Part::X).size(), 1u);
  EXPECT_EQ(part_members(w, Part::A).size() + 1, 5u);
  EXPECT_EQ(part_members(w, Part::B).size() + 1, 5u);
  EXPECT_FALSE(exists_ordered_cycle(w.digraph, w.sequence()));
}

TEST(ExtremalOrdered, CaseOneSpecialArcs) {
  for (std::size_t k : {3u, 5u, 7u}) {
    const auto w = extremal_ordered(k, 2 * k + 6);
    ASSERT_EQ(w.case_label, "Case 1");
    EXPECT_TRUE(w.digraph.has_arc(named(w, "s1"), named(w, "s2")));
    for (std::size_t i = 2; i <= k; ++i) {
      const auto from = named(w, "s" + std::to_string(i));
      const auto to = named(w, "s" + std::to_string(i % k + 1));
      EXPECT_FALSE(w.digraph.has_arc(from, to)) << k << ": s" << i;
    }
  }
}

TEST(ExtremalOrdered, DegreeExactOverSweep) {
  for (std::size_t k = 2; k <= 7; ++k)
    for (std::size_t n = 2 * k; n <= 60; ++n) {
      const auto w = extremal_ordered(k, n);
      EXPECT_EQ(w.digraph.order(), n);
      EXPECT_EQ(min_semi_degree(w.digraph), ordered_bound(k, n)) << k << "," << n;
      EXPECT_EQ(w.special_sequence.size(), k);
    }
}

TEST(ExtremalOrdered, InfeasibleInputs) {
  EXPECT_THROW(extremal_ordered(1, 8), GraphError);
  EXPECT_THROW(extremal_ordered(4, 7), GraphError);
}

TEST(ExtremalOrdered, OracleConfirmsWitnesses) {
  for (auto [k, n] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 8}, {2, 10}, {3, 10}, {3, 11}, {4, 10}}) {
    const auto w = extremal_ordered(k, n);
    EXPECT_FALSE(exists_ordered_cycle(w.digraph, w.sequence())) << k << "," << n;
  }
}

TEST(RandomMinDegree, ForcedComplete) {
  for (std::uint64_t seed : {1u, 2u, 99u}) EXPECT_EQ(random_min_degree(6, 5, seed).arc_count(), 30u);
}

TEST(RandomMinDegree, MeetsDegreeAndIsDeterministic) {
  const Digraph d = random_min_degree(20, 10, 1);
  EXPECT_GE(min_semi_degree(d), 10u);
  EXPECT_EQ(random_min_degree(20, 10, 1).arcs(), d.arcs());
  EXPECT_NE(random_min_degree(20, 10, 2).arcs(), d.arcs());
  for (std::size_t n = 1; n <= 40; n += 3)
    for (std::size_t deg = 0; deg < n; deg += 2) EXPECT_GE(min_semi_degree(random_min_degree(n, deg, n + deg)), deg);
}

TEST(RandomMinDegree, RegimeInstance) {
  const Digraph d = random_min_degree(5400, 2702, 7);
  EXPECT_EQ(d.order(), 5400u);
  EXPECT_GE(min_semi_degree(d), 2702u);
}

TEST(RandomMinDegree, Infeasible) {
  EXPECT_THROW(random_min_degree(5, 5, 1), GraphError);
  EXPECT_THROW(random_min_degree(0, 0, 1), GraphError);
}
