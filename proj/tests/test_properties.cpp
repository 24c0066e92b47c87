#include <gtest/gtest.h>

#include <random>
#include <set>

#include "orderlink/generators.hpp"
#include "orderlink/oracle.hpp"
#include "orderlink/solver.hpp"
#include "test_support.hpp"

using namespace orderlink;
using orderlink::testing::random_digraph;
using orderlink::testing::random_specials;

namespace {

// Definition check written out separately from verify_ordered_cycle.
bool is_ordered_cycle(const Digraph& d, const std::vector<VertexId>& s, const std::vector<Path>& segs) {
  if (segs.size() != s.size()) return false;
  std::set<VertexId> specials(s.begin(), s.end()), seen;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& v = segs[i].vertices;
    if (v.size() < 2 || v.front() != s[i] || v.back() != s[(i + 1) % s.size()]) return false;
    for (std::size_t t = 0; t + 1 < v.size(); ++t)
      if (v[t] >= d.order() || v[t + 1] >= d.order() || v[t] == v[t + 1] || !d.has_arc(v[t], v[t + 1]))
        return false;
    std::set<VertexId> local;
    for (std::size_t t = 0; t < v.size(); ++t) {
      const bool endpoint = t == 0 || t + 1 == v.size();
      if (!local.insert(v[t]).second && !(s.size() == 1 && t + 1 == v.size())) return false;
      if (endpoint) continue;
      if (specials.count(v[t]) || !seen.insert(v[t]).second) return false;
    }
  }
  return true;
}

Digraph plus_random_arcs(const Digraph& d, std::size_t extra, std::mt19937_64& rng) {
  DigraphBuilder b(d.order());
  for (Arc a : d.arcs()) b.add_arc(a.tail, a.head);
  for (std::size_t i = 0; i < extra; ++i) {
    const auto u = static_cast<VertexId>(rng() % d.order());
    const auto v = static_cast<VertexId>(rng() % d.order());
    if (u != v && !b.has_arc(u, v)) b.add_arc(u, v);
  }
  return std::move(b).build();
}

}  // namespace

TEST(Properties, VerifierRejectsEverySingleMutationOnASparseCycle) {
  DigraphBuilder b(8);
  const std::vector<VertexId> ring{0, 3, 1, 4, 2, 5};
  for (std::size_t i = 0; i < ring.size(); ++i) b.add_arc(ring[i], ring[(i + 1) % ring.size()]);
  const Digraph d = std::move(b).build();
  const SpecialSequence s({0, 1, 2});
  const std::vector<Path> good{Path{{0, 3, 1}}, Path{{1, 4, 2}}, Path{{2, 5, 0}}};
  ASSERT_TRUE(verify_ordered_cycle(d, s, good));

  std::size_t mutations = 0;
  for (std::size_t seg = 0; seg < 3; ++seg)
    for (std::size_t pos = 0; pos < 3; ++pos) {
      for (VertexId w = 0; w < 8; ++w) {
        if (w == good[seg].vertices[pos]) continue;
        auto bad = good;
        bad[seg].vertices[pos] = w;
        EXPECT_FALSE(verify_ordered_cycle(d, s, bad)) << seg << "," << pos << "->" << w;
        bad = good;
        bad[seg].vertices.insert(bad[seg].vertices.begin() + static_cast<long>(pos), w);
        EXPECT_FALSE(verify_ordered_cycle(d, s, bad));
        mutations += 2;
      }
      auto bad = good;
      bad[seg].vertices.erase(bad[seg].vertices.begin() + static_cast<long>(pos));
      EXPECT_FALSE(verify_ordered_cycle(d, s, bad));
      ++mutations;
    }
  auto dropped = good;
  dropped.pop_back();
  EXPECT_FALSE(verify_ordered_cycle(d, s, dropped));
  auto rotated = good;
  std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
  EXPECT_FALSE(verify_ordered_cycle(d, s, rotated));
  EXPECT_GT(mutations, 100u);
}

TEST(Properties, VerifierMatchesDefinitionUnderRandomMutation) {
  std::mt19937_64 rng(12);
  std::size_t accepted = 0, rejected = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 8 + rng() % 6;
    const Digraph d = random_digraph(n, 0.6, rng());
    const auto sv = random_specials(n, 1 + rng() % 3, rng);
    const SpecialSequence s(sv);
    const auto cert = find_ordered_cycle(d, s);
    if (!cert) continue;
    auto segs = cert->segments;
    for (int m = 0; m < 4; ++m) {
      auto bad = segs;
      auto& v = bad[rng() % bad.size()].vertices;
      switch (rng() % 3) {
        case 0: v[rng() % v.size()] = static_cast<VertexId>(rng() % n); break;
        case 1: v.insert(v.begin() + static_cast<long>(1 + rng() % (v.size() - 1)), static_cast<VertexId>(rng() % n)); break;
        default:
          if (v.size() > 2) v.erase(v.begin() + static_cast<long>(1 + rng() % (v.size() - 2)));
      }
      const bool expected = is_ordered_cycle(d, sv, bad);
      EXPECT_EQ(static_cast<bool>(verify_ordered_cycle(d, s, bad)), expected) << "trial " << trial;
      (expected ? accepted : rejected)++;
    }
  }
  EXPECT_GT(rejected, 100u);
}

TEST(Properties, SolverCycleSurvivesAddedArcs) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 20 + rng() % 60;
    const Digraph d = random_min_degree(n, n / 2 + 2, rng());
    const SpecialSequence s(random_specials(n, 1 + rng() % 3, rng));
    const auto r = solve_ordered(d, s);
    if (!r.ok()) continue;
    const Digraph bigger = plus_random_arcs(d, n * 3, rng);
    EXPECT_TRUE(verify_ordered_cycle(bigger, s, r.segments));
  }
}

TEST(Properties, OracleExistenceIsMonotone) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 6 + rng() % 8;
    const Digraph d = random_digraph(n, 0.3, rng());
    const SpecialSequence s(random_specials(n, 2 + rng() % 2, rng));
    if (!exists_ordered_cycle(d, s)) continue;
    EXPECT_TRUE(exists_ordered_cycle(plus_random_arcs(d, 1, rng), s));
  }
}

TEST(Properties, SolverNeverContradictsOracle) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 6 + rng() % 12;
    const Digraph d = random_digraph(n, 0.3 + 0.1 * (rng() % 6), rng());
    const SpecialSequence s(random_specials(n, 1 + rng() % 4, rng));
    const auto r = solve_ordered(d, s, SolverOptions{1, false, true});
    if (r.ok()) {
      EXPECT_TRUE(verify_ordered_cycle(d, s, r.segments));
      EXPECT_TRUE(exists_ordered_cycle(d, s)) << "trial " << trial;
    }
  }
}

TEST(Properties, LinkageSolverNeverContradictsOracle) {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 6 + rng() % 10;
    const Digraph d = random_digraph(n, 0.3 + 0.1 * (rng() % 6), rng());
    const auto v = random_specials(n, 4, rng);
    const LinkRequest req({{v[0], v[1]}, {v[2], v[3]}});
    const auto r = solve_linkage(d, req, SolverOptions{1, false, true});
    if (r.ok()) {
      EXPECT_TRUE(verify_linkage(d, req, r.paths));
      EXPECT_TRUE(exists_linkage(d, req));
    }
  }
}

TEST(Properties, GreedyNeverBeatsExact) {
  std::mt19937_64 rng(66);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 4 + rng() % 11;
    const Digraph d = random_digraph(n, 0.15 + 0.1 * (rng() % 7), rng());
    const auto uv = random_specials(n, 2, rng);
    const auto greedy = greedy_short_path_packing(d, uv[0], uv[1], kMaxSegmentLength);
    EXPECT_LE(greedy.size(), max_disjoint_short_paths(d, uv[0], uv[1], kMaxSegmentLength));
  }
}

TEST(Properties, SameSeedSameTrace) {
  const Digraph d1 = random_min_degree(300, 170, 9);
  const Digraph d2 = random_min_degree(300, 170, 9);
  EXPECT_EQ(d1.arcs(), d2.arcs());
  const SpecialSequence s({5, 77, 201});
  const auto a = solve_ordered(d1, s, SolverOptions{2, false, true});
  const auto b = solve_ordered(d2, s, SolverOptions{2, false, true});
  EXPECT_EQ(a.status, b.status);
  EXPECT_EQ(a.segments, b.segments);
  ASSERT_EQ(a.trace.size(), b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i) EXPECT_EQ(a.trace[i].rule, b.trace[i].rule);
}
