#include "orderlink/generators.hpp"

#include <numeric>
#include <random>
#include <string>

namespace orderlink {

namespace {

std::vector<VertexId> block(std::size_t begin, std::size_t count) {
  std::vector<VertexId> out(count);
  std::iota(out.begin(), out.end(), static_cast<VertexId>(begin));
  return out;
}

std::string named(char prefix, std::size_t index) { return prefix + std::to_string(index); }

void infeasible(const std::string& what, const std::string& detail) {
  throw GraphError(what + ": " + detail);
}

/// Two complete digraphs A = [0, a) and B = [a - shared, n) sharing `shared`
/// vertices. Roles: A-only, shared (X), B-only.
struct OverlappingCliques {
  std::size_t a_order;
  std::size_t shared;
  std::size_t n;

  std::size_t a_only_begin() const { return 0; }
  std::size_t shared_begin() const { return a_order - shared; }
  std::size_t b_only_begin() const { return a_order; }

  ExtremalWitness build() const {
    DigraphBuilder b(n);
    const auto a = block(0, a_order);
    const auto bb = block(a_order - shared, n - (a_order - shared));
    b.add_clique(a);
    b.add_clique(bb);
    ExtremalWitness w;
    w.digraph = std::move(b).build();
    w.roles.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
      if (v < shared_begin())
        w.roles[v].part = Part::A;
      else if (v < b_only_begin())
        w.roles[v].part = Part::X;
      else
        w.roles[v].part = Part::B;
    }
    return w;
  }
};

}  // namespace

const char* part_name(Part p) {
  switch (p) {
    case Part::A: return "A";
    case Part::B: return "B";
    case Part::X: return "X";
    case Part::S: return "S";
  }
  return "?";
}

Digraph complete_digraph(std::size_t n) {
  if (n == 0) throw GraphError("complete_digraph: n must be at least 1");
  DigraphBuilder b(n);
  const auto all = block(0, n);
  b.add_clique(all);
  return std::move(b).build();
}

ExtremalWitness extremal_linked(std::size_t ell, std::size_t n) {
  const std::string what = "extremal_linked(ell=" + std::to_string(ell) + ", n=" + std::to_string(n) + ")";
  if (ell < 2) infeasible(what, "requires ell >= 2");
  if (n < 2 * ell) infeasible(what, "requires n >= 2*ell");

  if (n % 2 == 0) {
    // Case 1: complete A, B of order n/2+ℓ−1 sharing 2ℓ−2 vertices.
    const std::size_t order = n / 2 + ell - 1;
    OverlappingCliques layout{order, 2 * ell - 2, n};
    ExtremalWitness w = layout.build();
    w.construction = "extremal-linked";
    w.case_label = "Case 1";
    std::vector<VertexId> xs, ys;
    for (std::size_t i = 0; i + 1 < ell; ++i) {
      xs.push_back(static_cast<VertexId>(layout.shared_begin() + i));
      ys.push_back(static_cast<VertexId>(layout.shared_begin() + ell - 1 + i));
    }
    xs.push_back(static_cast<VertexId>(layout.a_only_begin()));
    ys.push_back(static_cast<VertexId>(layout.b_only_begin()));
    for (std::size_t i = 0; i < ell; ++i) {
      w.pairs.push_back({xs[i], ys[i]});
      w.roles[xs[i]].name = named('x', i + 1);
      w.roles[ys[i]].name = named('y', i + 1);
    }
    w.special_sequence = xs;
    w.special_sequence.insert(w.special_sequence.end(), ys.begin(), ys.end());
    return w;
  }

  // Case 2: disjoint complete A, B of order ⌈n/2⌉−ℓ−1, complete X of order
  // 2ℓ−3 joined both ways to A∪B, and S = {x1, x2, y1, y2}.
  const std::size_t half = ceil_div(n, 2);
  if (half < ell + 2)
    infeasible(what, "Case 2 (n odd) needs ceil(n/2)-ell-1 >= 1, i.e. n >= 2*ell+3");
  const std::size_t side = half - ell - 1;
  const std::size_t x_order = 2 * ell - 3;
  const auto a = block(0, side);
  const auto bset = block(side, side);
  const auto x = block(2 * side, x_order);
  const VertexId x1 = static_cast<VertexId>(2 * side + x_order);
  const VertexId x2 = x1 + 1, y1 = x1 + 2, y2 = x1 + 3;
  const std::vector<VertexId> s{x1, x2, y1, y2};
  if (y2 + 1 != n) throw std::logic_error(what + ": component orders do not sum to n");

  DigraphBuilder b(n);
  b.add_clique(a);
  b.add_clique(bset);
  b.add_clique(x);
  b.add_all_arcs(x, a).add_all_arcs(a, x).add_all_arcs(x, bset).add_all_arcs(bset, x);
  b.add_all_arcs(s, x).add_all_arcs(x, s);
  for (VertexId u : s)
    for (VertexId v : s)
      if (u != v && !(u == x1 && v == y1) && !(u == x2 && v == y2)) b.add_arc(u, v);
  for (VertexId v : {x1, y1}) {
    b.add_all_arcs(bset, std::vector<VertexId>{v});
    b.add_all_arcs(std::vector<VertexId>{v}, a);
  }
  b.add_all_arcs(a, std::vector<VertexId>{x1});
  b.add_all_arcs(std::vector<VertexId>{y1}, bset);
  for (VertexId v : {x2, y2}) {
    b.add_all_arcs(a, std::vector<VertexId>{v});
    b.add_all_arcs(std::vector<VertexId>{v}, bset);
  }
  b.add_all_arcs(bset, std::vector<VertexId>{x2});
  b.add_all_arcs(std::vector<VertexId>{y2}, a);

  ExtremalWitness w;
  w.digraph = std::move(b).build();
  w.construction = "extremal-linked";
  w.case_label = "Case 2";
  w.roles.resize(n);
  for (VertexId v : a) w.roles[v].part = Part::A;
  for (VertexId v : bset) w.roles[v].part = Part::B;
  for (VertexId v : x) w.roles[v].part = Part::X;
  for (VertexId v : s) w.roles[v].part = Part::S;
  w.roles[x1].name = "x1";
  w.roles[x2].name = "x2";
  w.roles[y1].name = "y1";
  w.roles[y2].name = "y2";
  // X = {x, x3..xℓ, y3..yℓ}; the first X vertex stays unnamed.
  w.roles[x[0]].name = "x";
  std::vector<VertexId> xs{x1, x2}, ys{y1, y2};
  for (std::size_t i = 3; i <= ell; ++i) {
    const VertexId xi = x[i - 2];
    const VertexId yi = x[ell - 2 + i - 2];
    xs.push_back(xi);
    ys.push_back(yi);
    w.roles[xi].name = named('x', i);
    w.roles[yi].name = named('y', i);
  }
  for (std::size_t i = 0; i < ell; ++i) w.pairs.push_back({xs[i], ys[i]});
  w.special_sequence = xs;
  w.special_sequence.insert(w.special_sequence.end(), ys.begin(), ys.end());
  return w;
}

ExtremalWitness extremal_ordered(std::size_t k, std::size_t n) {
  const std::string what = "extremal_ordered(k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")";
  if (k < 2) infeasible(what, "requires k >= 2");
  if (n < 2 * k) infeasible(what, "requires n >= 2*k");

  // Places s_1, s_3, ... in A-only and s_2, s_4, ... in B-only.
  auto alternate = [&](ExtremalWitness& w, const OverlappingCliques& layout) {
    const std::size_t odd_count = (k + 1) / 2;
    const std::size_t even_count = k / 2;
    if (layout.shared_begin() < odd_count || n - layout.b_only_begin() < even_count)
      throw std::logic_error(what + ": not enough room for the special vertices");
    for (std::size_t i = 1; i <= k; ++i) {
      const VertexId v = (i % 2 == 1)
                             ? static_cast<VertexId>(layout.a_only_begin() + (i - 1) / 2)
                             : static_cast<VertexId>(layout.b_only_begin() + (i / 2 - 1));
      w.special_sequence.push_back(v);
      w.roles[v].name = named('s', i);
    }
  };

  if (k % 2 == 0) {
    // Case 2: |A| = ⌈n/2⌉+k/2−1, |B| = ⌊n/2⌋+k/2, sharing k−1 vertices.
    OverlappingCliques layout{ceil_div(n, 2) + k / 2 - 1, k - 1, n};
    ExtremalWitness w = layout.build();
    w.construction = "extremal-ordered";
    w.case_label = "Case 2";
    alternate(w, layout);
    return w;
  }

  if (n % 2 == 1) {
    // Case 3: |A| = |B| = (n+k)/2−1, sharing k−2 vertices.
    OverlappingCliques layout{(n + k) / 2 - 1, k - 2, n};
    ExtremalWitness w = layout.build();
    w.construction = "extremal-ordered";
    w.case_label = "Case 3";
    alternate(w, layout);
    return w;
  }

  // Case 1: disjoint complete A, B of order n/2−k+1, complete X of order k−2
  // joined both ways to A∪B and to every s_i.
  const std::size_t side = n / 2 - k + 1;
  const auto a = block(0, side);
  const auto bset = block(side, side);
  const auto x = block(2 * side, k - 2);
  const auto s = block(2 * side + k - 2, k);
  if (s.back() + 1 != n) throw std::logic_error(what + ": component orders do not sum to n");

  DigraphBuilder b(n);
  b.add_clique(a);
  b.add_clique(bset);
  b.add_clique(x);
  b.add_all_arcs(x, a).add_all_arcs(a, x).add_all_arcs(x, bset).add_all_arcs(bset, x);
  b.add_all_arcs(s, x).add_all_arcs(x, s);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (j != i && j != (i + 1) % k) b.add_arc(s[i], s[j]);
  b.add_arc(s[0], s[1]);

  auto one = [](VertexId v) { return std::vector<VertexId>{v}; };
  // s_1, s_2: both ways with B; s_1 -> A; A -> s_2.
  for (VertexId v : {s[0], s[1]}) b.add_all_arcs(bset, one(v)).add_all_arcs(one(v), bset);
  b.add_all_arcs(one(s[0]), a);
  b.add_all_arcs(a, one(s[1]));
  // s_3, s_5, ..., s_k both ways with A; s_4, ..., s_{k-1} both ways with B.
  for (std::size_t i = 3; i <= k; ++i) {
    const auto& side_set = (i % 2 == 1) ? a : bset;
    b.add_all_arcs(side_set, one(s[i - 1])).add_all_arcs(one(s[i - 1]), side_set);
  }

  ExtremalWitness w;
  w.digraph = std::move(b).build();
  w.construction = "extremal-ordered";
  w.case_label = "Case 1";
  w.roles.resize(n);
  for (VertexId v : a) w.roles[v].part = Part::A;
  for (VertexId v : bset) w.roles[v].part = Part::B;
  for (VertexId v : x) w.roles[v].part = Part::X;
  for (std::size_t i = 0; i < k; ++i) {
    w.roles[s[i]].part = Part::S;
    w.roles[s[i]].name = named('s', i + 1);
  }
  w.special_sequence = s;
  return w;
}

Digraph random_min_degree(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (n == 0) throw GraphError("random_min_degree: n must be at least 1");
  if (d + 1 > n)
    throw GraphError("random_min_degree: infeasible, d=" + std::to_string(d) + " exceeds n-1=" +
                     std::to_string(n - 1));
  std::mt19937_64 rng(seed);
  DigraphBuilder b(n);

  // Partial Fisher-Yates over a persistent pool; the owner is parked in the
  // last slot so it is never drawn.
  std::vector<VertexId> pool = block(0, n);
  std::vector<std::size_t> where(n);
  std::iota(where.begin(), where.end(), std::size_t{0});
  auto swap_slots = [&](std::size_t i, std::size_t j) {
    std::swap(pool[i], pool[j]);
    where[pool[i]] = i;
    where[pool[j]] = j;
  };
  for (VertexId u = 0; u < n; ++u) {
    swap_slots(where[u], n - 1);
    for (std::size_t i = 0; i < d; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, n - 2);
      swap_slots(i, pick(rng));
      b.add_arc(u, pool[i]);
    }
  }

  for (VertexId v = 0; v < n; ++v) {
    if (b.in_degree(v) >= d) continue;
    VertexSet blocked = b.in(v);
    blocked.set(v);
    auto candidates = blocked.complement().to_vector();
    const std::size_t need = d - b.in_degree(v);
    for (std::size_t i = 0; i < need; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, candidates.size() - 1);
      std::swap(candidates[i], candidates[pick(rng)]);
      b.add_arc(candidates[i], v);
    }
  }
  return std::move(b).build();
}

}  // namespace orderlink
