#include "orderlink/solver.hpp"

#include <algorithm>
#include <string>

#include "orderlink/generators.hpp"
#include "orderlink/oracle.hpp"

namespace orderlink {

namespace {

using Signed = long long;

[[noreturn]] void fail(std::string stage, std::string reason) {
  throw ProofStepFailure(Failure{std::move(stage), std::move(reason)});
}

std::string num(std::size_t v) { return std::to_string(v); }
std::string num(Signed v) { return std::to_string(v); }

VertexSet singleton(std::size_t n, VertexId v) {
  VertexSet s(n);
  if (v != kNoVertex) s.set(v);
  return s;
}

Path make_path(std::initializer_list<VertexId> vs) { return Path{std::vector<VertexId>(vs)}; }

SolveOutcome finish(const Digraph& d, const SpecialSequence& s, std::vector<Path> segments, SolveOutcome out) {
  if (auto verdict = verify_ordered_cycle(d, s, segments); !verdict)
    throw std::logic_error("solver produced an invalid ordered cycle: " + verdict.reason);
  out.status = SolveOutcome::Status::Success;
  out.cycle.clear();
  for (const Path& p : segments)
    out.cycle.insert(out.cycle.end(), p.vertices.begin(), p.vertices.end() - 1);
  out.segments = std::move(segments);
  out.failure.reset();
  return out;
}

SolveOutcome not_guaranteed(std::string stage, std::string reason) {
  SolveOutcome out;
  out.failure = Failure{std::move(stage), std::move(reason)};
  return out;
}

// Layered shortest u->v path through `avail` with 1 <= interior <= max_length-1,
// lexicographically smallest interior among the shortest.
std::optional<Path> shortest_short_path(const Digraph& d, VertexId u, VertexId v, const VertexSet& avail,
                                        std::size_t max_length) {
  if (max_length < 2) return std::nullopt;
  std::vector<VertexSet> layers;  // layers[t-1]: distance t to v inside avail
  VertexSet seen(d.order());
  VertexSet layer = d.in(v) & avail;
  for (std::size_t t = 1; t + 1 <= max_length && layer.any(); ++t) {
    seen |= layer;
    layers.push_back(layer);
    if (d.out(u).intersects(layer)) {
      Path p;
      p.vertices.push_back(u);
      VertexId cur = u;
      for (std::size_t i = layers.size(); i-- > 0;) {
        cur = d.out(cur).first_common(layers[i]);
        p.vertices.push_back(cur);
      }
      p.vertices.push_back(v);
      return p;
    }
    VertexSet next(d.order());
    const VertexSet open = avail - seen;
    for (VertexId y : layer) {
      next |= d.in(y) & open;
    }
    layer = std::move(next);
  }
  return std::nullopt;
}

// ---- rule machinery -------------------------------------------------------

struct RuleContext {
  AugmentState& st;
  const Partition& p;
  std::size_t k;
  std::size_t n;
  bool check;
};

void check_type_pairing(const TypeProfile& prof, const PathSystem& system, const SpecialSequence& s) {
  for (std::size_t j : system.indices()) {
    const std::size_t nx = s.succ(j);
    if (prof.out_a[j] && (!prof.in_b[nx] || prof.in_a[nx]))
      fail("type pairing", "s_" + num(j) + " has out-type A but s_" + num(nx) + " is not in-type B only");
    if (prof.out_b[j] && (!prof.in_a[nx] || prof.in_b[nx]))
      fail("type pairing", "s_" + num(j) + " has out-type B but s_" + num(nx) + " is not in-type A only");
  }
}

bool try_two_hop(RuleContext& c, std::size_t& changed) {
  const auto& d = c.st.d;
  const auto& s = c.st.s;
  for (std::size_t j : c.st.system.indices()) {
    for (const VertexSet* side : {&c.p.a, &c.p.b}) {
      const VertexSet to = d.in(s.next(j)) & *side;
      if (to.empty()) continue;
      for (VertexId u : d.out(s.at(j)) & *side) {
        const VertexId w = d.out(u).first_common(to);
        if (w == kNoVertex) continue;
        c.st.system.add(j, make_path({s.at(j), u, w, s.next(j)}));
        changed = j;
        return true;
      }
    }
  }
  return false;
}

bool try_back_arc_detour(RuleContext& c, const TypeProfile& prof, const Arc& back, std::size_t& changed) {
  const auto& d = c.st.d;
  const auto& s = c.st.s;
  const VertexId b_star = back.tail;
  const VertexId a_star = back.head;
  std::optional<std::string> first_problem;
  for (std::size_t i : c.st.system.indices()) {
    if (!prof.out_b[i]) continue;
    const VertexId a1 = (d.out(a_star) & c.p.a).first_common(d.in(s.next(i)));
    const VertexId b1 = (d.in(b_star) & c.p.b).first_common(d.out(s.at(i)));
    if (a1 == kNoVertex || b1 == kNoVertex) {
      if (!first_problem)
        first_problem = a1 == kNoVertex
                            ? "anchor reach: N⁺(a*) misses N⁻_A(s_" + num(s.succ(i)) + ") for a*=" + num(std::size_t{a_star})
                            : "anchor reach: N⁻(b*) misses N⁺_B(s_" + num(i) + ") for b*=" + num(std::size_t{b_star});
      continue;
    }
    c.st.system.add(i, make_path({s.at(i), b1, b_star, a_star, a1, s.next(i)}));
    changed = i;
    return true;
  }
  if (first_problem) fail("back-arc detour", *first_problem);
  return false;
}

void pair_swap(RuleContext& c, const TypeProfile& prof) {
  const auto& d = c.st.d;
  const auto& s = c.st.s;
  const auto& p = c.p;
  const std::size_t k0 = p.k0;
  auto& system = c.st.system;
  const std::size_t m = p.missing;

  VertexSet s_a(c.n), s_b(c.n);
  for (std::size_t i = 0; i < c.k; ++i) {
    const std::size_t from_a = d.in(s.at(i)).intersection_count(p.a);
    const std::size_t to_b = d.out(s.at(i)).intersection_count(p.b);
    if (from_a >= 1 && from_a < k0) s_a.set(s.at(i));
    if (to_b >= 1 && to_b < k0) s_b.set(s.at(i));
  }
  std::vector<VertexId> a_star, b_star;
  for (VertexId a : p.a)
    if (!d.out(a).intersects(s_a)) a_star.push_back(a);
  for (VertexId b : p.b)
    if (!d.in(b).intersects(s_b)) b_star.push_back(b);
  if (c.check && (a_star.size() <= 2 * k0 * c.k || b_star.size() <= 2 * k0 * c.k))
    fail("pair swap", "|A*|=" + num(a_star.size()) + ", |B*|=" + num(b_star.size()) + " not above 2k₀k=" +
                        num(2 * k0 * c.k));

  const std::vector<std::size_t> J = system.indices();
  const std::size_t draws = std::min({a_star.size(), b_star.size(), 2 * k0 * c.k + 1});

  auto check_pair = [&](VertexId a, VertexId b, const VertexSet& nab) {
    if (!c.check) return;
    if (nab.count() < c.k)
      fail("pair neighbourhood", "|N_ab|=" + num(nab.count()) + " < k for a=" + num(std::size_t{a}) + ", b=" +
                                 num(std::size_t{b}));
    if ((nab - p.specials).count() <= J.size())
      fail("pair neighbourhood outside S", "|N_ab∖S|=" + num((nab - p.specials).count()) + " <= |J|=" + num(J.size()));
  };

  if (J.empty()) {
    for (std::size_t q = 0; q < draws; ++q) {
      const VertexSet nab = d.out(a_star[q]) & d.in(b_star[q]);
      check_pair(a_star[q], b_star[q], nab);
      const VertexId y = nab.first_common_excluding(VertexSet::full(c.n), p.specials | p.x_prime);
      if (y == kNoVertex) continue;
      system.add(m, make_path({p.tail, a_star[q], y, b_star[q], p.head}));
      return;
    }
    fail("pair swap", "no pair in A*×B* has a common neighbour outside S");
  }

  std::vector<VertexSet> x2(c.k);
  for (std::size_t j : J) x2[j] = p.x_double_prime | system.interiors_of(j, c.n);
  std::vector<std::vector<std::size_t>> buckets(c.k);
  std::optional<std::size_t> chosen;
  for (std::size_t q = 0; q < draws && !chosen; ++q) {
    const VertexSet nab = d.out(a_star[q]) & d.in(b_star[q]);
    check_pair(a_star[q], b_star[q], nab);
    std::size_t best_j = J.front(), best = 0;
    for (std::size_t j : J) {
      const std::size_t hits = nab.intersection_count(x2[j]);
      if (hits > best) best = hits, best_j = j;
    }
    if (best < 2) {
      if (c.check)
        fail("pair swap", "N_ab meets no X″_j in two vertices for a=" + num(std::size_t{a_star[q]}) + ", b=" +
                            num(std::size_t{b_star[q]}));
      continue;
    }
    buckets[best_j].push_back(q);
    if (buckets[best_j].size() == 2 * k0 + 1) chosen = best_j;
  }
  if (!chosen)
    fail("pair swap", "drew " + num(draws) + " pairs without " + num(2 * k0 + 1) + " sharing an index");

  const std::size_t j = *chosen;
  const auto& bucket = buckets[j];
  if (c.check && !(prof.out_a[j] && prof.in_b[s.succ(j)]))
    fail("pair swap", "s_" + num(j) + " is not out-type A with s_" + num(s.succ(j)) + " in-type B");
  const VertexId a0 = a_star[bucket[0]];
  const VertexId b0 = b_star[bucket[0]];
  const VertexId a = (d.out(s.at(j)) & p.a).first_common_excluding(VertexSet::full(c.n), singleton(c.n, a0));
  const VertexId b = (d.in(s.next(j)) & p.b).first_common_excluding(VertexSet::full(c.n), singleton(c.n, b0));
  if (a == kNoVertex || b == kNoVertex) fail("pair swap", "no anchor a ≠ a₀ in N⁺_A(s_j) or b ≠ b₀ in N⁻_B(s_{j+1})");

  std::size_t a_hits = 0;
  std::optional<std::size_t> r;
  for (std::size_t t = 1; t < bucket.size(); ++t) {
    if (!d.has_arc(a, a_star[bucket[t]])) continue;
    ++a_hits;
    if (!r && d.has_arc(b_star[bucket[t]], b)) r = bucket[t];
  }
  if (c.check && a_hits < k0 + 1)
    fail("anchor reach", "a=" + num(std::size_t{a}) + " reaches only " + num(a_hits) + " of the " + num(2 * k0) +
                        " paired A-vertices");
  if (!r) fail("anchor reach", "no paired b_q with b_q→b among the out-neighbours of a");

  const VertexId aq = a_star[*r];
  const VertexId bq = b_star[*r];
  const VertexSet nq = d.out(aq) & d.in(bq) & x2[j];
  const VertexSet n0 = d.out(a0) & d.in(b0) & x2[j];
  VertexId x = nq.first();
  VertexId y = n0.first_common_excluding(VertexSet::full(c.n), singleton(c.n, x));
  if (y == kNoVertex) {
    y = n0.first();
    x = nq.first_common_excluding(VertexSet::full(c.n), singleton(c.n, y));
  }
  if (x == kNoVertex || y == kNoVertex) fail("pair swap", "no distinct connectors x, y in X″_" + num(j));

  system.replace(j, make_path({s.at(j), a, aq, x, bq, b, s.next(j)}));
  system.add(m, make_path({p.tail, a0, y, b0, p.head}));
}

Rule apply_rule(AugmentState& st, std::size_t m, std::size_t& changed) {
  const auto& d = st.d;
  const auto& s = st.s;
  const Partition p = build_partition(d, s, st.system, m, st.k0, st.options.check_bounds);
  RuleContext c{st, p, s.size(), d.order(), st.options.check_bounds};

  if (d.has_arc(p.tail, p.head)) {
    st.system.add(m, make_path({p.tail, p.head}));
    return Rule::DirectArc;
  }
  if (const VertexId x = p.a.first_common(p.b); x != kNoVertex) {
    st.system.add(m, make_path({p.tail, x, p.head}));
    return Rule::CommonNeighbor;
  }
  if (auto arc = find_arc_between(d, p.a, p.b)) {
    st.system.add(m, make_path({p.tail, arc->tail, arc->head, p.head}));
    return Rule::CrossArc;
  }
  if (try_two_hop(c, changed)) return Rule::TwoHopExtension;

  const TypeProfile prof = classify(d, p, s, c.check);
  if (c.check) check_type_pairing(prof, st.system, s);

  if (auto back = find_arc_between(d, p.b, p.a)) {
    if (try_back_arc_detour(c, prof, *back, changed)) return Rule::BackArcDetour;
    pair_swap(c, prof);
    return Rule::PairSwap;
  }

  const EndgameData e = endgame(d, s, p, prof, st.system, st.options);
  for (const auto& [j, path] : e.q) st.system.replace(j, path);
  st.system.add(m, e.q_k);
  return Rule::Endgame;
}

}  // namespace

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::DirectArc: return "direct-arc";
    case Rule::CommonNeighbor: return "common-neighbor";
    case Rule::CrossArc: return "cross-arc";
    case Rule::TwoHopExtension: return "two-hop-extension";
    case Rule::BackArcDetour: return "back-arc-detour";
    case Rule::PairSwap: return "pair-swap";
    case Rule::Endgame: return "endgame";
  }
  return "?";
}

bool StepRecord::progressed() const {
  if (reclassified) return true;
  return j_after > j_before || (j_after == j_before && t_after > t_before);
}

std::size_t required_min_degree(std::size_t n, std::size_t k) {
  if (k == 0) throw ContractViolation("required_min_degree: k must be positive");
  auto minus_one = [](std::size_t v) { return v == 0 ? 0 : v - 1; };
  if (k == 1) return minus_one(ceil_div(n, 2));
  if (k == 2) return ceil_div(n, 2);
  return minus_one(ceil_div(n + k, 2));
}

std::size_t required_order(std::size_t k) { return k >= 3 ? 200 * k * k * k : 0; }

bool hypothesis_holds(std::size_t n, std::size_t k, std::size_t delta) {
  return n >= required_order(k) && delta >= required_min_degree(n, k);
}

std::size_t default_type_threshold(std::size_t k) { return 30 * k * k; }

// ---- short cycles ---------------------------------------------------------

SolveOutcome solve_k1(const Digraph& d, VertexId s1) {
  const SpecialSequence s({s1});
  s.validate_against(d);
  auto found = [&](std::initializer_list<VertexId> vs) { return finish(d, s, {make_path(vs)}, {}); };
  if (const VertexId x = d.out(s1).first_common(d.in(s1)); x != kNoVertex) return found({s1, x, s1});
  for (VertexId a : d.out(s1))
    if (const VertexId b = d.out(a).first_common(d.in(s1)); b != kNoVertex) return found({s1, a, b, s1});
  for (VertexId a : d.out(s1)) {
    const VertexSet back = d.in(s1) - singleton(d.order(), a);
    for (VertexId x : d.out(a)) {
      if (x == s1) continue;
      if (const VertexId b = d.out(x).first_common(back); b != kNoVertex) return found({s1, a, x, b, s1});
    }
  }
  return not_guaranteed("k=1 search", "no cycle of length at most 4 through s1");
}

SolveOutcome solve_k2(const Digraph& d, VertexId s1, VertexId s2) {
  const SpecialSequence s({s1, s2});
  s.validate_against(d);
  const std::size_t n = d.order();
  auto found = [&](Path p, Path q) { return finish(d, s, {std::move(p), std::move(q)}, {}); };

  const bool fwd = d.has_arc(s1, s2);
  const bool bwd = d.has_arc(s2, s1);
  const VertexSet mid_f = d.out(s1) & d.in(s2);
  const VertexSet mid_b = d.out(s2) & d.in(s1);

  if (fwd && bwd) return found(make_path({s1, s2}), make_path({s2, s1}));
  if (fwd && mid_b.any()) return found(make_path({s1, s2}), make_path({s2, mid_b.first(), s1}));
  if (bwd && mid_f.any()) return found(make_path({s1, mid_f.first(), s2}), make_path({s2, s1}));
  if (mid_f.any() && mid_b.any()) {
    VertexId x = mid_f.first();
    VertexId y = mid_b.first_common_excluding(VertexSet::full(n), singleton(n, x));
    if (y == kNoVertex) {
      y = mid_b.first();
      x = mid_f.first_common_excluding(VertexSet::full(n), singleton(n, y));
    }
    if (x != kNoVertex && y != kNoVertex)
      return found(make_path({s1, x, s2}), make_path({s2, y, s1}));
  }
  const VertexSet ends = singleton(n, s1) | singleton(n, s2);
  if (fwd) {
    for (VertexId y : d.out(s2) - ends)
      if (const VertexId z = d.out(y).first_common_excluding(d.in(s1), ends); z != kNoVertex)
        return found(make_path({s1, s2}), make_path({s2, y, z, s1}));
  }
  if (bwd) {
    for (VertexId x : d.out(s1) - ends)
      if (const VertexId z = d.out(x).first_common_excluding(d.in(s2), ends); z != kNoVertex)
        return found(make_path({s1, x, z, s2}), make_path({s2, s1}));
  }
  return not_guaranteed("k=2 search", "no cycle of length at most 4 through s1 then s2");
}

// ---- packing and completion ----------------------------------------------

std::vector<Path> greedy_short_path_packing(const Digraph& d, VertexId u, VertexId v, std::size_t max_length,
                                            std::size_t limit, const VertexSet* blocked) {
  if (u >= d.order() || v >= d.order() || u == v)
    throw ContractViolation("greedy_short_path_packing: endpoints must be distinct vertices");
  std::vector<Path> paths;
  if (limit == 0 || max_length == 0) return paths;
  if (d.has_arc(u, v)) paths.push_back(make_path({u, v}));
  VertexSet avail = d.all_vertices();
  avail.reset(u);
  avail.reset(v);
  if (blocked) avail -= *blocked;
  while (paths.size() < limit) {
    auto p = shortest_short_path(d, u, v, avail, max_length);
    if (!p) break;
    for (VertexId w : p->interior()) avail.reset(w);
    paths.push_back(std::move(*p));
  }
  return paths;
}

std::vector<std::size_t> EasyIndices::hard_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < hard.size(); ++i)
    if (hard[i]) out.push_back(i);
  return out;
}

EasyIndices easy_indices(const Digraph& d, const SpecialSequence& s) {
  const std::size_t k = s.size();
  if (k < 2) throw ContractViolation("easy_indices: needs at least two special vertices");
  s.validate_against(d);
  const std::size_t need = 6 * k;
  EasyIndices out;
  out.hard.assign(k, true);
  out.certificates.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    auto family = greedy_short_path_packing(d, s.at(i), s.next(i), kMaxSegmentLength, need);
    if (family.size() >= need) {
      out.hard[i] = false;
      out.certificates[i] = std::move(family);
    }
  }
  return out;
}

std::vector<Path> complete_system(const Digraph& d, const SpecialSequence& s, const PathSystem& partial,
                                  const EasyIndices& easy) {
  const std::size_t k = s.size();
  if (partial.k() != k || easy.hard.size() != k) throw ContractViolation("complete_system: size mismatch");
  std::vector<Path> out(k);
  VertexSet used = s.as_set(d.order());
  for (std::size_t j = 0; j < k; ++j) {
    if (easy.hard[j] != partial.contains(j))
      throw ContractViolation("complete_system: index " + num(j) +
                              (easy.hard[j] ? " is hard but uncovered" : " is easy but carries a family"));
    if (!easy.hard[j]) continue;
    out[j] = partial.family(j).front();
    for (VertexId v : out[j].interior()) used.set(v);
  }
  for (std::size_t j = 0; j < k; ++j) {
    if (easy.hard[j]) continue;
    const auto& cert = easy.certificates[j];
    auto it = std::find_if(cert.begin(), cert.end(), [&](const Path& p) {
      return std::none_of(p.interior().begin(), p.interior().end(), [&](VertexId v) { return used.test(v); });
    });
    if (it == cert.end()) throw std::logic_error("complete_system: certificate of index " + num(j) + " exhausted");
    out[j] = *it;
    for (VertexId v : out[j].interior()) used.set(v);
  }
  return out;
}

// ---- partition, types, endgame -------------------------------------------

Partition build_partition(const Digraph& d, const SpecialSequence& s, const PathSystem& system,
                          std::size_t missing, std::size_t k0, bool check_bounds) {
  const std::size_t n = d.order();
  const std::size_t k = s.size();
  if (missing >= k) throw ContractViolation("build_partition: missing index out of range");
  if (system.contains(missing)) throw ContractViolation("build_partition: missing index already covered");
  Partition p;
  p.missing = missing;
  p.k0 = k0;
  p.tail = s.at(missing);
  p.head = s.next(missing);
  p.specials = s.as_set(n);
  p.x_prime = system.interiors(n);
  const VertexSet blocked = p.specials | p.x_prime;
  if (check_bounds && blocked.count() >= 30 * k * k)
    fail("partition", "|S∪X′|=" + num(blocked.count()) + " not below 30k²=" + num(30 * k * k));
  p.a = d.out(p.tail) - blocked;
  p.b = d.in(p.head) - blocked;
  p.x_double_prime = VertexSet::full(n) - (p.a | p.b | blocked);
  return p;
}

TypeProfile classify(const Digraph& d, const Partition& p, const SpecialSequence& s, bool check_bounds) {
  if (p.a.intersects(p.b)) throw ContractViolation("classify: A and B overlap");
  const std::size_t k = s.size();
  const std::size_t n = d.order();
  const std::size_t k0 = p.k0;
  TypeProfile t;
  for (auto* v : {&t.out_a, &t.out_b, &t.in_a, &t.in_b, &t.sends_a, &t.receives_a, &t.sends_b, &t.receives_b})
    v->assign(k, false);
  for (std::size_t i = 0; i < k; ++i) {
    const VertexId v = s.at(i);
    const std::size_t oa = d.out(v).intersection_count(p.a);
    const std::size_t ob = d.out(v).intersection_count(p.b);
    const std::size_t ia = d.in(v).intersection_count(p.a);
    const std::size_t ib = d.in(v).intersection_count(p.b);
    t.out_a[i] = oa >= k0;
    t.out_b[i] = ob >= k0;
    t.in_a[i] = ia >= k0;
    t.in_b[i] = ib >= k0;
    t.sends_a[i] = oa > 0;
    t.sends_b[i] = ob > 0;
    t.receives_a[i] = ia > 0;
    t.receives_b[i] = ib > 0;
    t.q_out_a += t.sends_a[i];
    t.q_out_b += t.sends_b[i];
    t.q_in_a += t.receives_a[i];
    t.q_in_b += t.receives_b[i];
    if (t.out_b[i]) t.out_type_b.push_back(i);
  }
  if (!check_bounds) return t;

  const std::size_t a_size = p.a.count(), b_size = p.b.count();
  if (2 * a_size + 2 * k0 < n || 2 * b_size + 2 * k0 < n)
    fail("partition size", "|A|=" + num(a_size) + ", |B|=" + num(b_size) + " below n/2−k₀ for n=" + num(n) +
                               ", k₀=" + num(k0));
  if (p.y().count() > 3 * k0) fail("partition", "|Y|=" + num(p.y().count()) + " exceeds 3k₀=" + num(3 * k0));
  const std::size_t m = p.missing, h = s.succ(m);
  if (!t.out_a[m] || t.out_b[m]) fail("classify", "s_" + num(m) + " must have out-type A and not out-type B");
  if (!t.in_b[h] || t.in_a[h]) fail("classify", "s_" + num(h) + " must have in-type B and not in-type A");
  for (std::size_t i = 0; i < k; ++i) {
    if (!t.out_a[i] && !t.out_b[i]) fail("classify", "s_" + num(i) + " has no out-type");
    if (!t.in_a[i] && !t.in_b[i]) fail("classify", "s_" + num(i) + " has no in-type");
  }
  return t;
}

EndgameData endgame(const Digraph& d, const SpecialSequence& s, const Partition& p, const TypeProfile& prof,
                    const PathSystem& system, const SolverOptions& options) {
  if (p.a.intersects(p.b)) throw ContractViolation("endgame: A and B overlap");
  if (find_arc_between(d, p.a, p.b) || find_arc_between(d, p.b, p.a))
    throw ContractViolation("endgame: an arc joins A and B");
  const bool check = options.check_bounds;
  const std::size_t n = d.order();
  const std::size_t k = s.size();
  const auto K = static_cast<Signed>(k);
  const std::vector<std::size_t> J = system.indices();

  EndgameData e;
  e.rotation = p.missing;

  if (check) {
    for (std::size_t j : J) {
      const std::size_t nx = s.succ(j);
      if (prof.sends_a[j] && prof.in_a[nx]) fail("endgame types", "s_" + num(j) + " ∈ S⁺_A but s_" + num(nx) + " has in-type A");
      if (prof.sends_b[j] && prof.in_b[nx]) fail("endgame types", "s_" + num(j) + " ∈ S⁺_B but s_" + num(nx) + " has in-type B");
      if (prof.receives_a[nx] && prof.out_a[j])
        fail("endgame types", "s_" + num(nx) + " ∈ S⁻_A but s_" + num(j) + " has out-type A");
      if (prof.receives_b[nx] && prof.out_b[j])
        fail("endgame types", "s_" + num(nx) + " ∈ S⁻_B but s_" + num(j) + " has out-type B");
    }
  }

  for (std::size_t j : J) {
    const std::size_t nx = s.succ(j);
    if (prof.out_a[j] && prof.in_b[nx])
      e.j_ab.push_back(j);
    else if (prof.out_b[j] && prof.in_a[nx])
      e.j_ba.push_back(j);
    else
      fail("type pairing", "index " + num(j) + " fits neither J_AB nor J_BA");
  }
  const auto j_ab = static_cast<Signed>(e.j_ab.size());
  const auto j_ba = static_cast<Signed>(e.j_ba.size());
  const auto qa_in = static_cast<Signed>(prof.q_in_a), qa_out = static_cast<Signed>(prof.q_out_a);
  const auto qb_in = static_cast<Signed>(prof.q_in_b), qb_out = static_cast<Signed>(prof.q_out_b);
  const Signed rhs7 = 2 * K - qa_in - qb_out;
  const Signed rhs8 = 2 * K - qa_out - qb_in;
  if (check) {
    if (2 * j_ab > 2 * K - 2 - qa_in - qb_out)
      fail("endgame index count", "j_AB=" + num(j_ab) + " exceeds k−1−(q⁻_A+q⁺_B)/2 with q⁻_A=" + num(qa_in) +
                                 ", q⁺_B=" + num(qb_out));
    if (2 * j_ba > 2 * K - qa_out - qb_in)
      fail("endgame index count", "j_BA=" + num(j_ba) + " exceeds k−(q⁺_A+q⁻_B)/2 with q⁺_A=" + num(qa_out) +
                                  ", q⁻_B=" + num(qb_in));
  }

  VertexSet taken(n);
  auto pick = [&](const VertexSet& pool, const char* what, std::size_t j) {
    const VertexId v = pool.first_common_excluding(VertexSet::full(n), taken);
    if (v == kNoVertex) fail("endgame", std::string("no free anchor ") + what + " for index " + num(j));
    taken.set(v);
    return v;
  };
  for (std::size_t j : e.j_ab) {
    EndgameData::Anchor an{j};
    an.a = pick(d.out(s.at(j)) & p.a, "a_j", j);
    an.b = pick(d.in(s.next(j)) & p.b, "b_j", j);
    e.anchors_ab.push_back(an);
  }
  for (std::size_t j : e.j_ba) {
    EndgameData::Anchor an{j};
    an.a = pick(d.in(s.next(j)) & p.a, "a′_j", j);
    an.b = pick(d.out(s.at(j)) & p.b, "b′_j", j);
    e.anchors_ba.push_back(an);
  }
  e.a0 = pick(p.a, "a₀", p.missing);
  e.b0 = pick(p.b, "b₀", p.missing);

  if (check) {
    const std::size_t bound = required_min_degree(n, std::max<std::size_t>(k, 3));
    auto degrees = [&](VertexId a, VertexId b) {
      if (d.out_degree(a) < bound) fail("anchor out-degree", "d⁺(" + num(std::size_t{a}) + ") below ⌈(n+k)/2⌉−1");
      if (d.in_degree(b) < bound) fail("anchor in-degree", "d⁻(" + num(std::size_t{b}) + ") below ⌈(n+k)/2⌉−1");
    };
    degrees(e.a0, e.b0);
    for (const auto& an : e.anchors_ab) degrees(an.a, an.b);
  }

  const VertexSet x_all = p.x();
  VertexSet used_x(n);
  Signed picked = 0;
  auto connect = [&](const VertexSet& pool, Signed rhs, const char* ineq, std::size_t j) {
    if (check) {
      if (static_cast<Signed>(pool.count()) < rhs)
        fail(ineq, "common X-neighbourhood of size " + num(pool.count()) + " below " + num(rhs) + " for index " +
                       num(j));
      if (rhs <= picked)
        fail(ineq, "slack " + num(rhs) + " does not exceed the " + num(picked) + " connectors already used");
    }
    const VertexId x = pool.first_common_excluding(VertexSet::full(n), used_x);
    if (x == kNoVertex) fail(ineq, "no free connector in X for index " + num(j));
    used_x.set(x);
    ++picked;
    return x;
  };

  if (check && rhs7 < 2) fail("connector supply", "right-hand side " + num(rhs7) + " below 2");
  e.x0 = connect(d.out(e.a0) & d.in(e.b0) & x_all, rhs7, "connector supply", p.missing);
  auto connect_ab = [&] {
    for (auto& an : e.anchors_ab) an.x = connect(d.out(an.a) & d.in(an.b) & x_all, rhs7, "connector supply", an.j);
  };
  auto connect_ba = [&] {
    for (auto& an : e.anchors_ba) an.x = connect(d.in(an.a) & d.out(an.b) & x_all, rhs8, "connector supply", an.j);
  };
  if (j_ba <= j_ab) {
    connect_ba();
    connect_ab();
  } else {
    connect_ab();
    connect_ba();
  }

  for (const auto& an : e.anchors_ab) e.q.emplace_back(an.j, make_path({s.at(an.j), an.a, an.x, an.b, s.next(an.j)}));
  for (const auto& an : e.anchors_ba) e.q.emplace_back(an.j, make_path({s.at(an.j), an.b, an.x, an.a, s.next(an.j)}));
  std::sort(e.q.begin(), e.q.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  e.q_k = make_path({p.tail, e.a0, e.x0, e.b0, p.head});
  return e;
}

// ---- augmentation loop ----------------------------------------------------

AugmentState::AugmentState(const Digraph& graph, SpecialSequence seq, SolverOptions opts)
    : d(graph),
      s(std::move(seq)),
      options(opts),
      k0(opts.type_threshold.value_or(default_type_threshold(s.size()))),
      easy(easy_indices(graph, s)),
      system(s.size()) {
  if (k0 == 0) throw ContractViolation("type threshold must be positive");
}

StepResult augment(AugmentState& st) {
  const std::size_t k = st.s.size();
  std::optional<std::size_t> missing;
  for (std::size_t j = 0; j < k && !missing; ++j)
    if (st.easy.hard[j] && !st.system.contains(j)) missing = j;
  if (!missing) return {};

  StepRecord rec;
  rec.missing = rec.changed = *missing;
  rec.j_before = st.system.index_count();
  rec.t_before = st.system.total_paths();
  try {
    rec.rule = apply_rule(st, *missing, rec.changed);
  } catch (const ProofStepFailure& f) {
    return {StepResult::Kind::Failed, std::nullopt, f.failure()};
  }
  for (std::size_t j = 0; j < k; ++j) {
    if (st.system.multiplicity(j) < 6 * k) continue;
    st.easy.certificates[j] = st.system.take(j);
    st.easy.hard[j] = false;
    rec.reclassified = j;
  }
  rec.j_after = st.system.index_count();
  rec.t_after = st.system.total_paths();
  return {StepResult::Kind::Improved, rec, std::nullopt};
}

SolveOutcome solve_ordered(const Digraph& d, const SpecialSequence& s, const SolverOptions& options) {
  s.validate_against(d);
  const std::size_t k = s.size();
  if (k == 1) return solve_k1(d, s.at(0));
  if (k == 2) return solve_k2(d, s.at(0), s.at(1));

  AugmentState st(d, s, options);
  SolveOutcome out;
  out.k0 = st.k0;
  out.initial_hard = st.easy.hard_indices();
  const std::size_t step_cap = (k + 1) * (6 * k * k + 1) + k + 1;
  for (;;) {
    StepResult r = augment(st);
    if (r.kind == StepResult::Kind::Done) break;
    if (r.kind == StepResult::Kind::Failed) {
      out.failure = std::move(r.failure);
      return out;
    }
    ++out.augmentations;
    if (!r.record->progressed()) throw std::logic_error("augmentation step made no progress");
    if (options.record_trace) out.trace.push_back(*r.record);
    if (auto defect = system_defect(d, s, st.system, 6 * k - 1))
      throw std::logic_error("path system invariant broken after " + std::string(rule_name(r.record->rule)) + ": " +
                             *defect);
    if (out.augmentations > step_cap) throw std::logic_error("augmentation loop exceeded its step bound");
  }
  auto segments = complete_system(d, s, st.system, st.easy);
  return finish(d, s, std::move(segments), std::move(out));
}

LinkOutcome solve_linkage(const Digraph& d, const LinkRequest& request, const SolverOptions& options) {
  request.validate_against(d);
  LinkOutcome out;
  out.ordered = solve_ordered(d, request.interleaved(), options);
  if (!out.ordered.ok()) {
    out.failure = out.ordered.failure;
    return out;
  }
  for (std::size_t i = 0; i < out.ordered.segments.size(); i += 2) out.paths.push_back(out.ordered.segments[i]);
  if (auto verdict = verify_linkage(d, request, out.paths); !verdict)
    throw std::logic_error("linkage extraction produced invalid paths: " + verdict.reason);
  out.status = SolveOutcome::Status::Success;
  return out;
}

}  // namespace orderlink
