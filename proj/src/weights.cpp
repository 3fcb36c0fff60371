#include "kmroots/weights.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "kmroots/error.hpp"

namespace kmroots {

IndexSet integral_nodes(const std::vector<Rat>& anchor) {
  IndexSet s;
  for (std::size_t i = 0; i < anchor.size(); ++i)
    if (anchor[i] >= 0 && denominator(anchor[i]) == 1) s.insert(static_cast<int>(i));
  return s;
}

IndexSet nonnegative_nodes(const std::vector<Rat>& anchor) {
  IndexSet s;
  for (std::size_t i = 0; i < anchor.size(); ++i)
    if (anchor[i] >= 0) s.insert(static_cast<int>(i));
  return s;
}

namespace {

void check_integrability(const Gcm& gcm, const std::vector<Rat>& anchor, const IndexSet& J) {
  require(static_cast<int>(anchor.size()) == gcm.rank(), "BadAnchor",
          "anchor size must match the rank");
  require(J.subset_of(integral_nodes(anchor)), "IntegralityViolation",
          "J must consist of nodes with nonnegative integral pairing");
}

// Dominance walk over J. The weight set is J-reflection stable and sits in
// lambda - Z>=0 Pi, so a coordinate dropping below zero certifies
// non-membership; otherwise the total depth over J strictly decreases and
// the walk stops at the J-dominant representative.
bool dominance_member(const Gcm& gcm, const std::vector<Rat>& anchor, const IndexSet& J,
                      Depth depth) {
  for (int x : depth)
    if (x < 0) return false;
  for (;;) {
    int neg = -1;
    long long p = 0;
    for (int j : J.indices()) {
      Rat pr = weight_pairing(gcm, anchor, depth, j);
      if (pr < 0) {
        neg = j;
        p = static_cast<long long>(numerator(pr));
        break;
      }
    }
    if (neg < 0) return true;
    depth[neg] += static_cast<int>(p);
    if (depth[neg] < 0) return false;
  }
}

void enumerate_depths(int rank, int budget, const IndexSet& support,
                      const std::function<void(const Depth&)>& fn) {
  Depth d(rank, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == rank) {
      fn(d);
      return;
    }
    if (!support.contains(i)) {
      d[i] = 0;
      rec(i + 1, left);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      d[i] = v;
      rec(i + 1, left - v);
    }
    d[i] = 0;
  };
  rec(0, budget);
}

int total(const Depth& d) {
  int s = 0;
  for (int x : d) s += x;
  return s;
}

// Closure of the seed depths under adding generator vectors, within the
// total-depth budget. Dynamic programming over the depth lattice.
std::set<Depth> minkowski_closure(const std::set<Depth>& seeds,
                                  const std::vector<RootVec>& generators, int D) {
  std::set<Depth> out;
  std::deque<Depth> queue;
  for (const Depth& s : seeds)
    if (total(s) <= D && out.insert(s).second) queue.push_back(s);
  while (!queue.empty()) {
    Depth d = queue.front();
    queue.pop_front();
    for (const RootVec& g : generators) {
      if (total(d) + g.height() > D) continue;
      Depth nd = d;
      for (std::size_t i = 0; i < nd.size(); ++i) nd[i] += g[static_cast<int>(i)];
      if (out.insert(nd).second) queue.push_back(nd);
    }
  }
  return out;
}

}  // namespace

bool integrable_weight_member(const Gcm& gcm, const IndexSet& J, const std::vector<Rat>& anchor,
                              const Depth& depth) {
  check_integrability(gcm, anchor, J);
  require(Depth(depth).size() == static_cast<std::size_t>(gcm.rank()), "BadAnchor",
          "depth size must match the rank");
  for (int i = 0; i < gcm.rank(); ++i)
    require(J.contains(i) || depth[i] == 0, "SupportViolation", "depth must be supported on J");
  return dominance_member(gcm, anchor, J, depth);
}

bool parabolic_verma_member(const Gcm& gcm, const std::vector<Rat>& anchor, const IndexSet& J,
                            const Depth& depth) {
  check_integrability(gcm, anchor, J);
  // The complement part of the depth never moves under J-reflections, so
  // the unsplit pairing realises the shifted-anchor test directly.
  return dominance_member(gcm, anchor, J, depth);
}

WeightSet wt_slice(const Gcm& gcm, const std::vector<Rat>& anchor, const IndexSet& J, int D) {
  check_integrability(gcm, anchor, J);
  require(D >= 0, "BadBound", "depth bound must be nonnegative");
  WeightSet out{anchor, J, D, WtFormula::Slice, {}};
  enumerate_depths(gcm.rank(), D, IndexSet::full(gcm.rank()), [&](const Depth& d) {
    if (dominance_member(gcm, anchor, J, d)) out.members.insert(d);
  });
  return out;
}

namespace {

std::set<Depth> integrable_part(const Gcm& gcm, const std::vector<Rat>& anchor, const IndexSet& J,
                                int D) {
  std::set<Depth> seeds;
  enumerate_depths(gcm.rank(), D, J, [&](const Depth& d) {
    if (dominance_member(gcm, anchor, J, d)) seeds.insert(d);
  });
  return seeds;
}

}  // namespace

WeightSet wt_minkowski(const Gcm& gcm, const RootDatabase& db, const std::vector<Rat>& anchor,
                       const IndexSet& J, int D) {
  check_integrability(gcm, anchor, J);
  require(db.height_bound >= D, "BoundTooSmall", "database window must cover the depth bound");
  std::vector<RootVec> gens;
  for (const auto& [v, cls] : db.positive) {
    (void)cls;
    if (!v.supp().subset_of(J) && v.height() <= D) gens.push_back(v);
  }
  WeightSet out{anchor, J, D, WtFormula::Minkowski, {}};
  out.members = minkowski_closure(integrable_part(gcm, anchor, J, D), gens, D);
  return out;
}

WeightSet wt_minimal(const Gcm& gcm, const RootDatabase& db, const std::vector<Rat>& anchor,
                     const IndexSet& J, int D) {
  check_integrability(gcm, anchor, J);
  require(db.height_bound >= D, "BoundTooSmall", "database window must cover the depth bound");
  std::vector<RootVec> gens;
  for (const RootVec& v : slice_heights(db, J.complement(gcm.rank()), 1))
    if (v.height() <= D) gens.push_back(v);
  WeightSet out{anchor, J, D, WtFormula::Minimal, {}};
  out.members = minkowski_closure(integrable_part(gcm, anchor, J, D), gens, D);
  return out;
}

WeightSet wt_simple(const Gcm& gcm, const RootDatabase& db, const std::vector<Rat>& anchor,
                    int D) {
  (void)db;
  return wt_slice(gcm, anchor, integral_nodes(anchor), D);
}

WeightReductionReport weight_reduction_check(const Gcm& gcm, const RootDatabase& db,
                                             const std::vector<Rat>& anchor,
                                             const IndexSet& Jprime, const IndexSet& J, int D) {
  WeightReductionReport rep;
  WeightSet wtv = wt_slice(gcm, anchor, Jprime, D);
  IndexSet Jlam = integral_nodes(anchor);

  auto reduce_over = [&](const IndexSet& K) {
    std::set<Depth> part;
    for (const Depth& d : wtv.members)
      if (IndexSet(RootVec{std::vector<int>(d)}.supp()).subset_of(K)) part.insert(d);
    std::vector<RootVec> gens;
    for (const RootVec& v : slice_heights(db, K.complement(gcm.rank()), 1))
      if (v.height() <= D) gens.push_back(v);
    return minkowski_closure(part, gens, D);
  };

  auto diff_sets = [](const std::set<Depth>& a, const std::set<Depth>& b) {
    std::vector<Depth> diff;
    for (const Depth& d : a)
      if (!b.count(d)) diff.push_back(d);
    for (const Depth& d : b)
      if (!a.count(d)) diff.push_back(d);
    return diff;
  };

  rep.base_diff = diff_sets(wtv.members, reduce_over(Jlam));
  rep.base_identity_holds = rep.base_diff.empty();

  // Containment hypothesis: the J-part minus the simple cone over the
  // complement stays inside the weight set.
  rep.lhs_containment_holds = true;
  IndexSet Jc = J.complement(gcm.rank());
  for (const Depth& d : wtv.members) {
    if (!RootVec{std::vector<int>(d)}.supp().subset_of(J)) continue;
    bool ok = true;
    enumerate_depths(gcm.rank(), D - total(d), Jc, [&](const Depth& xi) {
      Depth sum = d;
      for (int i = 0; i < gcm.rank(); ++i) sum[i] += xi[i];
      if (!wtv.members.count(sum)) ok = false;
    });
    if (!ok) {
      rep.lhs_containment_holds = false;
      break;
    }
  }
  if (rep.lhs_containment_holds) {
    rep.conditional_checked = true;
    rep.conditional_diff = diff_sets(wtv.members, reduce_over(J));
    rep.conditional_identity_holds = rep.conditional_diff.empty();
  }
  return rep;
}

namespace {

WeightChain assemble_weight_chain(const Depth& start, std::vector<RootVec> increments) {
  WeightChain ch;
  ch.start = start;
  ch.elements.push_back(start);
  Depth cur = start;
  for (RootVec& g : increments) {
    for (std::size_t i = 0; i < cur.size(); ++i) cur[i] -= g[static_cast<int>(i)];
    ch.elements.push_back(cur);
    ch.increments.push_back(std::move(g));
  }
  return ch;
}

}  // namespace

WeightChain weight_chain(const Gcm& gcm, const std::vector<Rat>& anchor, const IndexSet& J,
                         const Depth& from, const Depth& to) {
  const int n = gcm.rank();
  RootVec df{std::vector<int>(from)}, dt{std::vector<int>(to)};
  require(strictly_dominates(df, dt), "NotComparable", "chain needs from strictly below to");
  require(parabolic_verma_member(gcm, anchor, J, from), "NotAWeight", "start is not a weight");
  require(parabolic_verma_member(gcm, anchor, J, to), "NotAWeight", "end is not a weight");

  Depth bottom = from, top = to;
  std::vector<RootVec> upper_rev, lower;
  while (bottom != top) {
    bool advanced = false;
    for (int j = 0; j < n && !advanced; ++j) {
      if (bottom[j] <= top[j]) continue;
      Depth ct = top;
      ++ct[j];  // one simple root below the running top
      if (ct[j] <= bottom[j] && parabolic_verma_member(gcm, anchor, J, ct)) {
        upper_rev.push_back(RootVec::simple(n, j));
        top = ct;
        advanced = true;
        break;
      }
      Depth cb = bottom;
      --cb[j];
      if (cb[j] >= top[j] && parabolic_verma_member(gcm, anchor, J, cb)) {
        lower.push_back(RootVec::simple(n, j));
        bottom = cb;
        advanced = true;
      }
    }
    require(advanced, "Internal", "weight chain search stalled");
  }
  std::vector<RootVec> incs = std::move(lower);
  incs.insert(incs.end(), upper_rev.rbegin(), upper_rev.rend());
  return assemble_weight_chain(from, std::move(incs));
}

WeightChain height_one_weight_chain(const Gcm& gcm, const RootDatabase& db,
                                    const std::vector<Rat>& anchor, const IndexSet& J,
                                    const IndexSet& I, const Depth& mu, ChainDirection dir) {
  require(!I.empty(), "EmptySubset", "I must be nonempty");
  require(parabolic_verma_member(gcm, anchor, J, mu), "NotAWeight", "mu is not a weight");
  RootVec diff{std::vector<int>(mu)};
  int n = diff.height_on(I);
  require(n > 0, "BadBound", "mu must sit strictly below lambda in I-height");
  require(db.height_bound >= diff.height(), "OutOfWindow", "database window too small");

  std::vector<RootVec> slice;
  for (const RootVec& g : slice_heights(db, I, 1))
    if (dominates(diff, g)) slice.push_back(g);

  std::vector<RootVec> steps;
  if (dir == ChainDirection::Up) {
    // Ascend from mu; every element must remain a weight (hence below
    // lambda), and after n steps the I-height of the depth reaches zero.
    auto dfs = [&](auto&& self, const Depth& d, int left) -> bool {
      if (left == 0) return true;
      for (const RootVec& g : slice) {
        Depth nd = d;
        bool ok = true;
        for (int i = 0; i < gcm.rank(); ++i) {
          nd[i] -= g[i];
          if (nd[i] < 0) ok = false;
        }
        if (!ok || !parabolic_verma_member(gcm, anchor, J, nd)) continue;
        steps.push_back(g);
        if (self(self, nd, left - 1)) return true;
        steps.pop_back();
      }
      return false;
    };
    bool ok = dfs(dfs, mu, n);
    require(ok, "Internal", "ascending height-one weight chain not found");
    return assemble_weight_chain(mu, std::move(steps));
  }

  // Descend from lambda, landing at or above mu.
  auto dfs = [&](auto&& self, const Depth& d, int left) -> bool {
    if (left == 0) return true;
    for (const RootVec& g : slice) {
      Depth nd = d;
      bool ok = true;
      for (int i = 0; i < gcm.rank(); ++i) {
        nd[i] += g[i];
        if (nd[i] > mu[i]) ok = false;
      }
      if (!ok || !parabolic_verma_member(gcm, anchor, J, nd)) continue;
      steps.push_back(g);
      if (self(self, nd, left - 1)) return true;
      steps.pop_back();
    }
    return false;
  };
  Depth zero(gcm.rank(), 0);
  bool ok = dfs(dfs, zero, n);
  require(ok, "Internal", "descending height-one weight chain not found");
  // Assemble ascending from the landing point.
  Depth landing = zero;
  for (const RootVec& g : steps)
    for (int i = 0; i < gcm.rank(); ++i) landing[i] += g[i];
  std::reverse(steps.begin(), steps.end());
  return assemble_weight_chain(landing, std::move(steps));
}

SaturatedSet saturate(const Gcm& gcm, const std::vector<Rat>& anchor,
                      const std::vector<Depth>& seeds) {
  require(classify(gcm).all_finite(), "NotFiniteType", "saturation needs a finite-type system");
  for (const Rat& a : anchor)
    require(denominator(a) == 1, "IntegralityViolation",
            "saturated sets live in the weight lattice");
  SaturatedSet U{gcm, anchor, {}};
  std::deque<Depth> queue;
  for (const Depth& s : seeds)
    if (U.members.insert(s).second) queue.push_back(s);
  while (!queue.empty()) {
    Depth d = queue.front();
    queue.pop_front();
    for (int i = 0; i < gcm.rank(); ++i) {
      Rat pr = weight_pairing(gcm, anchor, d, i);
      long long p = static_cast<long long>(numerator(pr));
      int dir = p >= 0 ? 1 : -1;
      for (long long t = 1; t <= (p >= 0 ? p : -p); ++t) {
        Depth nd = d;
        nd[i] += static_cast<int>(dir * t);
        if (U.members.insert(nd).second) queue.push_back(nd);
      }
    }
  }
  return U;
}

WeightChain saturated_chain(const SaturatedSet& U, const Depth& from, const Depth& to) {
  const int n = U.gcm.rank();
  RootVec df{std::vector<int>(from)}, dt{std::vector<int>(to)};
  require(strictly_dominates(df, dt), "NotComparable", "chain needs from strictly below to");
  require(U.members.count(from), "NotInSet", "start is not in the saturated set");
  require(U.members.count(to), "NotInSet", "end is not in the saturated set");

  Depth bottom = from, top = to;
  std::vector<RootVec> upper_rev, lower;
  while (bottom != top) {
    bool advanced = false;
    for (int j = 0; j < n && !advanced; ++j) {
      if (bottom[j] <= top[j]) continue;
      Depth ct = top;
      ++ct[j];
      if (ct[j] <= bottom[j] && U.members.count(ct)) {
        upper_rev.push_back(RootVec::simple(n, j));
        top = ct;
        advanced = true;
        break;
      }
      Depth cb = bottom;
      --cb[j];
      if (cb[j] >= top[j] && U.members.count(cb)) {
        lower.push_back(RootVec::simple(n, j));
        bottom = cb;
        advanced = true;
      }
    }
    require(advanced, "Internal", "saturated chain search stalled");
  }
  std::vector<RootVec> incs = std::move(lower);
  incs.insert(incs.end(), upper_rev.rbegin(), upper_rev.rend());
  return assemble_weight_chain(from, std::move(incs));
}

}  // namespace kmroots
