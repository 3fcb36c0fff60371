#include "kmroots/psp.hpp"

#include <algorithm>

#include "kmroots/error.hpp"

namespace kmroots {

namespace {

std::string vec_str(const Gcm& gcm, const RootVec& v) {
  std::string s = "(";
  for (int i = 0; i < gcm.rank(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

RootChain make_chain(const RootVec& anchor, std::vector<RootVec> steps, ChainDirection dir) {
  RootChain ch;
  ch.anchor = anchor;
  ch.direction = dir;
  RootVec acc = anchor;
  for (RootVec& s : steps) {
    acc = acc + s;
    ch.partials.push_back(acc);
    ch.steps.push_back(std::move(s));
  }
  return ch;
}

std::vector<RootVec> slice_below(const RootDatabase& db, const IndexSet& I,
                                 const RootVec& bound) {
  std::vector<RootVec> out;
  for (const RootVec& g : slice_heights(db, I, 1))
    if (dominates(bound, g)) out.push_back(g);
  return out;
}

void check_positive_root(const RootDatabase& db, const RootVec& beta) {
  require(beta.nonnegative() && is_root(db.gcm, beta) != RootClass::NotRoot, "NotARoot",
          "expected a positive root, got " + vec_str(db.gcm, beta));
}

}  // namespace

RootChain psp_chain(const RootDatabase& db, const RootVec& beta) {
  check_positive_root(db, beta);
  require(beta.height() <= db.height_bound, "OutOfWindow", "beta exceeds the database window");
  const int n = db.gcm.rank();
  RootVec zero(n);
  std::vector<RootVec> steps;
  RootVec p = zero;
  // Any simple step through a root can be completed (simple-step chains
  // exist between every comparable root pair), so first-fit is safe.
  while (p != beta) {
    bool advanced = false;
    for (int j = 0; j < n && !advanced; ++j) {
      if (p[j] + 1 > beta[j]) continue;
      RootVec q = p;
      ++q[j];
      if (is_root(db.gcm, q) == RootClass::NotRoot) continue;
      steps.push_back(RootVec::simple(n, j));
      p = q;
      advanced = true;
    }
    require(advanced, "Internal", "partial sum chain search stalled");
  }
  return make_chain(zero, std::move(steps), ChainDirection::Up);
}

RootChain parabolic_psp_down(const RootDatabase& db, const IndexSet& I, const RootVec& beta) {
  require(!I.empty(), "EmptySubset", "I must be nonempty");
  check_positive_root(db, beta);
  require(beta.height() <= db.height_bound, "OutOfWindow", "beta exceeds the database window");
  require(beta.height_on(I) >= 1, "BadBound", "beta must have positive I-height");

  std::vector<RootVec> steps_rev;
  std::vector<RootVec> cands = slice_below(db, I, beta);
  RootVec tau = beta;
  // Descend: each removed step leaves a positive root of I-height one less,
  // where the same guarantee applies again.
  while (tau.height_on(I) > 1) {
    bool advanced = false;
    for (const RootVec& g : cands) {
      if (!dominates(tau, g)) continue;
      RootVec rest = tau - g;
      if (rest.nonnegative() && is_root(db.gcm, rest) != RootClass::NotRoot) {
        steps_rev.push_back(g);
        tau = rest;
        advanced = true;
        break;
      }
    }
    require(advanced, "Internal", "parabolic descent stalled at " + vec_str(db.gcm, tau));
  }
  steps_rev.push_back(tau);
  std::reverse(steps_rev.begin(), steps_rev.end());
  return make_chain(RootVec(db.gcm.rank()), std::move(steps_rev), ChainDirection::Down);
}

GoingUp going_up(const RootDatabase& db, const IndexSet& I, const RootVec& beta) {
  require(!I.empty(), "EmptySubset", "I must be nonempty");
  check_positive_root(db, beta);
  GoingUp out;
  for (const RootVec& g : slice_heights(db, I, 1)) {
    if (is_root(db.gcm, beta + g) != RootClass::NotRoot) {
      out.status = GoingUp::Status::Found;
      out.gamma = g;
      return out;
    }
  }
  int max_hi = 0;
  for (const auto& [v, cls] : db.positive) {
    (void)cls;
    max_hi = std::max(max_hi, v.height_on(I));
  }
  out.status = (db.saturated && beta.height_on(I) >= max_hi) ? GoingUp::Status::SupremumAttained
                                                             : GoingUp::Status::Unknown;
  return out;
}

RootChain support_chain(const RootDatabase& db, int i, const RootVec& beta) {
  check_positive_root(db, beta);
  RootVec ai = RootVec::simple(db.gcm.rank(), i);
  require(strictly_dominates(beta, ai), "NotComparable",
          "beta must strictly dominate the simple root");
  RootChain ch = adjoint_chain(db, ai, beta);
  ch.direction = ChainDirection::Up;
  return ch;
}

RootChain anchored_chain(const RootDatabase& db, const RootVec& alpha, const IndexSet& J,
                         const RootVec& beta) {
  require(is_root(db.gcm, alpha) == RootClass::Real && alpha.nonnegative(), "NotARoot",
          "alpha must be a real positive root");
  require(alpha.supp() != IndexSet::full(db.gcm.rank()), "SupportOverlap",
          "alpha must have proper support");
  require(!J.empty() && J.intersect(alpha.supp()).empty(), "SupportOverlap",
          "J must be nonempty and avoid the support of alpha");
  RootVec diff = beta - alpha;
  require(diff.nonnegative() && diff.supp().subset_of(J), "NotComparable",
          "beta must lie in the anchored slice of alpha over J");
  require(is_root(db.gcm, diff) != RootClass::NotRoot && diff.supp().subset_of(J),
          "HypothesisViolated", "beta - alpha must be a positive root supported on J");

  // Descend from beta; every valid target satisfies the same hypotheses.
  std::vector<RootVec> steps_rev;
  RootVec tau = beta;
  while (tau != alpha) {
    RootVec rest = tau - alpha;
    if (rest.height() == 1) {
      steps_rev.push_back(rest);
      break;
    }
    bool advanced = false;
    for (int j : rest.supp().indices()) {
      RootVec cand = tau;
      --cand[j];
      RootVec cdiff = cand - alpha;
      if (is_root(db.gcm, cand) != RootClass::NotRoot &&
          is_root(db.gcm, cdiff) != RootClass::NotRoot && cdiff.supp().subset_of(J)) {
        steps_rev.push_back(RootVec::simple(db.gcm.rank(), j));
        tau = cand;
        advanced = true;
        break;
      }
    }
    require(advanced, "Internal", "anchored descent stalled at " + vec_str(db.gcm, tau));
  }
  std::reverse(steps_rev.begin(), steps_rev.end());
  return make_chain(alpha, std::move(steps_rev), ChainDirection::Up);
}

RootChain adjoint_chain(const RootDatabase& db, const RootVec& mu0, const RootVec& mu) {
  require(in_adjoint(db.gcm, mu0), "NotInAdjointWeights", "start is not a root or zero");
  require(in_adjoint(db.gcm, mu), "NotInAdjointWeights", "end is not a root or zero");
  require(strictly_dominates(mu, mu0), "NotComparable", "chain needs mu0 strictly below mu");

  const int n = db.gcm.rank();
  RootVec top = mu, bottom = mu0;
  std::vector<RootVec> upper_rev, lower;
  while (top != bottom) {
    RootVec diff = top - bottom;
    bool advanced = false;
    for (int j = 0; j < n && !advanced; ++j) {
      if (diff[j] <= 0) continue;
      RootVec ct = top;
      --ct[j];
      if (in_adjoint(db.gcm, ct) && dominates(ct, bottom)) {
        upper_rev.push_back(RootVec::simple(n, j));
        top = ct;
        advanced = true;
        break;
      }
      RootVec cb = bottom;
      ++cb[j];
      if (in_adjoint(db.gcm, cb) && dominates(top, cb)) {
        lower.push_back(RootVec::simple(n, j));
        bottom = cb;
        advanced = true;
      }
    }
    require(advanced, "Internal", "adjoint chain search stalled");
  }
  std::vector<RootVec> steps = std::move(lower);
  steps.insert(steps.end(), upper_rev.rbegin(), upper_rev.rend());
  return make_chain(mu0, std::move(steps), ChainDirection::Up);
}

namespace {

// Bounded DFS over steps of I-height one. Returns the chain or fills the
// probe candidate list for the first level.
bool step_chain_dfs(const RootDatabase& db, const std::vector<RootVec>& slice, const RootVec& from,
                    const RootVec& to, int depth, bool ascending, bool exact,
                    std::vector<RootVec>* steps, std::vector<ProbeCandidate>* first_level) {
  if (depth == 0) return exact ? from == to : true;
  for (const RootVec& g : slice) {
    RootVec next = ascending ? from + g : from - g;
    std::string reason;
    if (ascending ? !dominates(to, next) : !dominates(next, to))
      reason = "leaves the order interval";
    else if (!in_adjoint(db.gcm, next))
      reason = "lands outside the adjoint weights";
    if (reason.empty()) {
      steps->push_back(g);
      if (step_chain_dfs(db, slice, next, to, depth - 1, ascending, exact, steps, nullptr))
        return true;
      steps->pop_back();
      reason = "no completion from this step";
    }
    if (first_level) first_level->push_back({g, reason});
  }
  return false;
}

}  // namespace

ProbeReport height_one_step_probe(const RootDatabase& db, const IndexSet& I, const RootVec& b0,
                                  const RootVec& b1, StepChainMode mode) {
  require(in_adjoint(db.gcm, b0) && in_adjoint(db.gcm, b1), "NotInAdjointWeights",
          "endpoints must be adjoint weights");
  require(strictly_dominates(b1, b0), "NotComparable", "endpoints must be comparable");
  RootVec diff = b1 - b0;
  int n = diff.height_on(I);
  require(n > 0, "BadBound", "the I-height of the difference must be positive");

  // Candidates are bounded by the difference, so the search is finite on
  // every system.
  std::vector<RootVec> slice = slice_below(db, I, diff);

  ProbeReport rep;
  rep.notes["candidate_bound"] = vec_str(db.gcm, diff);
  bool ascending = mode != StepChainMode::DownFromTop;
  bool exact = mode == StepChainMode::ExactConnection;
  RootVec from = ascending ? b0 : b1;
  RootVec to = ascending ? b1 : b0;
  std::vector<RootVec> steps;
  bool ok = step_chain_dfs(db, slice, from, to, n, ascending, exact, &steps, &rep.tried);
  if (ok) {
    if (!ascending) std::reverse(steps.begin(), steps.end());
    RootVec anchor = ascending ? b0 : (b1 - [&] {
      RootVec s(db.gcm.rank());
      for (const RootVec& g : steps) s = s + g;
      return s;
    }());
    rep.found = make_chain(anchor, std::move(steps),
                           ascending ? ChainDirection::Up : ChainDirection::Down);
    rep.holds = true;
  }
  return rep;
}

std::variant<RootChain, ProbeReport> height_one_step_chain(const RootDatabase& db,
                                                           const IndexSet& I, const RootVec& b0,
                                                           const RootVec& b1, StepChainMode mode) {
  require(classify(db.gcm).all_finite(), "NotFiniteType",
          "step chains are contractual only in finite type");
  bool hypothesis = true;
  if (mode == StepChainMode::UpFromBottom)
    hypothesis = b0.nonnegative() || (b0.nonpositive() && b0.height_on(I) < 0);
  else if (mode == StepChainMode::DownFromTop)
    hypothesis = b1.nonpositive() || (b1.nonnegative() && b1.height_on(I) > 0);
  ProbeReport rep = height_one_step_probe(db, I, b0, b1, mode);
  rep.notes["hypothesis_held"] = hypothesis ? "true" : "false";
  if (rep.found && hypothesis) return *rep.found;
  return rep;
}

RootChain short_psp(const RootDatabase& db, const Symmetrizer& sym, const IndexSet& I,
                    const RootVec& beta, ChainDirection dir) {
  MatrixType mt = classify(db.gcm);
  require(mt.indecomposable() && mt.all_finite(), "NotFiniteType",
          "short-root chains need an indecomposable finite-type system");
  require(!I.empty(), "EmptySubset", "I must be nonempty");
  std::vector<RootVec> shorts = short_roots(db, sym);
  auto is_short = [&](const RootVec& v) {
    return std::binary_search(shorts.begin(), shorts.end(), v, canonical_less);
  };
  require(beta.nonnegative() && is_root(db.gcm, beta) != RootClass::NotRoot, "NotARoot",
          "beta must be a positive root");
  require(is_short(beta), "NotShortRoot", "beta must be a short root");
  std::vector<RootVec> slice = slice_heights(db, I, 1);

  if (dir == ChainDirection::Down) {
    int n = beta.height_on(I);
    require(n > 1, "HypothesisViolated", "down chains need I-height above one");
    std::vector<RootVec> steps;
    RootVec zero(db.gcm.rank());
    auto dfs = [&](auto&& self, const RootVec& tau, int left) -> bool {
      if (left == 1) {
        if (!is_short(tau)) return false;
        steps.push_back(tau);
        return true;
      }
      for (const RootVec& g : slice) {
        RootVec rest = tau - g;
        if (!rest.nonnegative() || !is_short(rest)) continue;
        if (self(self, rest, left - 1)) {
          steps.push_back(g);
          return true;
        }
      }
      return false;
    };
    bool ok = dfs(dfs, beta, n);
    require(ok, "Internal", "short-root descent found no chain");
    return make_chain(zero, std::move(steps), ChainDirection::Down);
  }

  RootVec theta = highest_short_root(db, sym);
  int m = theta.height_on(I) - beta.height_on(I);
  require(m > 0, "HypothesisViolated", "up chains need I-height below that of the "
                                       "highest short root");
  std::vector<RootVec> steps;
  auto dfs_up = [&](auto&& self, const RootVec& x, int left) -> bool {
    if (left == 0) return true;
    for (const RootVec& g : slice) {
      RootVec next = x + g;
      if (!is_short(next)) continue;
      steps.push_back(g);
      if (self(self, next, left - 1)) return true;
      steps.pop_back();
    }
    return false;
  };
  bool ok = dfs_up(dfs_up, beta, m);
  require(ok, "Internal", "short-root ascent found no chain");
  return make_chain(beta, std::move(steps), ChainDirection::Up);
}

ProbeReport probe_exact_step(const RootDatabase& db, const IndexSet& I, const RootVec& b0,
                             const RootVec& b1) {
  ProbeReport rep = height_one_step_probe(db, I, b0, b1, StepChainMode::ExactConnection);
  rep.query = "single step of I-height one connecting the pair exactly";
  rep.holds = rep.empty();
  return rep;
}

ProbeReport probe_long_root_gap(const RootDatabase& db, const Symmetrizer& sym, const IndexSet& I,
                                const RootVec& beta_low, const RootVec& beta_high) {
  MatrixType mt = classify(db.gcm);
  require(mt.indecomposable() && mt.all_finite(), "NotFiniteType", "long roots need finite type");
  Rat max_len = 0;
  for (const auto& [v, cls] : db.positive) {
    (void)cls;
    max_len = std::max(max_len, root_length(sym, db.gcm, v));
  }
  auto is_long = [&](const RootVec& v) {
    return v.nonnegative() && is_root(db.gcm, v) != RootClass::NotRoot &&
           root_length(sym, db.gcm, v) == max_len;
  };
  ProbeReport rep;
  rep.query = "step of I-height one moving between long positive roots";
  rep.holds = true;
  for (const RootVec& g : slice_heights(db, I, 1)) {
    RootVec down = beta_high - g;
    RootVec up = beta_low + g;
    std::string down_reason = is_long(down) ? "" : "descent does not land on a long positive root";
    std::string up_reason = is_long(up) ? "" : "ascent does not land on a long positive root";
    if (down_reason.empty() || up_reason.empty()) {
      rep.holds = false;
      rep.notes["counterexample"] = vec_str(db.gcm, g);
    }
    rep.tried.push_back({g, down_reason + "; " + up_reason});
  }
  return rep;
}

ProbeReport probe_unique_descent(const RootDatabase& db, const RootVec& beta) {
  check_positive_root(db, beta);
  ProbeReport rep;
  rep.query = "simple roots subtractable from beta leaving a root";
  std::vector<int> hits;
  for (int j = 0; j < db.gcm.rank(); ++j) {
    RootVec cand = beta;
    --cand[j];
    if (!cand.nonnegative()) {
      rep.tried.push_back({RootVec::simple(db.gcm.rank(), j), "coefficient would go negative"});
      continue;
    }
    RootClass c = is_root(db.gcm, cand);
    if (c == RootClass::NotRoot) {
      rep.tried.push_back({RootVec::simple(db.gcm.rank(), j), "difference is not a root"});
    } else {
      hits.push_back(j);
      rep.notes["class_of_difference"] = root_class_name(c);
      rep.tried.push_back({RootVec::simple(db.gcm.rank(), j), ""});
    }
  }
  rep.holds = hits.size() == 1;
  if (rep.holds) rep.notes["unique_subtractable"] = db.gcm.labels[hits[0]];
  return rep;
}

}  // namespace kmroots
