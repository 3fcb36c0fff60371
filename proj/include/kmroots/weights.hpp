#pragma once

#include <set>
#include <vector>

#include "kmroots/roots.hpp"
#include "kmroots/weyl.hpp"

namespace kmroots {

// A highest-weight anchor is the vector of coroot pairings of lambda; the
// weight lambda - sum c_i alpha_i is carried as its depth vector c.

// Nodes with integral nonnegative pairing.
IndexSet integral_nodes(const std::vector<Rat>& anchor);
// Nodes with nonnegative pairing.
IndexSet nonnegative_nodes(const std::vector<Rat>& anchor);

// Membership in the weight set of the largest integrable highest-weight
// module over the J-parabolic: the J-dominant representative of the weight
// must stay at or below lambda. Depth must be supported on J.
bool integrable_weight_member(const Gcm& gcm, const IndexSet& J, const std::vector<Rat>& anchor,
                              const Depth& depth);

// Membership in the parabolic Verma weight set via the integrable slice
// decomposition: split the depth over J^c and J and test the J-part against
// the shifted anchor. Pure in the depth vector, truncation-free.
bool parabolic_verma_member(const Gcm& gcm, const std::vector<Rat>& anchor, const IndexSet& J,
                            const Depth& depth);

enum class WtFormula { Slice, Minkowski, Minimal };

struct WeightSet {
  std::vector<Rat> anchor;
  IndexSet J;
  int depth_bound = 0;
  WtFormula tag = WtFormula::Slice;
  std::set<Depth> members;  // depth vectors, total depth <= depth_bound
};

// The same weight set through the three formulas: pointwise slice test,
// Minkowski difference against all positive roots off the parabolic, and
// Minkowski difference against the height-one slice only.
WeightSet wt_slice(const Gcm& gcm, const std::vector<Rat>& anchor, const IndexSet& J, int D);
WeightSet wt_minkowski(const Gcm& gcm, const RootDatabase& db, const std::vector<Rat>& anchor,
                       const IndexSet& J, int D);
WeightSet wt_minimal(const Gcm& gcm, const RootDatabase& db, const std::vector<Rat>& anchor,
                     const IndexSet& J, int D);

// Simple-module weights: the slice formula at the full integral parabolic.
WeightSet wt_simple(const Gcm& gcm, const RootDatabase& db, const std::vector<Rat>& anchor, int D);

// Verifies the Minkowski reduction identities for V = M(lambda, Jprime):
// the unconditional one over the integral parabolic, and the conditional
// one over an arbitrary J (tested only when its hypothesis holds).
struct WeightReductionReport {
  bool base_identity_holds = false;
  std::vector<Depth> base_diff;
  bool lhs_containment_holds = false;
  bool conditional_checked = false;
  bool conditional_identity_holds = false;
  std::vector<Depth> conditional_diff;
};
WeightReductionReport weight_reduction_check(const Gcm& gcm, const RootDatabase& db,
                                             const std::vector<Rat>& anchor,
                                             const IndexSet& Jprime, const IndexSet& J, int D);

struct WeightChain {
  Depth start;                      // depth of the lower weight
  std::vector<RootVec> increments;  // roots added to the weight, lowest first
  std::vector<Depth> elements;      // depths from start up to the end
};

// Simple-root chain between comparable weights of M(lambda, J). Greedy
// two-ended search with the membership predicate as oracle.
WeightChain weight_chain(const Gcm& gcm, const std::vector<Rat>& anchor, const IndexSet& J,
                         const Depth& from, const Depth& to);

// Chains between mu and lambda in steps of the I-height-one slice, inside
// wt M(lambda, J): ascending from mu (landing at or below lambda) or
// descending from lambda (landing at or above mu).
WeightChain height_one_weight_chain(const Gcm& gcm, const RootDatabase& db,
                                    const std::vector<Rat>& anchor, const IndexSet& J,
                                    const IndexSet& I, const Depth& mu, ChainDirection dir);

// Saturated subsets of the weight lattice over a finite-type system:
// closure of the seeds under full root strings toward every reflection
// image. Members are signed depth vectors relative to the anchor.
struct SaturatedSet {
  Gcm gcm;
  std::vector<Rat> anchor;
  std::set<Depth> members;
};

SaturatedSet saturate(const Gcm& gcm, const std::vector<Rat>& anchor,
                      const std::vector<Depth>& seeds);
WeightChain saturated_chain(const SaturatedSet& U, const Depth& from, const Depth& to);

}  // namespace kmroots
