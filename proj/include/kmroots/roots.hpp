#pragma once

#include <map>
#include <optional>
#include <vector>

#include "kmroots/cartan.hpp"
#include "kmroots/root_vec.hpp"

namespace kmroots {

enum class RootClass { Real, Imaginary, NotRoot };

const char* root_class_name(RootClass c);

// Root-membership decision by reflection descent plus the fundamental
// imaginary-cone test. Pure, window-free.
RootClass is_root(const Gcm& gcm, RootVec v);

// v in the adjoint weight set, i.e. zero or a root.
inline bool in_adjoint(const Gcm& gcm, const RootVec& v) {
  return v.is_zero() || is_root(gcm, v) != RootClass::NotRoot;
}

// All positive roots of height <= height_bound, with classification.
// Negative roots are handled by sign at query time.
struct RootDatabase {
  Gcm gcm;
  int height_bound = 0;
  std::map<RootVec, RootClass> positive;
  // True when some height <= height_bound carries no root; the partial sum
  // property then guarantees nothing exists above it either.
  bool saturated = false;
  int max_height = 0;

  bool contains_positive(const RootVec& v) const { return positive.count(v) != 0; }
  // Classification of an arbitrary lattice vector (sign-split, database
  // lookup within the window, is_root beyond it).
  RootClass classify(const RootVec& v) const;
};

// Breadth-first enumeration by height; level h+1 comes from level h plus a
// simple root, which the partial sum property makes complete. Throws
// BoundTooLarge when the estimated footprint exceeds budget_mb.
RootDatabase enumerate_roots(const Gcm& gcm, int height_bound, long budget_mb = 512);

// Roots with height_I = n, within the window. Positive vectors for n > 0,
// negative for n < 0, both signs for n = 0 (plus nothing for empty I).
std::vector<RootVec> slice_heights(const RootDatabase& db, const IndexSet& I, int n);

// Positive roots beta with supp(beta - alpha) inside J; contains alpha.
// Throws NotARoot if alpha is not a positive root.
std::vector<RootVec> slice_anchored(const RootDatabase& db, const RootVec& alpha,
                                    const IndexSet& J);

struct MinimalElements {
  std::vector<RootVec> elements;
  // Set when some slice member sits within one simple-root step of the
  // window, so a larger window could extend the answer.
  bool truncation_sensitive = false;
};

// Minimal elements of the height slice under the root-lattice order; n >= 1.
MinimalElements minimal_elements(const RootDatabase& db, const IndexSet& I, int n);

// Short roots of a finite-type indecomposable system (simply laced: every
// root counts as short). Requires a saturated database.
std::vector<RootVec> short_roots(const RootDatabase& db, const Symmetrizer& sym);
RootVec highest_short_root(const RootDatabase& db, const Symmetrizer& sym);

// Squared length under the symmetrizer form.
Rat root_length(const Symmetrizer& sym, const Gcm& gcm, const RootVec& v);

}  // namespace kmroots
