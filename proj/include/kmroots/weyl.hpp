#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kmroots/cartan.hpp"
#include "kmroots/rational.hpp"
#include "kmroots/root_vec.hpp"

namespace kmroots {

// Reduced or unreduced word in simple reflections, applied left to right:
// word (j1, j2) sends v to s_{j2}(s_{j1}(v)).
struct WeylWord {
  std::vector<int> s;
};

// s_j v = v - <v, alpha_j^vee> alpha_j
RootVec reflect(const Gcm& gcm, int j, const RootVec& v);

// Signed depth vectors: an anchored weight mu = lambda - sum depth_i alpha_i,
// where the anchor is the vector of coroot pairings of lambda. Depth entries
// may be negative for lattice-translated weights.
using Depth = std::vector<int>;

// <mu, alpha_j^vee> = anchor[j] - (A * depth)[j]
Rat weight_pairing(const Gcm& gcm, const std::vector<Rat>& anchor, const Depth& depth, int j);

// Reflection of an anchored weight at node j; requires integral pairing.
Depth reflect_weight(const Gcm& gcm, const std::vector<Rat>& anchor, const Depth& depth, int j);

struct OrbitSlice {
  std::vector<RootVec> elements;
  std::vector<WeylWord> witness;  // word carrying the seed to elements[k]
  bool complete = false;          // no pruning against the window occurred
};

// Closure of {seed} under reflections indexed by J, pruned to coordinate
// magnitude <= window. J empty gives the singleton orbit.
OrbitSlice orbit(const Gcm& gcm, const IndexSet& J, const RootVec& seed, int window);

// Orbit of an anchored weight with exact rational offsets from lambda
// (lambda itself has offset zero). Used for the convex geometry of
// W_J lambda; reflections here are rational, no integrality needed.
struct WeightOrbit {
  std::vector<std::vector<Rat>> offsets;
  std::vector<WeylWord> witness;
  bool complete = false;
};

WeightOrbit orbit_weight(const Gcm& gcm, const IndexSet& J, const std::vector<Rat>& anchor,
                         const Rat& offset_window);

// J-dominant representative of an anchored weight, with a word carrying the
// input to it. Throws NonIntegralReflection on a non-integral pairing and
// NoDominantRepresentative if the reflection walk fails to terminate within
// the step guard (the orbit then has no J-dominant element).
struct DominantResult {
  Depth depth;
  WeylWord word;
};
DominantResult dominant_representative(const Gcm& gcm, const IndexSet& J,
                                       const std::vector<Rat>& anchor, Depth depth,
                                       long max_steps = 100000);

// K = { j in J : <alpha, alpha_j^vee> = 0 }; J must avoid supp(alpha).
IndexSet isotropy_parabolic(const Gcm& gcm, const IndexSet& J, const RootVec& alpha);

// Parabolic-quotient finiteness: true iff every connected component J_t of J
// with K intersect J_t proper is of finite type.
bool quotient_finite(const Gcm& gcm, const IndexSet& J, const IndexSet& K);

// Structural finiteness decision for the anchored slice and height slices,
// with an explanation of which criterion fired.
struct FinitenessVerdict {
  bool finite = false;
  std::string criterion;
  IndexSet isotropy;
  // Union of the components of J acting nontrivially; the slice equals the
  // one taken over this semisimple subset.
  IndexSet j_prime;
  bool j_connected_case = false;  // J connected and the slice exceeds {alpha}
};

FinitenessVerdict anchored_slice_finite(const Gcm& gcm, const RootVec& alpha, const IndexSet& J);
FinitenessVerdict height_slice_finite(const Gcm& gcm, const IndexSet& I);

}  // namespace kmroots
