#include "kmroots/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "kmroots/error.hpp"

namespace kmroots {

RootVec reflect(const Gcm& gcm, int j, const RootVec& v) {
  RootVec w = v;
  w[j] -= gcm.pairing(v, j);
  return w;
}

Rat weight_pairing(const Gcm& gcm, const std::vector<Rat>& anchor, const Depth& depth, int j) {
  Rat p = anchor[j];
  for (int i = 0; i < gcm.rank(); ++i) p -= Rat(gcm.a[j][i]) * depth[i];
  return p;
}

Depth reflect_weight(const Gcm& gcm, const std::vector<Rat>& anchor, const Depth& depth, int j) {
  Rat p = weight_pairing(gcm, anchor, depth, j);
  require(denominator(p) == 1, "NonIntegralReflection",
          "pairing at node " + gcm.labels[j] + " is " + rat_to_string(p));
  Depth d = depth;
  d[j] += static_cast<int>(numerator(p));
  return d;
}

OrbitSlice orbit(const Gcm& gcm, const IndexSet& J, const RootVec& seed, int window) {
  OrbitSlice out;
  out.complete = true;
  std::map<RootVec, std::size_t> seen;
  std::deque<std::size_t> queue;
  out.elements.push_back(seed);
  out.witness.push_back({});
  seen.emplace(seed, 0);
  queue.push_back(0);
  while (!queue.empty()) {
    std::size_t k = queue.front();
    queue.pop_front();
    for (int j : J.indices()) {
      RootVec w = reflect(gcm, j, out.elements[k]);
      bool inside = true;
      for (int x : w.c)
        if (std::abs(x) > window) inside = false;
      if (!inside) {
        out.complete = false;
        continue;
      }
      if (seen.count(w)) continue;
      WeylWord word = out.witness[k];
      word.s.push_back(j);
      seen.emplace(w, out.elements.size());
      queue.push_back(out.elements.size());
      out.elements.push_back(w);
      out.witness.push_back(std::move(word));
    }
  }
  return out;
}

WeightOrbit orbit_weight(const Gcm& gcm, const IndexSet& J, const std::vector<Rat>& anchor,
                         const Rat& offset_window) {
  WeightOrbit out;
  out.complete = true;
  std::map<std::vector<Rat>, std::size_t> seen;
  std::deque<std::size_t> queue;
  std::vector<Rat> zero(gcm.rank(), Rat(0));
  out.offsets.push_back(zero);
  out.witness.push_back({});
  seen.emplace(zero, 0);
  queue.push_back(0);
  while (!queue.empty()) {
    std::size_t k = queue.front();
    queue.pop_front();
    for (int j : J.indices()) {
      // offset of s_j(lambda - o) is o + <lambda - o, alpha_j^vee> e_j
      std::vector<Rat> o = out.offsets[k];
      Rat p = anchor[j];
      for (int i = 0; i < gcm.rank(); ++i) p -= Rat(gcm.a[j][i]) * o[i];
      o[j] += p;
      bool inside = true;
      for (const Rat& x : o)
        if (abs(x) > offset_window) inside = false;
      if (!inside) {
        out.complete = false;
        continue;
      }
      if (seen.count(o)) continue;
      WeylWord word = out.witness[k];
      word.s.push_back(j);
      seen.emplace(o, out.offsets.size());
      queue.push_back(out.offsets.size());
      out.offsets.push_back(std::move(o));
      out.witness.push_back(std::move(word));
    }
  }
  return out;
}

DominantResult dominant_representative(const Gcm& gcm, const IndexSet& J,
                                       const std::vector<Rat>& anchor, Depth depth,
                                       long max_steps) {
  DominantResult out;
  for (long step = 0; step < max_steps; ++step) {
    int neg = -1;
    for (int j : J.indices()) {
      Rat p = weight_pairing(gcm, anchor, depth, j);
      require(denominator(p) == 1, "NonIntegralReflection",
              "pairing at node " + gcm.labels[j] + " is " + rat_to_string(p));
      if (p < 0) {
        neg = j;
        break;
      }
    }
    if (neg < 0) {
      out.depth = std::move(depth);
      return out;
    }
    depth = reflect_weight(gcm, anchor, depth, neg);
    out.word.s.push_back(neg);
  }
  fail("NoDominantRepresentative", "reflection walk did not reach a dominant weight");
}

IndexSet isotropy_parabolic(const Gcm& gcm, const IndexSet& J, const RootVec& alpha) {
  require(J.intersect(alpha.supp()).empty(), "SupportOverlap",
          "J must avoid the support of alpha");
  IndexSet K;
  for (int j : J.indices())
    if (gcm.pairing(alpha, j) == 0) K.insert(j);
  return K;
}

bool quotient_finite(const Gcm& gcm, const IndexSet& J, const IndexSet& K) {
  require(K.subset_of(J), "BadSubset", "K must be contained in J");
  for (const IndexSet& comp : connected_components(gcm, J)) {
    if (K.intersect(comp) == comp) continue;  // quotient trivial on this block
    MatrixType mt = classify(subdiagram(gcm, comp));
    if (!mt.all_finite()) return false;
  }
  return true;
}

FinitenessVerdict anchored_slice_finite(const Gcm& gcm, const RootVec& alpha, const IndexSet& J) {
  require(is_root(gcm, alpha) != RootClass::NotRoot && alpha.nonnegative(), "NotARoot",
          "alpha must be a positive root");
  FinitenessVerdict v;
  if (J.empty()) {
    v.finite = true;
    v.criterion = "empty J: the slice is {alpha}";
    return v;
  }
  v.isotropy = isotropy_parabolic(gcm, J, alpha);
  v.finite = quotient_finite(gcm, J, v.isotropy);
  for (const IndexSet& comp : connected_components(gcm, J))
    if (v.isotropy.intersect(comp) != comp) v.j_prime = v.j_prime.unite(comp);
  bool slice_trivial = v.isotropy == J;  // <s_j | j in K> = W_J forces {alpha}
  v.j_connected_case = connected_components(gcm, J).size() == 1 && !slice_trivial;
  v.criterion = v.finite
                    ? (slice_trivial ? "isotropy is all of J: the slice is {alpha}"
                                     : "every component of J meeting the quotient is finite type")
                    : "some component of J acts with an infinite parabolic quotient";
  return v;
}

FinitenessVerdict height_slice_finite(const Gcm& gcm, const IndexSet& I) {
  require(!I.empty(), "EmptySubset", "I must be nonempty");
  FinitenessVerdict out;
  out.finite = true;
  IndexSet Ic = I.complement(gcm.rank());
  for (int i : I.indices()) {
    FinitenessVerdict v = anchored_slice_finite(gcm, RootVec::simple(gcm.rank(), i), Ic);
    out.j_prime = out.j_prime.unite(v.j_prime);
    if (!v.finite) {
      out.finite = false;
      out.isotropy = v.isotropy;
      out.criterion = "slice at node " + gcm.labels[i] + ": " + v.criterion;
      return out;
    }
  }
  out.criterion = "every anchored slice over the complement of I is finite";
  return out;
}

}  // namespace kmroots
