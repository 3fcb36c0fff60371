#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <vector>

#include "kmroots/index_set.hpp"

namespace kmroots {

// Integer coordinate vector on the simple-root basis. Represents roots and
// other root-lattice elements; the zero vector is a lattice element but
// never a root.
struct RootVec {
  std::vector<int> c;

  RootVec() = default;
  explicit RootVec(std::size_t n) : c(n, 0) {}
  RootVec(std::initializer_list<int> v) : c(v) {}

  std::size_t size() const { return c.size(); }
  int& operator[](std::size_t i) { return c[i]; }
  int operator[](std::size_t i) const { return c[i]; }

  int height() const {
    int h = 0;
    for (int x : c) h += x;
    return h;
  }
  int height_on(const IndexSet& I) const {
    int h = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (I.contains(static_cast<int>(i))) h += c[i];
    return h;
  }
  IndexSet supp() const {
    IndexSet s;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0) s.insert(static_cast<int>(i));
    return s;
  }
  IndexSet supp_on(const IndexSet& I) const { return supp().intersect(I); }

  bool is_zero() const {
    for (int x : c)
      if (x != 0) return false;
    return true;
  }
  bool nonnegative() const {
    for (int x : c)
      if (x < 0) return false;
    return true;
  }
  bool nonpositive() const {
    for (int x : c)
      if (x > 0) return false;
    return true;
  }

  static RootVec simple(std::size_t n, int i) {
    RootVec v(n);
    v.c[i] = 1;
    return v;
  }

  friend RootVec operator+(const RootVec& a, const RootVec& b) {
    RootVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
  }
  friend RootVec operator-(const RootVec& a, const RootVec& b) {
    RootVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
  }
  friend RootVec operator-(const RootVec& a) {
    RootVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.c[i] = -a.c[i];
    return r;
  }
  friend RootVec operator*(int k, const RootVec& a) {
    RootVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.c[i] = k * a.c[i];
    return r;
  }

  friend bool operator==(const RootVec& a, const RootVec& b) { return a.c == b.c; }
  friend bool operator!=(const RootVec& a, const RootVec& b) { return a.c != b.c; }
  friend bool operator<(const RootVec& a, const RootVec& b) { return a.c < b.c; }
};

// a >= b in the root-lattice partial order (componentwise).
inline bool dominates(const RootVec& a, const RootVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.c[i] < b.c[i]) return false;
  return true;
}
inline bool strictly_dominates(const RootVec& a, const RootVec& b) {
  return dominates(a, b) && a != b;
}

// Canonical search order used by every chain/step search: height first,
// then coordinates from the lowest node with the larger entry first, so
// simple roots come out in node-label order.
inline bool canonical_less(const RootVec& a, const RootVec& b) {
  int ha = a.height(), hb = b.height();
  if (ha != hb) return ha < hb;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.c[i] != b.c[i]) return a.c[i] > b.c[i];
  return false;
}

}  // namespace kmroots
