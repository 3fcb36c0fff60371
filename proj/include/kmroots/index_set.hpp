#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace kmroots {

// Subset of Dynkin nodes, stored as a bitmask over node indices 0..rank-1.
// Rank is capped at 64 by validate_gcm.
struct IndexSet {
  std::uint64_t bits = 0;

  IndexSet() = default;
  IndexSet(std::initializer_list<int> nodes) {
    for (int i : nodes) insert(i);
  }

  static IndexSet full(int rank) {
    IndexSet s;
    s.bits = (rank >= 64) ? ~0ull : ((1ull << rank) - 1);
    return s;
  }

  bool contains(int i) const { return (bits >> i) & 1ull; }
  void insert(int i) { bits |= (1ull << i); }
  void erase(int i) { bits &= ~(1ull << i); }
  bool empty() const { return bits == 0; }
  int count() const { return __builtin_popcountll(bits); }

  bool subset_of(const IndexSet& o) const { return (bits & ~o.bits) == 0; }
  IndexSet complement(int rank) const {
    IndexSet s = full(rank);
    s.bits &= ~bits;
    return s;
  }
  IndexSet intersect(const IndexSet& o) const {
    IndexSet s;
    s.bits = bits & o.bits;
    return s;
  }
  IndexSet unite(const IndexSet& o) const {
    IndexSet s;
    s.bits = bits | o.bits;
    return s;
  }

  std::vector<int> indices() const {
    std::vector<int> v;
    for (int i = 0; i < 64; ++i)
      if (contains(i)) v.push_back(i);
    return v;
  }

  friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.bits == b.bits; }
  friend bool operator!=(const IndexSet& a, const IndexSet& b) { return a.bits != b.bits; }
  friend bool operator<(const IndexSet& a, const IndexSet& b) { return a.bits < b.bits; }
};

}  // namespace kmroots
