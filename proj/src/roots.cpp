#include "kmroots/roots.hpp"

#include <algorithm>
#include <cstdlib>

#include "kmroots/error.hpp"

namespace kmroots {

const char* root_class_name(RootClass c) {
  switch (c) {
    case RootClass::Real: return "real";
    case RootClass::Imaginary: return "imaginary";
    default: return "not_root";
  }
}

namespace {

bool support_connected(const Gcm& gcm, const RootVec& v) {
  IndexSet s = v.supp();
  if (s.empty()) return false;
  return connected_components(gcm, s).size() == 1;
}

}  // namespace

RootClass is_root(const Gcm& gcm, RootVec v) {
  if (v.is_zero()) return RootClass::NotRoot;
  if (v.nonpositive()) v = -v;
  if (!v.nonnegative()) return RootClass::NotRoot;

  // Reflection descent: each step lowers the height, so this terminates.
  for (;;) {
    if (v.height() == 1) return RootClass::Real;
    int j = -1, p = 0;
    for (int i = 0; i < gcm.rank(); ++i) {
      int pi = gcm.pairing(v, i);
      if (pi > 0) {
        j = i;
        p = pi;
        break;
      }
    }
    if (j < 0)
      return support_connected(gcm, v) ? RootClass::Imaginary : RootClass::NotRoot;
    v[j] -= p;
    if (v[j] < 0) return RootClass::NotRoot;
  }
}

RootClass RootDatabase::classify(const RootVec& v) const {
  if (v.is_zero()) return RootClass::NotRoot;
  RootVec w = v.nonpositive() ? -v : v;
  if (!w.nonnegative()) return RootClass::NotRoot;
  if (w.height() <= height_bound) {
    auto it = positive.find(w);
    return it == positive.end() ? RootClass::NotRoot : it->second;
  }
  return is_root(gcm, w);
}

RootDatabase enumerate_roots(const Gcm& gcm, int height_bound, long budget_mb) {
  require(height_bound >= 1, "BadBound", "height bound must be >= 1");
  if (const char* env = std::getenv("KMROOTS_MEMORY_BUDGET_MB")) budget_mb = std::atol(env);

  RootDatabase db;
  db.gcm = gcm;
  db.height_bound = height_bound;

  const std::size_t per_root = sizeof(RootVec) + gcm.rank() * sizeof(int) + 64;
  std::size_t budget = static_cast<std::size_t>(budget_mb) * 1024 * 1024;

  std::vector<RootVec> level;
  for (int i = 0; i < gcm.rank(); ++i) {
    RootVec a = RootVec::simple(gcm.rank(), i);
    db.positive.emplace(a, RootClass::Real);
    level.push_back(a);
  }
  db.max_height = 1;

  for (int h = 1; h < height_bound && !level.empty(); ++h) {
    std::vector<RootVec> next;
    for (const RootVec& v : level)
      for (int i = 0; i < gcm.rank(); ++i) {
        RootVec w = v;
        ++w[i];
        if (db.positive.count(w)) continue;
        RootClass c = is_root(gcm, w);
        if (c == RootClass::NotRoot) continue;
        db.positive.emplace(w, c);
        next.push_back(w);
        if (db.positive.size() * per_root > budget)
          fail("BoundTooLarge", "root enumeration exceeds the memory budget");
      }
    if (!next.empty()) db.max_height = h + 1;
    level = std::move(next);
  }
  db.saturated = db.max_height < height_bound;
  return db;
}

std::vector<RootVec> slice_heights(const RootDatabase& db, const IndexSet& I, int n) {
  std::vector<RootVec> out;
  if (I.empty()) return out;
  for (const auto& [v, cls] : db.positive) {
    (void)cls;
    int h = v.height_on(I);
    if (n > 0 && h == n) out.push_back(v);
    if (n == 0 && h == 0) out.push_back(v);
    if (n < 0 && h == -n) out.push_back(-v);
  }
  if (n == 0) {
    std::size_t sz = out.size();
    for (std::size_t i = 0; i < sz; ++i) out.push_back(-out[i]);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<RootVec> slice_anchored(const RootDatabase& db, const RootVec& alpha,
                                    const IndexSet& J) {
  require(is_root(db.gcm, alpha) != RootClass::NotRoot && alpha.nonnegative(), "NotARoot",
          "anchor must be a positive root");
  std::vector<RootVec> out;
  for (const auto& [v, cls] : db.positive) {
    (void)cls;
    if ((v - alpha).supp().subset_of(J)) out.push_back(v);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

MinimalElements minimal_elements(const RootDatabase& db, const IndexSet& I, int n) {
  require(n >= 1, "BadBound", "minimal elements are defined for n >= 1");
  std::vector<RootVec> slice = slice_heights(db, I, n);
  MinimalElements out;
  for (const RootVec& b : slice) {
    bool minimal = true;
    for (const RootVec& a : slice)
      if (a != b && strictly_dominates(b, a)) {
        minimal = false;
        break;
      }
    if (minimal) out.elements.push_back(b);
    if (b.height() + 1 > db.height_bound) out.truncation_sensitive = true;
  }
  if (!db.saturated) out.truncation_sensitive = true;
  return out;
}

Rat root_length(const Symmetrizer& sym, const Gcm& gcm, const RootVec& v) {
  return bilinear_form(sym, gcm, v, v);
}

std::vector<RootVec> short_roots(const RootDatabase& db, const Symmetrizer& sym) {
  MatrixType mt = classify(db.gcm);
  require(mt.indecomposable() && mt.all_finite(), "NotFiniteType",
          "short roots need an indecomposable finite-type system");
  require(db.saturated, "BoundTooSmall", "database must cover the full finite root set");
  Rat min_len = 0;
  for (const auto& [v, cls] : db.positive) {
    (void)cls;
    Rat len = root_length(sym, db.gcm, v);
    if (min_len == 0 || len < min_len) min_len = len;
  }
  std::vector<RootVec> out;
  for (const auto& [v, cls] : db.positive) {
    (void)cls;
    if (root_length(sym, db.gcm, v) == min_len) out.push_back(v);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

RootVec highest_short_root(const RootDatabase& db, const Symmetrizer& sym) {
  std::vector<RootVec> shorts = short_roots(db, sym);
  std::optional<RootVec> dominant;
  for (const RootVec& v : shorts) {
    bool dom = true;
    for (int i = 0; i < db.gcm.rank(); ++i)
      if (db.gcm.pairing(v, i) < 0) {
        dom = false;
        break;
      }
    if (dom) {
      require(!dominant.has_value(), "Internal", "dominant short root is not unique");
      dominant = v;
    }
  }
  require(dominant.has_value(), "Internal", "no dominant short root found");
  return *dominant;
}

}  // namespace kmroots
