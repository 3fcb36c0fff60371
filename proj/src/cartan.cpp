#include "kmroots/cartan.hpp"

#include <algorithm>
#include <queue>

#include "kmroots/error.hpp"
#include "kmroots/lp.hpp"

namespace kmroots {

int Gcm::node_index(const std::string& label) const {
  for (int i = 0; i < rank(); ++i)
    if (labels[i] == label) return i;
  fail("UnknownNode", "no node labelled '" + label + "'");
}

const char* block_type_name(BlockType t) {
  switch (t) {
    case BlockType::Finite: return "finite";
    case BlockType::Affine: return "affine";
    default: return "indefinite";
  }
}

Gcm validate_gcm(std::vector<std::string> labels, std::vector<std::vector<int>> entries) {
  const int n = static_cast<int>(entries.size());
  require(n >= 1, "NotGCM", "matrix must be nonempty");
  require(n <= 64, "NotGCM", "rank capped at 64");
  if (labels.empty())
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  require(static_cast<int>(labels.size()) == n, "NotGCM", "label count must match matrix size");
  for (int i = 0; i < n; ++i) {
    require(static_cast<int>(entries[i].size()) == n, "NotGCM", "matrix must be square");
    require(entries[i][i] == 2, "NotGCM", "diagonal entries must equal 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      require(entries[i][j] <= 0, "NotGCM", "off-diagonal entries must be nonpositive");
      require((entries[i][j] == 0) == (entries[j][i] == 0), "NotGCM",
              "zero pattern must be symmetric");
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      require(labels[i] != labels[j], "NotGCM", "labels must be distinct");
  Gcm g;
  g.labels = std::move(labels);
  g.a = std::move(entries);
  return g;
}

Gcm subdiagram(const Gcm& gcm, const IndexSet& I) {
  require(!I.empty(), "EmptySubset", "subdiagram needs a nonempty index set");
  std::vector<int> idx = I.indices();
  Gcm g;
  for (int i : idx) g.labels.push_back(gcm.labels[i]);
  g.a.assign(idx.size(), std::vector<int>(idx.size(), 0));
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) g.a[r][c] = gcm.a[idx[r]][idx[c]];
  return g;
}

std::vector<IndexSet> connected_components(const Gcm& gcm, const IndexSet& I) {
  std::vector<IndexSet> comps;
  IndexSet seen;
  for (int s : I.indices()) {
    if (seen.contains(s)) continue;
    IndexSet comp;
    std::queue<int> q;
    q.push(s);
    seen.insert(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      comp.insert(v);
      for (int w : I.indices())
        if (!seen.contains(w) && gcm.edge(v, w)) {
          seen.insert(w);
          q.push(w);
        }
    }
    comps.push_back(comp);
  }
  return comps;
}

namespace {

// Feasibility of { u > 0, (A u) rel 0 } posed as u = 1 + u', u' >= 0.
// rel is Ge-with-strictness for the finite test (A u >= 1 after scaling)
// and Eq for the affine test.
bool block_witness(const std::vector<std::vector<int>>& a, bool strict, std::vector<Rat>* u_out) {
  const int n = static_cast<int>(a.size());
  lp::Problem p;
  p.nvars = n;
  for (int i = 0; i < n; ++i) {
    std::vector<Rat> row(n);
    Rat rhs = 0;
    for (int j = 0; j < n; ++j) {
      row[j] = a[i][j];
      rhs -= a[i][j];  // move A*1 to the right-hand side
    }
    if (strict)
      p.add_row(row, lp::Rel::Ge, rhs + 1);
    else
      p.add_row(row, lp::Rel::Eq, rhs);
  }
  auto res = lp::solve(p);
  if (!res.feasible) return false;
  u_out->assign(n, Rat(1));
  for (int j = 0; j < n; ++j) (*u_out)[j] += res.x[j];
  return true;
}

}  // namespace

MatrixType classify(const Gcm& gcm) {
  MatrixType out;
  for (const IndexSet& comp : connected_components(gcm, IndexSet::full(gcm.rank()))) {
    Gcm sub = subdiagram(gcm, comp);
    Block b;
    b.nodes = comp;
    std::vector<Rat> u;
    if (block_witness(sub.a, true, &u)) {
      b.type = BlockType::Finite;
      b.witness = u;
    } else if (block_witness(sub.a, false, &u)) {
      b.type = BlockType::Affine;
      b.witness = u;
    } else {
      b.type = BlockType::Indefinite;
      // Kac trichotomy: when neither system is solvable there is u > 0
      // with A u < 0; -A in the finite test produces it.
      std::vector<std::vector<int>> neg = sub.a;
      for (auto& row : neg)
        for (auto& v : row) v = -v;
      bool ok = block_witness(neg, true, &u);
      require(ok, "Internal", "trichotomy witness search failed");
      b.witness = u;
    }
    out.blocks.push_back(std::move(b));
  }
  return out;
}

Symmetrizer symmetrizer(const Gcm& gcm) {
  const int n = gcm.rank();
  Symmetrizer sym;
  sym.d.assign(n, Rat(0));
  for (const IndexSet& comp : connected_components(gcm, IndexSet::full(n))) {
    std::vector<int> idx = comp.indices();
    sym.d[idx[0]] = 1;
    std::queue<int> q;
    q.push(idx[0]);
    IndexSet placed;
    placed.insert(idx[0]);
    while (!q.empty()) {
      int i = q.front();
      q.pop();
      for (int j : idx) {
        if (!gcm.edge(i, j)) continue;
        Rat want = sym.d[i] * gcm.a[i][j] / gcm.a[j][i];
        if (placed.contains(j)) {
          if (sym.d[j] != want) return Symmetrizer{};  // inconsistent cycle
        } else {
          sym.d[j] = want;
          placed.insert(j);
          q.push(j);
        }
      }
    }
    Rat mn = sym.d[idx[0]];
    for (int i : idx) mn = std::min(mn, sym.d[i]);
    for (int i : idx) sym.d[i] /= mn;
  }
  sym.exists = true;
  return sym;
}

Rat bilinear_form(const Symmetrizer& sym, const Gcm& gcm, const RootVec& x, const RootVec& y) {
  require(sym.exists, "NotSymmetrizable", "bilinear form needs a symmetrizer");
  Rat s = 0;
  for (int i = 0; i < gcm.rank(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < gcm.rank(); ++j)
      if (y[j] != 0) s += Rat(x[i]) * sym.d[i] * gcm.a[i][j] * y[j];
  }
  return s;
}

}  // namespace kmroots
