#include "kmroots/lp.hpp"

#include <cassert>
#include <cstddef>

namespace kmroots::lp {

namespace {

struct Tableau {
  // rows: m x (ncols + 1), last entry = rhs (kept >= 0)
  std::vector<std::vector<Rat>> t;
  std::vector<Rat> cost;  // reduced costs, length ncols + 1 (last = -objective)
  std::vector<int> basis;
  int ncols = 0;

  void pivot(int r, int j) {
    Rat piv = t[r][j];
    for (auto& v : t[r]) v /= piv;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (static_cast<int>(i) == r || t[i][j] == 0) continue;
      Rat f = t[i][j];
      for (int k = 0; k <= ncols; ++k) t[i][k] -= f * t[r][k];
    }
    if (cost[j] != 0) {
      Rat f = cost[j];
      for (int k = 0; k <= ncols; ++k) cost[k] -= f * t[r][k];
    }
    basis[r] = j;
  }
};

}  // namespace

Feasibility solve(const Problem& p) {
  const int n = p.nvars;
  const int m = static_cast<int>(p.rows.size());

  // Standard form: append one slack/surplus column per inequality row,
  // then one artificial column per row; flip rows so rhs >= 0.
  int nslack = 0;
  for (const auto& r : p.rows)
    if (r.rel != Rel::Eq) ++nslack;
  const int ncols = n + nslack + m;

  Tableau tab;
  tab.ncols = ncols;
  tab.t.assign(m, std::vector<Rat>(ncols + 1, Rat(0)));
  tab.cost.assign(ncols + 1, Rat(0));
  tab.basis.assign(m, -1);

  std::vector<int> flipped(m, 0);
  int slack_at = n;
  for (int i = 0; i < m; ++i) {
    const Row& row = p.rows[i];
    assert(static_cast<int>(row.a.size()) == n);
    for (int j = 0; j < n; ++j) tab.t[i][j] = row.a[j];
    if (row.rel == Rel::Le)
      tab.t[i][slack_at++] = 1;
    else if (row.rel == Rel::Ge)
      tab.t[i][slack_at++] = -1;
    tab.t[i][ncols] = row.b;
    if (tab.t[i][ncols] < 0) {
      flipped[i] = 1;
      for (int k = 0; k <= ncols; ++k) tab.t[i][k] = -tab.t[i][k];
    }
    int art = n + nslack + i;
    tab.t[i][art] = 1;
    tab.basis[i] = art;
  }

  // Phase-1 objective: minimize sum of artificials. Reduced costs with the
  // artificial basis: rc_j = c_j - sum_i t[i][j], c_j = 1 on artificials.
  for (int j = 0; j < ncols; ++j) {
    Rat s = 0;
    for (int i = 0; i < m; ++i) s += tab.t[i][j];
    Rat c = (j >= n + nslack) ? Rat(1) : Rat(0);
    tab.cost[j] = c - s;
  }
  {
    Rat s = 0;
    for (int i = 0; i < m; ++i) s += tab.t[i][ncols];
    tab.cost[ncols] = -s;  // negative of current objective
  }

  for (;;) {
    int enter = -1;
    for (int j = 0; j < ncols; ++j)
      if (tab.cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    Rat best = 0;
    for (int i = 0; i < m; ++i) {
      if (tab.t[i][enter] <= 0) continue;
      Rat ratio = tab.t[i][ncols] / tab.t[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && tab.basis[i] < tab.basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    assert(leave >= 0);  // phase-1 objective is bounded below by 0
    tab.pivot(leave, enter);
  }

  Feasibility out;
  Rat objective = -tab.cost[ncols];
  if (objective > 0) {
    out.feasible = false;
    // Dual y from final reduced costs of the artificial columns:
    // rc(art_i) = 1 - y_i, then unflip rows.
    out.y.assign(m, Rat(0));
    for (int i = 0; i < m; ++i) {
      Rat yi = Rat(1) - tab.cost[n + nslack + i];
      out.y[i] = flipped[i] ? -yi : yi;
    }
    return out;
  }

  out.feasible = true;
  out.x.assign(n, Rat(0));
  for (int i = 0; i < m; ++i)
    if (tab.basis[i] < n) out.x[tab.basis[i]] = tab.t[i][ncols];
  return out;
}

}  // namespace kmroots::lp
