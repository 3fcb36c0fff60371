#pragma once

#include <vector>

#include "kmroots/rational.hpp"

namespace kmroots::lp {

enum class Rel { Le, Eq, Ge };

struct Row {
  std::vector<Rat> a;
  Rel rel = Rel::Eq;
  Rat b = 0;
};

// Feasibility problem over x >= 0.
struct Problem {
  int nvars = 0;
  std::vector<Row> rows;

  void add_row(std::vector<Rat> a, Rel rel, Rat b) { rows.push_back({std::move(a), rel, std::move(b)}); }
};

struct Feasibility {
  bool feasible = false;
  // Witness x >= 0 satisfying every row, when feasible.
  std::vector<Rat> x;
  // Farkas multipliers y (one per original row) when infeasible:
  //   sum_i y_i * a_i <= 0 componentwise, and sum_i y_i * b_i > 0,
  // with y_i <= 0 on Le rows and y_i >= 0 on Ge rows.
  std::vector<Rat> y;
};

// Exact phase-1 simplex with Bland's anti-cycling rule. Deterministic.
Feasibility solve(const Problem& p);

}  // namespace kmroots::lp
