#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kmroots/roots.hpp"

namespace kmroots {

enum class ChainDirection { Down, Up };

// An ordered sum of root increments whose partial sums are all certified
// members of the relevant set (roots, or adjoint weights). partials[k] is
// anchor plus the first k+1 steps.
struct RootChain {
  RootVec anchor;
  std::vector<RootVec> steps;
  std::vector<RootVec> partials;
  ChainDirection direction = ChainDirection::Up;

  RootVec target() const { return partials.empty() ? anchor : partials.back(); }
};

struct ProbeCandidate {
  RootVec candidate;
  std::string reason;
};

// Outcome of an exhaustive search over a stated finite candidate set:
// either a chain, or a certificate that every candidate fails.
struct ProbeReport {
  std::string query;
  bool holds = false;  // the probed statement was verified
  std::vector<ProbeCandidate> tried;
  std::optional<RootChain> found;
  std::map<std::string, std::string> notes;

  bool empty() const { return !found.has_value(); }
};

// Classical partial sum property: beta as an ordered sum of simple roots
// with every partial sum a root. Deterministic canonical tie-break.
RootChain psp_chain(const RootDatabase& db, const RootVec& beta);

// Parabolic version: steps in the height-one slice over I, chain length
// equal to height_I(beta), every partial sum a positive root.
RootChain parabolic_psp_down(const RootDatabase& db, const IndexSet& I, const RootVec& beta);

// Upward step: some gamma of I-height one with beta + gamma a root.
struct GoingUp {
  enum class Status { Found, SupremumAttained, Unknown };
  Status status = Status::Unknown;
  std::optional<RootVec> gamma;
};
GoingUp going_up(const RootDatabase& db, const IndexSet& I, const RootVec& beta);

// Simple-root chain from alpha_i up to beta through roots.
RootChain support_chain(const RootDatabase& db, int i, const RootVec& beta);

// Simple-root chain from alpha to beta staying inside the anchored slice,
// with every later element exceeding alpha by a positive root over J.
RootChain anchored_chain(const RootDatabase& db, const RootVec& alpha, const IndexSet& J,
                         const RootVec& beta);

// Simple-root chain between comparable adjoint weights (elements of the
// root system together with zero). Greedy two-ended search.
RootChain adjoint_chain(const RootDatabase& db, const RootVec& mu0, const RootVec& mu);

enum class StepChainMode { UpFromBottom, DownFromTop, ExactConnection };

// Chain in steps of I-height one between comparable adjoint weights of a
// finite-type system: ascending from the bottom (landing at or below the
// top), descending from the top (landing at or above the bottom), or
// pinned at both ends. Exhaustive bounded DFS; emptiness comes back as a
// ProbeReport with the full candidate list.
std::variant<RootChain, ProbeReport> height_one_step_chain(const RootDatabase& db,
                                                           const IndexSet& I, const RootVec& b0,
                                                           const RootVec& b1, StepChainMode mode);

// Ungated bounded search behind height_one_step_chain; used by the
// regression probes on systems outside the finite-type contract.
ProbeReport height_one_step_probe(const RootDatabase& db, const IndexSet& I, const RootVec& b0,
                                  const RootVec& b1, StepChainMode mode);

// Short-root partial sum property in finite type: chains in steps of the
// height-one slice whose partial sums are all short roots. Down reaches
// beta from below; up climbs from beta while the I-height stays under
// that of the highest short root.
RootChain short_psp(const RootDatabase& db, const Symmetrizer& sym, const IndexSet& I,
                    const RootVec& beta, ChainDirection dir);

// Probes used by the regression fixtures.
ProbeReport probe_exact_step(const RootDatabase& db, const IndexSet& I, const RootVec& b0,
                             const RootVec& b1);
ProbeReport probe_long_root_gap(const RootDatabase& db, const Symmetrizer& sym, const IndexSet& I,
                                const RootVec& beta_low, const RootVec& beta_high);
ProbeReport probe_unique_descent(const RootDatabase& db, const RootVec& beta);

}  // namespace kmroots
