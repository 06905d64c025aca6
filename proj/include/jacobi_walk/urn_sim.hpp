#pragma once

// Monte Carlo realization of the urn: each step mixes n + alpha + beta + 1 red
// balls with the n blue ones, draws one ball, consults the matching auxiliary
// urn, flips the chosen ball's color on a color match, and discards the reds.

#include <cstdint>
#include <vector>

#include "jacobi_walk/jacobi_core.hpp"
#include "jacobi_walk/params.hpp"
#include "jacobi_walk/random.hpp"
#include "jacobi_walk/rational.hpp"

namespace jacobi_walk {

enum class Color { blue, red };

struct StepTrace {
  State state_before = 0;
  State mixed_in = 0;  // red balls taken from the bath
  Color chosen_color = Color::red;
  Color auxiliary_color = Color::red;
  bool color_changed = false;
  State state_after = 0;

  /// Checks every structural invariant of a single urn step.
  bool consistent(const ModelParams& params) const;
};

/// Ball counts of the urns involved in one step from state n.
struct UrnCounts {
  std::int64_t main_blue;
  std::int64_t main_total;
  std::int64_t blue_side_blue;   // auxiliary urn consulted after a blue draw
  std::int64_t blue_side_total;
  std::int64_t red_side_red;     // auxiliary urn consulted after a red draw
  std::int64_t red_side_total;
};

UrnCounts urn_counts(State n, const ModelParams& params);

/// One step by explicit uniform draws from the main and auxiliary urns.
StepTrace simulate_step(State n, const ModelParams& params, RandomStream& rng);

struct StepDistribution {
  BigRational down;
  BigRational stay;
  BigRational up;
};

/// Exact law of simulate_step, by enumerating (main draw, auxiliary draw)
/// outcomes weighted by their ball counts. Uses no recurrence formula.
StepDistribution step_distribution_exact(State n, const ModelParams& params);

/// Fast path that samples the next state from precomputed (A_n, B_n, C_n)
/// instead of running the urn. Not the mechanism: never use it to validate
/// the mechanism against the coefficients.
State sample_step_from_coefficients(const StepCoefficients<double>& k, RandomStream& rng);

/// States n0, X_1, ..., X_t.
std::vector<State> simulate_trajectory(State n0, State t, const ModelParams& params, RandomStream& rng);

/// Final state after t urn steps from n0.
State simulate_terminal(State n0, State t, const ModelParams& params, RandomStream& rng);

struct TransitionEstimate {
  double probability = 0.0;
  std::uint64_t trajectories = 0;
  double standard_error = 0.0;
  State t = 0;
  State i = 0;
  State j = 0;
};

TransitionEstimate make_estimate(std::uint64_t hits, std::uint64_t trajectories, State t, State i, State j);

/// Counts of terminal states 0..n0+t over `trajectories` runs; run k uses
/// RandomStream(seed, k). Identical for any thread count (0 = hardware).
std::vector<std::uint64_t> terminal_histogram(State n0, State t, const ModelParams& params,
                                              std::uint64_t trajectories, std::uint64_t seed,
                                              unsigned threads = 1);

TransitionEstimate estimate_transition(State n0, State t, State j, const ModelParams& params,
                                       std::uint64_t trajectories, std::uint64_t seed, unsigned threads = 1);

}  // namespace jacobi_walk
