#include "jacobi_walk/urn_sim.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace jacobi_walk {

bool StepTrace::consistent(const ModelParams& params) const {
  if (mixed_in != state_before + params.alpha + params.beta + 1) return false;
  if (color_changed != (chosen_color == auxiliary_color)) return false;
  State expected = state_before;
  if (color_changed) expected += chosen_color == Color::blue ? -1 : 1;
  return state_after == expected && state_after >= 0;
}

UrnCounts urn_counts(State n, const ModelParams& params) {
  if (n < 0) throw std::invalid_argument("urn: state must be >= 0");
  const std::int64_t ab = params.alpha + params.beta;
  return UrnCounts{
      .main_blue = n,
      .main_total = 2 * n + ab + 1,
      .blue_side_blue = n + params.alpha,
      .blue_side_total = 2 * n + ab,
      .red_side_red = n + params.beta + 1,
      .red_side_total = 2 * n + ab + 2,
  };
}

StepTrace simulate_step(State n, const ModelParams& params, RandomStream& rng) {
  const auto u = urn_counts(n, params);
  StepTrace tr;
  tr.state_before = n;
  tr.mixed_in = n + params.alpha + params.beta + 1;

  // Balls 0..n-1 of the main urn are the blue ones.
  const auto pick = static_cast<std::int64_t>(rng.uniform_below(static_cast<std::uint64_t>(u.main_total)));
  tr.chosen_color = pick < u.main_blue ? Color::blue : Color::red;

  if (tr.chosen_color == Color::blue) {
    const auto aux = static_cast<std::int64_t>(rng.uniform_below(static_cast<std::uint64_t>(u.blue_side_total)));
    tr.auxiliary_color = aux < u.blue_side_blue ? Color::blue : Color::red;
  } else {
    const auto aux = static_cast<std::int64_t>(rng.uniform_below(static_cast<std::uint64_t>(u.red_side_total)));
    tr.auxiliary_color = aux < u.red_side_red ? Color::red : Color::blue;
  }
  tr.color_changed = tr.chosen_color == tr.auxiliary_color;

  // Removing the reds leaves the original blues, minus one that turned red
  // or plus one that turned blue.
  tr.state_after = n;
  if (tr.color_changed) tr.state_after += tr.chosen_color == Color::blue ? -1 : 1;

  assert(tr.consistent(params));
  return tr;
}

StepDistribution step_distribution_exact(State n, const ModelParams& params) {
  const auto u = urn_counts(n, params);
  StepDistribution d{BigRational(0), BigRational(0), BigRational(0)};

  struct Branch {
    std::int64_t chosen;       // balls of the chosen color in the main urn
    std::int64_t match;        // balls of the same color in the auxiliary urn
    std::int64_t aux_total;
    BigRational* on_match;
  };
  const Branch branches[] = {
      {u.main_blue, u.blue_side_blue, u.blue_side_total, &d.down},
      {u.main_total - u.main_blue, u.red_side_red, u.red_side_total, &d.up},
  };
  for (const auto& b : branches) {
    if (b.chosen == 0) continue;  // branch unreachable; its auxiliary urn is never formed
    const BigRational p_chosen = ratio(b.chosen, u.main_total);
    *b.on_match += p_chosen * ratio(b.match, b.aux_total);
    d.stay += p_chosen * ratio(b.aux_total - b.match, b.aux_total);
  }
  return d;
}

State sample_step_from_coefficients(const StepCoefficients<double>& k, RandomStream& rng) {
  const double r = rng.uniform01();
  if (r < k.c) return k.n - 1;
  if (r < k.c + k.b) return k.n;
  return k.n + 1;
}

std::vector<State> simulate_trajectory(State n0, State t, const ModelParams& params, RandomStream& rng) {
  if (n0 < 0 || t < 0) throw std::invalid_argument("simulate_trajectory: n0 and t must be >= 0");
  std::vector<State> path;
  path.reserve(static_cast<std::size_t>(t) + 1);
  path.push_back(n0);
  for (State s = 0; s < t; ++s) path.push_back(simulate_step(path.back(), params, rng).state_after);
  return path;
}

State simulate_terminal(State n0, State t, const ModelParams& params, RandomStream& rng) {
  if (n0 < 0 || t < 0) throw std::invalid_argument("simulate_terminal: n0 and t must be >= 0");
  State n = n0;
  for (State s = 0; s < t; ++s) n = simulate_step(n, params, rng).state_after;
  return n;
}

TransitionEstimate make_estimate(std::uint64_t hits, std::uint64_t trajectories, State t, State i, State j) {
  if (trajectories == 0) throw std::invalid_argument("estimate: trajectories must be >= 1");
  TransitionEstimate e;
  e.trajectories = trajectories;
  e.probability = static_cast<double>(hits) / static_cast<double>(trajectories);
  e.standard_error = std::sqrt(e.probability * (1.0 - e.probability) / static_cast<double>(trajectories));
  e.t = t;
  e.i = i;
  e.j = j;
  return e;
}

std::vector<std::uint64_t> terminal_histogram(State n0, State t, const ModelParams& params,
                                              std::uint64_t trajectories, std::uint64_t seed, unsigned threads) {
  if (n0 < 0 || t < 0) throw std::invalid_argument("terminal_histogram: n0 and t must be >= 0");
  if (trajectories == 0) throw std::invalid_argument("terminal_histogram: trajectories must be >= 1");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, trajectories));

  const auto bins = static_cast<std::size_t>(n0 + t + 1);
  auto run = [&](std::uint64_t first, std::uint64_t last, std::vector<std::uint64_t>& counts) {
    counts.assign(bins, 0);
    for (std::uint64_t k = first; k < last; ++k) {
      RandomStream rng(seed, k);
      ++counts[static_cast<std::size_t>(simulate_terminal(n0, t, params, rng))];
    }
  };

  std::vector<std::vector<std::uint64_t>> partial(threads);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      const std::uint64_t first = trajectories * w / threads;
      const std::uint64_t last = trajectories * (w + 1) / threads;
      if (w + 1 == threads) {
        run(first, last, partial[w]);
      } else {
        pool.emplace_back([&, first, last, w] { run(first, last, partial[w]); });
      }
    }
  }

  std::vector<std::uint64_t> total(bins, 0);
  for (const auto& p : partial) {
    for (std::size_t b = 0; b < bins; ++b) total[b] += p[b];
  }
  return total;
}

TransitionEstimate estimate_transition(State n0, State t, State j, const ModelParams& params,
                                       std::uint64_t trajectories, std::uint64_t seed, unsigned threads) {
  if (j < 0) throw std::invalid_argument("estimate_transition: j must be >= 0");
  if (j > n0 + t) return make_estimate(0, trajectories, t, n0, j);
  const auto h = terminal_histogram(n0, t, params, trajectories, seed, threads);
  return make_estimate(h[static_cast<std::size_t>(j)], trajectories, t, n0, j);
}

}  // namespace jacobi_walk
