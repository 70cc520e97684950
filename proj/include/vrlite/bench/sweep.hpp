/* Copyright 2026 The vrlite Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License. */

#ifndef VRLITE_BENCH_SWEEP_HPP
#define VRLITE_BENCH_SWEEP_HPP

#include <algorithm>
#include <cmath>

#include "vrlite/bench/experiment.hpp"

namespace vrlite::bench {

/// {2^k * 1e-4 : k = 0..12}
inline std::vector<double> default_eta_grid() {
  std::vector<double> grid;
  for (int k = 0; k <= 12; ++k) grid.push_back(std::ldexp(1e-4, k));
  return grid;
}

struct SweepPoint {
  double eta = 0.0;
  bool diverged = false;
  std::optional<std::size_t> epochs_to_target;
  double final_rel_grad_norm = 0.0;
};

struct SweepResult {
  /// One entry per distinct grid value, ascending in eta.
  std::vector<SweepPoint> points;
  std::optional<double> best_eta;

  const SweepPoint *best() const {
    if (!best_eta) return nullptr;
    for (const auto &p : points)
      if (p.eta == *best_eta) return &p;
    return nullptr;
  }
};

/// Picks the constant stepsize that reaches `target` in the fewest epochs
/// (ties go to the smaller eta). Diverged runs are excluded. When no run
/// reaches the target, the lowest final relative gradient norm wins.
inline SweepResult stepsize_sweep(const ExperimentConfig &cfg, const Dataset &ds,
                                  std::vector<double> grid, double target = 1e-6) {
  if (grid.empty()) throw UsageError("stepsize grid is empty");
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  SweepResult out;
  for (double eta : grid) {
    ExperimentConfig run = cfg;
    run.eta = eta;
    const ExperimentResult r = run_experiment(run, ds, target);
    out.points.push_back({eta, r.diverged, r.diverged ? std::nullopt : r.epochs_to(target),
                          r.final_rel_grad_norm()});
  }

  const SweepPoint *best = nullptr;
  for (const auto &p : out.points) {
    if (p.diverged || !p.epochs_to_target) continue;
    if (best == nullptr || *p.epochs_to_target < *best->epochs_to_target) best = &p;
  }
  if (best == nullptr)
    for (const auto &p : out.points) {
      if (p.diverged) continue;
      if (best == nullptr || p.final_rel_grad_norm < best->final_rel_grad_norm) best = &p;
    }
  if (best != nullptr) out.best_eta = best->eta;
  return out;
}

}  // namespace vrlite::bench

#endif  // VRLITE_BENCH_SWEEP_HPP
