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

#ifndef VRLITE_OPTIM_EPOCH_STATE_HPP
#define VRLITE_OPTIM_EPOCH_STATE_HPP

#include "vrlite/core/types.hpp"

namespace vrlite {

/// Averages of the iterates and per-step gradients of the last closed epoch
/// (x_bar, g_bar), plus the running sums of the epoch in progress.
struct EpochAverages {
  Vector x_bar;
  Vector g_bar;
  Vector acc_x;
  Vector acc_g;
  std::size_t steps_accumulated = 0;

  static EpochAverages zeros(std::size_t d) {
    const auto n = static_cast<Eigen::Index>(d);
    return {Vector::Zero(n), Vector::Zero(n), Vector::Zero(n), Vector::Zero(n), 0};
  }

  void begin_epoch() {
    acc_x.setZero();
    acc_g.setZero();
    steps_accumulated = 0;
  }

  void accumulate(const Vector &x, const Vector &g) {
    acc_x += x;
    acc_g += g;
    ++steps_accumulated;
  }

  /// Publishes the running means as the averages used by the next epoch.
  void close() {
    if (steps_accumulated == 0) throw Error("closing an epoch with no steps");
    const double steps = static_cast<double>(steps_accumulated);
    x_bar = acc_x / steps;
    g_bar = acc_g / steps;
  }
};

/// Which gradient feeds the epoch gradient average after each step.
enum class AccumulatedGradient {
  /// grad f_i at the iterate produced by the step (one extra evaluation).
  post_update,
  /// grad f_i at the iterate the step started from, already computed.
  pre_update,
};

struct OptState {
  Vector x;
  EpochAverages averages;
  std::size_t epoch_index = 0;
  std::uint64_t rng_seed = 0;

  static OptState zeros(std::size_t d, std::uint64_t seed = 0) {
    return {Vector::Zero(static_cast<Eigen::Index>(d)), EpochAverages::zeros(d), 0, seed};
  }
};

/// Default per-step hook: does nothing.
struct NoStepObserver {
  void operator()(std::size_t, const Vector &, const Vector &) const {}
};

}  // namespace vrlite

#endif  // VRLITE_OPTIM_EPOCH_STATE_HPP
