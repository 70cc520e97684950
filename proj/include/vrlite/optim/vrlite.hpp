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

#ifndef VRLITE_OPTIM_VRLITE_HPP
#define VRLITE_OPTIM_VRLITE_HPP

#include "vrlite/core/finite_sum.hpp"
#include "vrlite/optim/epoch_state.hpp"
#include "vrlite/optim/permutation.hpp"

namespace vrlite {

struct VrliteOptions {
  AccumulatedGradient accumulated_gradient = AccumulatedGradient::post_update;
};

/// x <- x - eta * (g_fresh - g_anchor + g_bar)
inline void apply_corrected_step(Vector &x, const Vector &g_fresh, const Vector &g_anchor,
                                 const Vector &g_bar, double eta) {
  x.noalias() -= eta * (g_fresh - g_anchor + g_bar);
}

/// Scratch vectors reused across the steps of one epoch.
struct StepWorkspace {
  Vector fresh;
  Vector anchor;
  Vector post;

  explicit StepWorkspace(std::size_t d)
      : fresh(static_cast<Eigen::Index>(d)),
        anchor(static_cast<Eigen::Index>(d)),
        post(static_cast<Eigen::Index>(d)) {}
};

/// One corrected update on term i, anchored at the previous epoch's averages.
/// On return ws.fresh holds grad f_i at the pre-update x.
template <FiniteSum F>
void vrlite_step(Vector &x, const F &f, std::size_t i, const EpochAverages &avg, double eta,
                 StepWorkspace &ws) {
  f.gradient(i, x, ws.fresh);
  f.gradient(i, avg.x_bar, ws.anchor);
  apply_corrected_step(x, ws.fresh, ws.anchor, avg.g_bar, eta);
}

namespace detail {

template <FiniteSum F, class Observer>
void accumulate_step(OptState &st, const F &f, std::size_t i, AccumulatedGradient mode,
                     StepWorkspace &ws, Observer &obs) {
  const Vector *g = &ws.fresh;
  if (mode == AccumulatedGradient::post_update) {
    f.gradient(i, st.x, ws.post);
    g = &ws.post;
  }
  st.averages.accumulate(st.x, *g);
  obs(i, st.x, *g);
}

}  // namespace detail

/// One pass of plain constant-stepsize SGD in permutation order. Keeps the
/// same epoch accumulators as the variance-reduced epoch.
template <FiniteSum F, class Observer = NoStepObserver>
void sgd_epoch(OptState &st, const F &f, double eta, Rng &rng, const VrliteOptions &opt = {},
               Observer &&obs = {}) {
  const std::size_t d = f.dimension();
  require_dimension(st.x, d, "sgd_epoch");
  StepWorkspace ws(d);
  PermutationSampler order(f.size(), rng);
  st.averages.begin_epoch();
  while (!order.done()) {
    const std::size_t i = order.next();
    f.gradient(i, st.x, ws.fresh);
    st.x.noalias() -= eta * ws.fresh;
    detail::accumulate_step(st, f, i, opt.accumulated_gradient, ws, obs);
  }
  st.averages.close();
  ++st.epoch_index;
}

/// Bootstraps x, x_bar and g_bar with one plain SGD epoch from x = 0.
template <FiniteSum F, class Observer = NoStepObserver>
OptState vrlite_init(const F &f, double eta, Rng &rng, const VrliteOptions &opt = {},
                     Observer &&obs = {}) {
  OptState st = OptState::zeros(f.dimension());
  sgd_epoch(st, f, eta, rng, opt, obs);
  return st;
}

/// One variance-reduced epoch: n corrected steps over a fresh permutation,
/// then the running means become x_bar and g_bar for the next epoch.
template <FiniteSum F, class Observer = NoStepObserver>
void vrlite_epoch(OptState &st, const F &f, double eta, Rng &rng, const VrliteOptions &opt = {},
                  Observer &&obs = {}) {
  const std::size_t d = f.dimension();
  require_dimension(st.x, d, "vrlite_epoch");
  require_dimension(st.averages.x_bar, d, "vrlite_epoch averages");
  StepWorkspace ws(d);
  PermutationSampler order(f.size(), rng);
  st.averages.begin_epoch();
  while (!order.done()) {
    const std::size_t i = order.next();
    vrlite_step(st.x, f, i, st.averages, eta, ws);
    detail::accumulate_step(st, f, i, opt.accumulated_gradient, ws, obs);
  }
  st.averages.close();
  ++st.epoch_index;
}

/// Gradient evaluations spent by one epoch over n terms.
inline std::size_t vrlite_epoch_evals(std::size_t n, const VrliteOptions &opt) {
  return n * (opt.accumulated_gradient == AccumulatedGradient::post_update ? 3 : 2);
}

inline std::size_t sgd_epoch_evals(std::size_t n, const VrliteOptions &opt) {
  return n * (opt.accumulated_gradient == AccumulatedGradient::post_update ? 2 : 1);
}

}  // namespace vrlite

#endif  // VRLITE_OPTIM_VRLITE_HPP
