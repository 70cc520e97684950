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

#ifndef VRLITE_OPTIM_SVRG_HPP
#define VRLITE_OPTIM_SVRG_HPP

#include "vrlite/optim/vrlite.hpp"

namespace vrlite {

struct SvrgSnapshot {
  Vector point;
  Vector gradient;
};

/// One outer SVRG iteration: snapshot y = x, exact gradient at y, then
/// `inner_steps` corrected updates with indices drawn with replacement.
/// Leaves the last inner iterate in x.
template <FiniteSum F>
SvrgSnapshot svrg_epoch(Vector &x, const F &f, double eta, std::size_t inner_steps, Rng &rng) {
  const std::size_t d = f.dimension();
  require_dimension(x, d, "svrg_epoch");
  SvrgSnapshot snap{x, mean_gradient(f, x)};
  StepWorkspace ws(d);
  std::uniform_int_distribution<std::size_t> pick(0, f.size() - 1);
  for (std::size_t k = 0; k < inner_steps; ++k) {
    const std::size_t i = pick(rng);
    f.gradient(i, x, ws.fresh);
    f.gradient(i, snap.point, ws.anchor);
    apply_corrected_step(x, ws.fresh, ws.anchor, snap.gradient, eta);
  }
  return snap;
}

inline std::size_t svrg_default_inner_steps(std::size_t n) { return 2 * n; }

inline std::size_t svrg_epoch_evals(std::size_t n, std::size_t inner_steps) {
  return n + 2 * inner_steps;
}

}  // namespace vrlite

#endif  // VRLITE_OPTIM_SVRG_HPP
