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

#ifndef VRLITE_CORE_LOSS_HPP
#define VRLITE_CORE_LOSS_HPP

#include <algorithm>
#include <cmath>

#include "vrlite/core/types.hpp"

namespace vrlite {

enum class LossKind { logistic, ridge };

inline const char *to_string(LossKind k) { return k == LossKind::logistic ? "logistic" : "ridge"; }

/// l2-regularized per-sample loss. The regularizer lambda*|x|^2 is part of
/// every term, so the mean over samples is the full regularized objective.
///
/// The logistic term is log(1 + exp(b * a'x)), i.e. the usual logistic loss
/// with the label sign flipped. Callers holding conventional labels should
/// negate them (or, equivalently, negate the fitted weights).
struct LossModel {
  static constexpr double default_lambda = 1e-4;

  LossKind kind = LossKind::ridge;
  double lambda = default_lambda;

  LossModel() = default;
  LossModel(LossKind k, double l = default_lambda) : kind(k), lambda(l) {
    if (!(l >= 0.0) || !std::isfinite(l)) throw Error("lambda must be a finite nonnegative value");
  }
};

namespace detail {

/// log(1 + exp(z)) without overflow.
inline double softplus(double z) { return std::max(z, 0.0) + std::log1p(std::exp(-std::abs(z))); }

/// exp(z) / (1 + exp(z)) without overflow.
inline double sigmoid(double z) {
  const double e = std::exp(-std::abs(z));
  return z >= 0.0 ? 1.0 / (1.0 + e) : e / (1.0 + e);
}

}  // namespace detail

inline double loss_sample(const LossModel &model, const LabeledSample &s, const Vector &x) {
  require_dimension(x, static_cast<std::size_t>(s.features.size()), "loss_sample");
  const double margin = s.features.dot(x);
  const double reg = model.lambda * x.squaredNorm();
  switch (model.kind) {
    case LossKind::logistic:
      return detail::softplus(s.label * margin) + reg;
    case LossKind::ridge: {
      const double r = margin - s.label;
      return r * r + reg;
    }
  }
  return reg;
}

/// Writes the per-sample gradient into `out` (resized if needed).
inline void grad_sample_into(const LossModel &model, const LabeledSample &s, const Vector &x,
                             Vector &out) {
  require_dimension(x, static_cast<std::size_t>(s.features.size()), "grad_sample");
  const double margin = s.features.dot(x);
  double coef = 0.0;
  switch (model.kind) {
    case LossKind::logistic:
      coef = s.label * detail::sigmoid(s.label * margin);
      break;
    case LossKind::ridge:
      coef = 2.0 * (margin - s.label);
      break;
  }
  out.noalias() = coef * s.features + (2.0 * model.lambda) * x;
}

inline Vector grad_sample(const LossModel &model, const LabeledSample &s, const Vector &x) {
  Vector g(x.size());
  grad_sample_into(model, s, x, g);
  return g;
}

}  // namespace vrlite

#endif  // VRLITE_CORE_LOSS_HPP
