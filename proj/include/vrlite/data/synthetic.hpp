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

#ifndef VRLITE_DATA_SYNTHETIC_HPP
#define VRLITE_DATA_SYNTHETIC_HPP

#include "vrlite/core/types.hpp"

namespace vrlite {

struct SyntheticSpec {
  std::size_t n = 5000;
  std::size_t d = 20;
  Task task = Task::regression;
  /// Feature mean of the +1 class (the -1 class is centred at 0).
  double class_mean_shift = 1.0;
  /// Classification: per-feature std of both classes. Regression: std of
  /// the additive observation noise.
  double noise_sigma = 1.0;
  std::uint64_t seed = 1;

  void validate() const {
    if (n < 1 || d < 1) throw Error("synthetic data needs n >= 1 and d >= 1");
    if (!(noise_sigma >= 0.0)) throw Error("noise_sigma must be nonnegative");
  }
};

/// Two Gaussian blobs: the first n/2 samples are labelled -1 with features
/// N(0, sigma^2), the rest +1 with features N(shift, sigma^2).
inline Dataset gen_gaussian_classification(const SyntheticSpec &spec) {
  spec.validate();
  if (spec.n % 2 != 0) throw Error("classification data needs an even sample count");
  Rng rng(spec.seed);
  std::normal_distribution<double> unit(0.0, 1.0);
  Dataset ds(spec.d, Task::classification);
  ds.reserve(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    const bool positive = i >= spec.n / 2;
    const double mean = positive ? spec.class_mean_shift : 0.0;
    LabeledSample s{Vector(static_cast<Eigen::Index>(spec.d)), positive ? 1.0 : -1.0};
    for (Eigen::Index j = 0; j < s.features.size(); ++j)
      s.features[j] = mean + spec.noise_sigma * unit(rng);
    ds.add(std::move(s));
  }
  return ds;
}

struct RegressionData {
  Dataset data;
  /// Ground-truth weights the labels were generated from.
  Vector truth;
};

/// b = A x* + eps with standard Gaussian A and x*, eps ~ N(0, sigma^2).
inline RegressionData gen_linear_regression(const SyntheticSpec &spec) {
  spec.validate();
  Rng rng(spec.seed);
  std::normal_distribution<double> unit(0.0, 1.0);
  const auto d = static_cast<Eigen::Index>(spec.d);
  RegressionData out{Dataset(spec.d, Task::regression), Vector(d)};
  for (Eigen::Index j = 0; j < d; ++j) out.truth[j] = unit(rng);
  out.data.reserve(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    LabeledSample s{Vector(d), 0.0};
    for (Eigen::Index j = 0; j < d; ++j) s.features[j] = unit(rng);
    const double eps = unit(rng);
    s.label = s.features.dot(out.truth) + spec.noise_sigma * eps;
    out.data.add(std::move(s));
  }
  return out;
}

}  // namespace vrlite

#endif  // VRLITE_DATA_SYNTHETIC_HPP
