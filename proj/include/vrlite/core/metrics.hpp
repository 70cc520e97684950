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

#ifndef VRLITE_CORE_METRICS_HPP
#define VRLITE_CORE_METRICS_HPP

#include <string>

#include "vrlite/core/types.hpp"

namespace vrlite {

/// One measurement, taken when an epoch closes.
struct MetricsRow {
  std::string algo;
  std::string mode;
  std::size_t workers = 1;
  std::size_t epoch = 0;
  double wall_ms = 0.0;
  double objective = 0.0;
  double rel_grad_norm = 0.0;
  double eta = 0.0;
  std::uint64_t seed = 0;

  bool operator==(const MetricsRow &) const = default;
};

/// Virtual cost of one per-sample gradient evaluation, in milliseconds.
inline constexpr double kVirtualMsPerGradient = 1e-3;

}  // namespace vrlite

#endif  // VRLITE_CORE_METRICS_HPP
