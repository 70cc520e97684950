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

#ifndef VRLITE_CORE_TYPES_HPP
#define VRLITE_CORE_TYPES_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace vrlite {

using Vector = Eigen::VectorXd;

/// Seeded generator shared by every randomized component.
using Rng = std::mt19937_64;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

enum class Task { classification, regression };

inline const char *to_string(Task t) {
  return t == Task::classification ? "classification" : "regression";
}

struct LabeledSample {
  Vector features;
  double label = 0.0;
};

/// Dense finite-sum data set. Every sample has `dimension` features.
class Dataset {
 public:
  Dataset() = default;
  Dataset(std::size_t dimension, Task task) : dimension_(dimension), task_(task) {}

  void add(LabeledSample s) {
    if (static_cast<std::size_t>(s.features.size()) != dimension_)
      throw DimensionError("sample has " + std::to_string(s.features.size()) +
                           " features, dataset expects " + std::to_string(dimension_));
    samples_.push_back(std::move(s));
  }

  void reserve(std::size_t n) { samples_.reserve(n); }

  std::size_t size() const { return samples_.size(); }
  bool empty() const { return samples_.empty(); }
  std::size_t dimension() const { return dimension_; }
  Task task() const { return task_; }

  const LabeledSample &operator[](std::size_t i) const { return samples_[i]; }
  const std::vector<LabeledSample> &samples() const { return samples_; }

 private:
  std::size_t dimension_ = 0;
  Task task_ = Task::regression;
  std::vector<LabeledSample> samples_;
};

inline bool all_finite(const Vector &v) { return v.allFinite(); }

inline void require_dimension(const Vector &v, std::size_t d, const char *what) {
  if (static_cast<std::size_t>(v.size()) != d)
    throw DimensionError(std::string(what) + ": expected dimension " + std::to_string(d) +
                         ", got " + std::to_string(v.size()));
}

}  // namespace vrlite

#endif  // VRLITE_CORE_TYPES_HPP
