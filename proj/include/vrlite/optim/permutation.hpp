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

#ifndef VRLITE_OPTIM_PERMUTATION_HPP
#define VRLITE_OPTIM_PERMUTATION_HPP

#include <numeric>

#include "vrlite/core/types.hpp"

namespace vrlite {

/// One pass over {0, ..., n-1} in random order, without replacement.
class PermutationSampler {
 public:
  PermutationSampler(std::size_t n, Rng &rng) : order_(n) {
    if (n == 0) throw Error("permutation of zero elements");
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    // Fisher-Yates, back to front.
    for (std::size_t i = n - 1; i > 0; --i) {
      std::uniform_int_distribution<std::size_t> pick(0, i);
      std::swap(order_[i], order_[pick(rng)]);
    }
  }

  bool done() const { return cursor_ == order_.size(); }
  std::size_t next() { return order_[cursor_++]; }
  std::size_t cursor() const { return cursor_; }
  const std::vector<std::size_t> &order() const { return order_; }

 private:
  std::vector<std::size_t> order_;
  std::size_t cursor_ = 0;
};

inline PermutationSampler permutation(std::size_t n, Rng &rng) { return PermutationSampler(n, rng); }

}  // namespace vrlite

#endif  // VRLITE_OPTIM_PERMUTATION_HPP
