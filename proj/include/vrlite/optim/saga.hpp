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

#ifndef VRLITE_OPTIM_SAGA_HPP
#define VRLITE_OPTIM_SAGA_HPP

#include "vrlite/optim/vrlite.hpp"

namespace vrlite {

/// Most recent gradient of every term, one column per term, and their mean.
struct SagaState {
  Eigen::MatrixXd grad_table;
  Vector table_mean;

  std::size_t size() const { return static_cast<std::size_t>(grad_table.cols()); }

  /// Mean of the table recomputed from scratch, in column order.
  Vector recomputed_mean() const {
    Vector sum = Vector::Zero(grad_table.rows());
    for (Eigen::Index j = 0; j < grad_table.cols(); ++j) sum += grad_table.col(j);
    return sum / static_cast<double>(grad_table.cols());
  }
};

/// Fills the table with grad f_i(x0) for every term.
template <FiniteSum F>
SagaState saga_init(const F &f, const Vector &x0) {
  const std::size_t d = f.dimension();
  require_dimension(x0, d, "saga_init");
  if (f.size() == 0) throw Error("saga_init on an empty data set");
  SagaState st{Eigen::MatrixXd(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(f.size())),
               Vector()};
  Vector g(static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < f.size(); ++i) {
    f.gradient(i, x0, g);
    st.grad_table.col(static_cast<Eigen::Index>(i)) = g;
  }
  st.table_mean = st.recomputed_mean();
  return st;
}

/// x <- x - eta * (grad f_i(x) - table[i] + mean), then table[i] takes the
/// fresh gradient and the mean is updated incrementally.
template <FiniteSum F>
void saga_step(Vector &x, std::size_t i, const F &f, SagaState &st, double eta, Vector &scratch) {
  if (i >= st.size()) throw Error("saga_step: term index " + std::to_string(i) + " out of range");
  f.gradient(i, x, scratch);
  auto old = st.grad_table.col(static_cast<Eigen::Index>(i));
  x.noalias() -= eta * (scratch - old + st.table_mean);
  st.table_mean += (scratch - old) / static_cast<double>(st.size());
  old = scratch;
}

template <FiniteSum F>
void saga_step(Vector &x, std::size_t i, const F &f, SagaState &st, double eta) {
  Vector scratch(x.size());
  saga_step(x, i, f, st, eta, scratch);
}

/// n SAGA steps in permutation order.
template <FiniteSum F, class Observer = NoStepObserver>
void saga_epoch(Vector &x, const F &f, SagaState &st, double eta, Rng &rng, Observer &&obs = {}) {
  require_dimension(x, f.dimension(), "saga_epoch");
  Vector scratch(x.size());
  PermutationSampler order(f.size(), rng);
  while (!order.done()) {
    const std::size_t i = order.next();
    saga_step(x, i, f, st, eta, scratch);
    obs(i, x, scratch);
  }
}

}  // namespace vrlite

#endif  // VRLITE_OPTIM_SAGA_HPP
