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

#ifndef VRLITE_CORE_FINITE_SUM_HPP
#define VRLITE_CORE_FINITE_SUM_HPP

#include <concepts>
#include <span>
#include <utility>

#include "vrlite/core/loss.hpp"

namespace vrlite {

/// f(x) = (1/n) sum_i f_i(x), addressed term by term.
template <class F>
concept FiniteSum = requires(const F &f, std::size_t i, const Vector &x, Vector &out) {
  { f.size() } -> std::convertible_to<std::size_t>;
  { f.dimension() } -> std::convertible_to<std::size_t>;
  { f.loss(i, x) } -> std::convertible_to<double>;
  f.gradient(i, x, out);
};

/// Regularized ERM problem over a borrowed data set.
class ErmProblem {
 public:
  ErmProblem(const Dataset &data, LossModel model) : data_(&data), model_(model) {}

  std::size_t size() const { return data_->size(); }
  std::size_t dimension() const { return data_->dimension(); }
  double loss(std::size_t i, const Vector &x) const { return loss_sample(model_, (*data_)[i], x); }
  void gradient(std::size_t i, const Vector &x, Vector &out) const {
    grad_sample_into(model_, (*data_)[i], x, out);
  }

  const Dataset &data() const { return *data_; }
  const LossModel &model() const { return model_; }

 private:
  const Dataset *data_;
  LossModel model_;
};

/// Restriction of a finite sum to a subset of its terms, in the given order.
template <FiniteSum F>
class IndexSubset {
 public:
  IndexSubset(const F &base, std::vector<std::size_t> indices)
      : base_(&base), indices_(std::move(indices)) {}

  std::size_t size() const { return indices_.size(); }
  std::size_t dimension() const { return base_->dimension(); }
  double loss(std::size_t i, const Vector &x) const { return base_->loss(indices_[i], x); }
  void gradient(std::size_t i, const Vector &x, Vector &out) const {
    base_->gradient(indices_[i], x, out);
  }

  std::span<const std::size_t> indices() const { return indices_; }

 private:
  const F *base_;
  std::vector<std::size_t> indices_;
};

/// Mean of f_i(x), summed in index order.
template <FiniteSum F>
double mean_loss(const F &f, const Vector &x) {
  if (f.size() == 0) throw Error("objective of an empty data set");
  double sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) sum += f.loss(i, x);
  return sum / static_cast<double>(f.size());
}

/// Mean of grad f_i(x), summed in index order.
template <FiniteSum F>
Vector mean_gradient(const F &f, const Vector &x) {
  if (f.size() == 0) throw Error("gradient of an empty data set");
  Vector sum = Vector::Zero(static_cast<Eigen::Index>(f.dimension()));
  Vector g(sum.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    f.gradient(i, x, g);
    sum += g;
  }
  return sum / static_cast<double>(f.size());
}

inline double objective(const LossModel &model, const Dataset &ds, const Vector &x) {
  return mean_loss(ErmProblem(ds, model), x);
}

inline Vector full_gradient(const LossModel &model, const Dataset &ds, const Vector &x) {
  return mean_gradient(ErmProblem(ds, model), x);
}

/// |grad f(x)| / |grad f(x0)|.
inline double rel_grad_norm(const LossModel &model, const Dataset &ds, const Vector &x,
                            const Vector &x0) {
  const double base = full_gradient(model, ds, x0).norm();
  if (!(base > 0.0)) throw Error("reference point is already stationary (zero gradient)");
  return full_gradient(model, ds, x).norm() / base;
}

/// Caches |grad f(x0)| so repeated measurements cost one gradient pass each.
class GradientNormMeter {
 public:
  GradientNormMeter(const LossModel &model, const Dataset &ds, const Vector &x0)
      : model_(model), data_(&ds), base_(full_gradient(model, ds, x0).norm()) {
    if (!(base_ > 0.0)) throw Error("reference point is already stationary (zero gradient)");
  }

  double operator()(const Vector &x) const { return full_gradient(model_, *data_, x).norm() / base_; }
  double objective(const Vector &x) const { return vrlite::objective(model_, *data_, x); }
  double reference_norm() const { return base_; }

 private:
  LossModel model_;
  const Dataset *data_;
  double base_;
};

}  // namespace vrlite

#endif  // VRLITE_CORE_FINITE_SUM_HPP
