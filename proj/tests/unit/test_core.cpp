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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "support/oracles.hpp"
#include "vrlite/core/finite_sum.hpp"
#include "vrlite/data/synthetic.hpp"

using namespace vrlite;
using vrlite::testing::central_difference;
using vrlite::testing::max_relative_error;
using vrlite::testing::random_vector;

namespace {

LabeledSample sample(std::initializer_list<double> a, double b) {
  LabeledSample s{Vector(static_cast<Eigen::Index>(a.size())), b};
  Eigen::Index j = 0;
  for (double v : a) s.features[j++] = v;
  return s;
}

Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index j = 0;
  for (double e : v) out[j++] = e;
  return out;
}

const Dataset &toy_ridge() {
  static const Dataset ds = gen_linear_regression(SyntheticSpec{}).data;
  return ds;
}

}  // namespace

TEST_CASE("loss_sample hand-evaluated values", "[core]") {
  CHECK(loss_sample(LossModel(LossKind::ridge, 0.0), sample({1, 0}, 2), vec({0, 0})) == 4.0);
  CHECK(loss_sample(LossModel(LossKind::logistic, 0.0), sample({1, 1}, 1), vec({0, 0})) ==
        Catch::Approx(0.693147).margin(1e-6));
  CHECK(loss_sample(LossModel(LossKind::logistic, 0.0), sample({1, 1}, 1), vec({0, 0})) ==
        std::log(2.0));
  for (double lambda : {0.0, 1e-4, 3.0}) {
    CHECK(loss_sample(LossModel(LossKind::ridge, lambda), sample({1, 0}, 2), vec({0, 0})) == 4.0);
    CHECK(loss_sample(LossModel(LossKind::logistic, lambda), sample({1, 1}, 1), vec({0, 0})) ==
          std::log(2.0));
  }
}

TEST_CASE("grad_sample hand-evaluated values", "[core]") {
  const Vector g1 = grad_sample(LossModel(LossKind::logistic, 0.0), sample({1, 1}, 1), vec({0, 0}));
  CHECK(g1 == vec({0.5, 0.5}));
  const Vector g2 = grad_sample(LossModel(LossKind::ridge, 0.0), sample({1, 0}, 2), vec({0, 0}));
  CHECK(g2 == vec({-4, 0}));
  const Vector g3 = grad_sample(LossModel(LossKind::ridge, 1e-4), sample({0, 0}, 0), vec({1, 1}));
  CHECK(g3[0] == Catch::Approx(2e-4).epsilon(1e-12));
  CHECK(g3[1] == Catch::Approx(2e-4).epsilon(1e-12));
}

TEST_CASE("grad_sample agrees with central differences of an independent loss", "[core]") {
  std::mt19937_64 rng(7);
  for (LossKind kind : {LossKind::logistic, LossKind::ridge}) {
    const LossModel model(kind, 1e-4);
    for (int trial = 0; trial < 50; ++trial) {
      const Vector a = random_vector(5, rng);
      const double b = kind == LossKind::logistic ? (trial % 2 ? 1.0 : -1.0) : a.sum() + 0.3;
      const Vector x = random_vector(5, rng);
      const auto f = [&](const Vector &z) {
        return testing::reference_loss(kind == LossKind::logistic, a, b, z, model.lambda);
      };
      const Vector analytic = grad_sample(model, LabeledSample{a, b}, x);
      INFO(to_string(kind) << " trial " << trial);
      CHECK(max_relative_error(analytic, central_difference(f, x)) <= 1e-5);
    }
  }
}

TEST_CASE("logistic terms stay finite for huge margins", "[core]") {
  const LossModel model(LossKind::logistic, 0.0);
  for (double b : {1.0, -1.0}) {
    const auto s = sample({1000, 0}, b);
    const Vector x = vec({1, 0});
    const double l = loss_sample(model, s, x);
    const Vector g = grad_sample(model, s, x);
    CHECK(std::isfinite(l));
    CHECK(g.allFinite());
  }
  // log(1 + e^1000) = 1000 to double precision; the gradient saturates at b*a.
  CHECK(loss_sample(model, sample({1000, 0}, 1), vec({1, 0})) == 1000.0);
  CHECK(grad_sample(model, sample({1000, 0}, 1), vec({1, 0}))[0] == 1000.0);
  CHECK(grad_sample(model, sample({1000, 0}, -1), vec({1, 0}))[0] == Catch::Approx(0.0).margin(1e-300));
}

TEST_CASE("dimension mismatch is rejected", "[core]") {
  const LossModel model(LossKind::ridge);
  CHECK_THROWS_AS(loss_sample(model, sample({1, 0}, 1), vec({0, 0, 0})), DimensionError);
  CHECK_THROWS_AS(grad_sample(model, sample({1, 0}, 1), vec({0})), DimensionError);
  Dataset ds(2, Task::regression);
  CHECK_THROWS_AS(ds.add(sample({1, 2, 3}, 0)), DimensionError);
  CHECK_THROWS_AS(LossModel(LossKind::ridge, -1.0), Error);
}

TEST_CASE("objective and full_gradient over tiny data sets", "[core]") {
  const LossModel model(LossKind::logistic, 1e-4);
  const auto s = sample({0.3, -1.2}, -1);
  const Vector x = vec({0.7, 0.1});
  Dataset one(2, Task::classification);
  one.add(s);
  CHECK(objective(model, one, x) == loss_sample(model, s, x));
  CHECK(full_gradient(model, one, x) == grad_sample(model, s, x));

  Dataset two(2, Task::classification);
  two.add(s);
  two.add(s);
  CHECK(objective(model, two, x) == Catch::Approx(loss_sample(model, s, x)).epsilon(1e-15));

  Dataset empty(2, Task::classification);
  CHECK_THROWS_AS(objective(model, empty, x), Error);
  CHECK_THROWS_AS(full_gradient(model, empty, x), Error);
}

TEST_CASE("objective vanishes at the generating point of noiseless ridge data", "[core]") {
  SyntheticSpec spec;
  spec.noise_sigma = 0.0;
  const auto reg = gen_linear_regression(spec);
  CHECK(objective(LossModel(LossKind::ridge, 0.0), reg.data, reg.truth) ==
        Catch::Approx(0.0).margin(1e-24));
}

TEST_CASE("full_gradient is the mean of per-sample gradients", "[core]") {
  const auto &ds = toy_ridge();
  const LossModel model(LossKind::ridge);
  std::mt19937_64 rng(3);
  const Vector x = random_vector(ds.dimension(), rng);
  Vector sum = Vector::Zero(x.size());
  for (const auto &s : ds.samples()) sum += grad_sample(model, s, x);
  CHECK((full_gradient(model, ds, x) - sum / static_cast<double>(ds.size())).cwiseAbs().maxCoeff() <=
        1e-12);
}

TEST_CASE("full_gradient vanishes at the normal-equations minimizer", "[core]") {
  const auto &ds = toy_ridge();
  const LossModel model(LossKind::ridge);
  const Vector x_star = testing::ridge_minimizer(ds, model.lambda);
  const Vector x0 = Vector::Zero(x_star.size());
  CHECK(full_gradient(model, ds, x_star).norm() <= 1e-8);
  CHECK(rel_grad_norm(model, ds, x_star, x0) <= 1e-8 / full_gradient(model, ds, x0).norm());
}

TEST_CASE("full_gradient is linear over disjoint partitions", "[core][property]") {
  const auto &ds = toy_ridge();
  std::mt19937_64 rng(11);
  for (LossKind kind : {LossKind::ridge, LossKind::logistic}) {
    const ErmProblem problem(ds, LossModel(kind));
    for (int trial = 0; trial < 10; ++trial) {
      const Vector x = random_vector(ds.dimension(), rng, 0.3);
      std::vector<std::size_t> left, right;
      std::bernoulli_distribution coin(0.3);
      for (std::size_t i = 0; i < ds.size(); ++i) (coin(rng) ? left : right).push_back(i);
      const IndexSubset<ErmProblem> a(problem, left), b(problem, right);
      const double n = static_cast<double>(ds.size());
      const Vector combined = (static_cast<double>(left.size()) / n) * mean_gradient(a, x) +
                              (static_cast<double>(right.size()) / n) * mean_gradient(b, x);
      CHECK((combined - mean_gradient(problem, x)).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
}

TEST_CASE("objective is midpoint convex", "[core][property]") {
  const auto &ds = toy_ridge();
  std::mt19937_64 rng(5);
  for (LossKind kind : {LossKind::ridge, LossKind::logistic}) {
    const LossModel model(kind);
    for (int trial = 0; trial < 100; ++trial) {
      const Vector u = random_vector(ds.dimension(), rng);
      const Vector v = random_vector(ds.dimension(), rng);
      CHECK(objective(model, ds, (u + v) / 2.0) <=
            (objective(model, ds, u) + objective(model, ds, v)) / 2.0 + 1e-12);
    }
  }
}

TEST_CASE("rel_grad_norm at the reference point is exactly one", "[core]") {
  const auto &ds = toy_ridge();
  const LossModel model(LossKind::ridge);
  std::mt19937_64 rng(9);
  const Vector x0 = random_vector(ds.dimension(), rng);
  CHECK(rel_grad_norm(model, ds, x0, x0) == 1.0);
  const Vector x = random_vector(ds.dimension(), rng);
  CHECK(rel_grad_norm(model, ds, x, x0) == rel_grad_norm(model, ds, x, x0));
}

TEST_CASE("rel_grad_norm rejects a stationary reference point", "[core]") {
  Dataset ds(2, Task::regression);
  ds.add(sample({1, 0}, 0));
  const Vector zero = vec({0, 0});
  CHECK_THROWS_AS(rel_grad_norm(LossModel(LossKind::ridge), ds, zero, zero), Error);
}
