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

#ifndef VRLITE_BENCH_EXPERIMENT_HPP
#define VRLITE_BENCH_EXPERIMENT_HPP

#include <chrono>
#include <optional>

#include "vrlite/bench/csv.hpp"
#include "vrlite/data/libsvm.hpp"
#include "vrlite/data/synthetic.hpp"
#include "vrlite/dist/runtime.hpp"
#include "vrlite/optim/saga.hpp"
#include "vrlite/optim/svrg.hpp"

namespace vrlite::bench {

enum class Algo { sgd, svrg, saga, vrlite };
enum class RunMode { seq, sync, async };

inline const char *to_string(Algo a) {
  switch (a) {
    case Algo::sgd: return "sgd";
    case Algo::svrg: return "svrg";
    case Algo::saga: return "saga";
    case Algo::vrlite: return "vrlite";
  }
  return "?";
}

inline const char *to_string(RunMode m) {
  switch (m) {
    case RunMode::seq: return "seq";
    case RunMode::sync: return "sync";
    case RunMode::async: return "async";
  }
  return "?";
}

class UsageError : public Error {
 public:
  using Error::Error;
};

struct DatasetSpec {
  enum class Kind { toy_class, toy_reg, libsvm };
  Kind kind = Kind::toy_reg;
  std::string path;
  std::size_t n = 5000;
  std::size_t d = 20;
  std::uint64_t seed = 1;

  /// "toy-class", "toy-reg" or "libsvm:<path>".
  static DatasetSpec parse(std::string_view s) {
    DatasetSpec spec;
    if (s == "toy-class") {
      spec.kind = Kind::toy_class;
    } else if (s == "toy-reg") {
      spec.kind = Kind::toy_reg;
    } else if (s.starts_with("libsvm:") && s.size() > 7) {
      spec.kind = Kind::libsvm;
      spec.path = std::string(s.substr(7));
    } else {
      throw UsageError("unknown dataset '" + std::string(s) + "'");
    }
    return spec;
  }

  std::string name() const {
    switch (kind) {
      case Kind::toy_class: return "toy-class";
      case Kind::toy_reg: return "toy-reg";
      case Kind::libsvm: return "libsvm:" + path;
    }
    return "?";
  }
};

inline Dataset load_dataset(const DatasetSpec &spec) {
  switch (spec.kind) {
    case DatasetSpec::Kind::toy_class: {
      SyntheticSpec s;
      s.n = spec.n;
      s.d = spec.d;
      s.task = Task::classification;
      s.seed = spec.seed;
      return gen_gaussian_classification(s);
    }
    case DatasetSpec::Kind::toy_reg: {
      SyntheticSpec s;
      s.n = spec.n;
      s.d = spec.d;
      s.seed = spec.seed;
      return gen_linear_regression(s).data;
    }
    case DatasetSpec::Kind::libsvm:
      return load_libsvm(spec.path);
  }
  throw UsageError("unknown dataset kind");
}

struct ExperimentConfig {
  Algo algo = Algo::vrlite;
  RunMode mode = RunMode::seq;
  DatasetSpec dataset;
  double eta = 0.01;
  double lambda = LossModel::default_lambda;
  /// Loss; defaults to logistic for classification data, ridge otherwise.
  std::optional<LossKind> loss;
  /// Epoch budget. For VR-lite the plain-SGD bootstrap is epoch 1.
  std::size_t epochs = 30;
  std::size_t workers = 1;
  dist::TransportKind transport = dist::TransportKind::sim;
  double latency_ms = 0.0;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> scheduler_seed;
  std::vector<double> worker_speed;
  VrliteOptions vrlite;
  /// SVRG inner loop length; 2n when unset.
  std::optional<std::size_t> svrg_inner_steps;
  /// Sequential runs record monotonic wall time instead of the virtual clock.
  bool measure_wall_clock = false;
  std::string out_path;

  void validate() const {
    if (mode != RunMode::seq && algo != Algo::vrlite)
      throw UsageError("only vrlite runs in sync or async mode");
    if (workers < 1) throw UsageError("workers must be at least 1");
    if (mode == RunMode::seq && workers != 1) throw UsageError("sequential runs use one worker");
    if (!(eta >= 0.0) || !std::isfinite(eta)) throw UsageError("eta must be finite and nonnegative");
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw UsageError("lambda must be nonnegative");
    if (!(latency_ms >= 0.0)) throw UsageError("latency must be nonnegative");
  }

  LossModel loss_model(const Dataset &ds) const {
    const LossKind kind =
        loss.value_or(ds.task() == Task::classification ? LossKind::logistic : LossKind::ridge);
    return LossModel(kind, lambda);
  }
};

struct ExperimentResult {
  std::vector<MetricsRow> rows;
  Vector x;
  bool diverged = false;

  /// First epoch whose relative gradient norm is at or below `target`.
  std::optional<std::size_t> epochs_to(double target) const {
    for (const auto &r : rows)
      if (r.rel_grad_norm <= target) return r.epoch;
    return std::nullopt;
  }

  double final_rel_grad_norm() const { return rows.empty() ? 1.0 : rows.back().rel_grad_norm; }
};

namespace detail {

/// Per-epoch bookkeeping for sequential runs.
class SequentialRecorder {
 public:
  SequentialRecorder(const ExperimentConfig &cfg, const ErmProblem &problem,
                     std::optional<double> stop_below)
      : cfg_(cfg),
        meter_(problem.model(), problem.data(), Vector::Zero(problem.dimension())),
        stop_below_(stop_below),
        start_(std::chrono::steady_clock::now()) {}

  /// Records epoch `epoch`; false once the run should stop.
  bool record(std::size_t epoch, const Vector &x, std::size_t grad_evals, ExperimentResult &out) {
    evals_ += grad_evals;
    if (!x.allFinite()) {
      out.diverged = true;
      return false;
    }
    const double wall =
        cfg_.measure_wall_clock
            ? std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count()
            : static_cast<double>(evals_) * kVirtualMsPerGradient;
    MetricsRow row{to_string(cfg_.algo), "seq", 1, epoch, wall, meter_.objective(x), meter_(x),
                   cfg_.eta, cfg_.seed};
    if (!std::isfinite(row.objective) || !std::isfinite(row.rel_grad_norm)) {
      out.diverged = true;
      return false;
    }
    out.rows.push_back(std::move(row));
    return !(stop_below_ && out.rows.back().rel_grad_norm <= *stop_below_);
  }

 private:
  const ExperimentConfig &cfg_;
  GradientNormMeter meter_;
  std::optional<double> stop_below_;
  std::chrono::steady_clock::time_point start_;
  std::size_t evals_ = 0;
};

inline ExperimentResult run_sequential(const ExperimentConfig &cfg, const ErmProblem &problem,
                                       std::optional<double> stop_below) {
  ExperimentResult out;
  SequentialRecorder rec(cfg, problem, stop_below);
  const std::size_t n = problem.size();
  Rng rng(cfg.seed);
  OptState st = OptState::zeros(problem.dimension(), cfg.seed);
  if (!rec.record(0, st.x, 0, out) || cfg.epochs == 0) {
    out.x = st.x;
    return out;
  }

  switch (cfg.algo) {
    case Algo::vrlite: {
      st = vrlite_init(problem, cfg.eta, rng, cfg.vrlite);
      if (!rec.record(1, st.x, sgd_epoch_evals(n, cfg.vrlite), out)) break;
      for (std::size_t e = 2; e <= cfg.epochs; ++e) {
        vrlite_epoch(st, problem, cfg.eta, rng, cfg.vrlite);
        if (!rec.record(e, st.x, vrlite_epoch_evals(n, cfg.vrlite), out)) break;
      }
      break;
    }
    case Algo::sgd: {
      for (std::size_t e = 1; e <= cfg.epochs; ++e) {
        sgd_epoch(st, problem, cfg.eta, rng, cfg.vrlite);
        if (!rec.record(e, st.x, sgd_epoch_evals(n, cfg.vrlite), out)) break;
      }
      break;
    }
    case Algo::svrg: {
      const std::size_t inner = cfg.svrg_inner_steps.value_or(svrg_default_inner_steps(n));
      for (std::size_t e = 1; e <= cfg.epochs; ++e) {
        svrg_epoch(st.x, problem, cfg.eta, inner, rng);
        if (!rec.record(e, st.x, svrg_epoch_evals(n, inner), out)) break;
      }
      break;
    }
    case Algo::saga: {
      SagaState table = saga_init(problem, st.x);
      std::size_t init_evals = n;
      for (std::size_t e = 1; e <= cfg.epochs; ++e) {
        saga_epoch(st.x, problem, table, cfg.eta, rng);
        if (!rec.record(e, st.x, n + std::exchange(init_evals, 0), out)) break;
      }
      break;
    }
  }
  out.x = st.x;
  return out;
}

}  // namespace detail

/// Runs one configuration on an already loaded data set and returns one row
/// per closed epoch, starting with epoch 0 at x = 0. A non-finite iterate or
/// metric ends the run with `diverged` set; that epoch gets no row.
/// `stop_below` ends a sequential run early once the target is reached.
inline ExperimentResult run_experiment(const ExperimentConfig &cfg, const Dataset &ds,
                                       std::optional<double> stop_below = std::nullopt) {
  cfg.validate();
  const ErmProblem problem(ds, cfg.loss_model(ds));
  if (cfg.mode == RunMode::seq) return detail::run_sequential(cfg, problem, stop_below);

  dist::DistConfig dc;
  dc.mode = cfg.mode == RunMode::sync ? dist::Mode::sync : dist::Mode::async;
  dc.workers = cfg.workers;
  dc.eta = cfg.eta;
  dc.epochs = cfg.epochs;
  dc.seed = cfg.seed;
  dc.scheduler_seed = cfg.scheduler_seed;
  dc.transport = cfg.transport;
  dc.latency_ms = cfg.latency_ms;
  dc.worker_speed = cfg.worker_speed;
  dc.vrlite = cfg.vrlite;
  auto res = dist::run_distributed(problem, dc);
  return {std::move(res.rows), std::move(res.central.x), res.diverged};
}

/// Loads the configured data set, runs, and writes the CSV if out_path is set.
inline ExperimentResult run_experiment(const ExperimentConfig &cfg) {
  cfg.validate();
  const Dataset ds = load_dataset(cfg.dataset);
  ExperimentResult res = run_experiment(cfg, ds);
  if (!cfg.out_path.empty()) write_csv(res.rows, cfg.out_path);
  return res;
}

}  // namespace vrlite::bench

#endif  // VRLITE_BENCH_EXPERIMENT_HPP
