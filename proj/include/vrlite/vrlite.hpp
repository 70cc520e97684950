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

#ifndef VRLITE_VRLITE_HPP
#define VRLITE_VRLITE_HPP

#include "vrlite/bench/csv.hpp"
#include "vrlite/bench/experiment.hpp"
#include "vrlite/bench/sweep.hpp"
#include "vrlite/core/finite_sum.hpp"
#include "vrlite/core/loss.hpp"
#include "vrlite/core/metrics.hpp"
#include "vrlite/core/types.hpp"
#include "vrlite/data/libsvm.hpp"
#include "vrlite/data/synthetic.hpp"
#include "vrlite/dist/codec.hpp"
#include "vrlite/dist/runtime.hpp"
#include "vrlite/optim/saga.hpp"
#include "vrlite/optim/svrg.hpp"
#include "vrlite/optim/vrlite.hpp"

#endif  // VRLITE_VRLITE_HPP
