// Copyright 2026 The hdfusion Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace hdfusion {

/// Environment variable consulted when no explicit worker count is given.
inline constexpr const char* kWorkersEnv = "HDFUSION_WORKERS";

/// Resolves a worker count: `requested` if positive, else the environment
/// variable, else std::thread::hardware_concurrency() (at least 1).
int resolve_workers(int requested = 0);

/// Calls body(i) for every i in [0, n), split into contiguous chunks over
/// `workers` threads. The first exception thrown by any worker is rethrown.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& body);

/// Pairwise (cascade) summation. The result depends only on the order of
/// `values`, not on how they were produced.
double pairwise_sum(std::span<const double> values);

}  // namespace hdfusion
