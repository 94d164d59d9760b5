// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPANTREE_PARALLEL_HPP_
#define SPANTREE_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace spantree {

// Worker count: hardware concurrency capped by SPANTREE_MAX_THREADS.
int max_threads();

// Runs body(i) for i in [0, count). Each index is executed exactly once; the
// caller is responsible for writing results into per-index slots so the
// outcome does not depend on scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace spantree

#endif  // SPANTREE_PARALLEL_HPP_
