// Copyright 2026 The Orlicz Toolkit Authors
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
#ifndef ORLICZ_PARALLEL_HPP
#define ORLICZ_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <future>
#include <thread>
#include <vector>

namespace orlicz {

// Runs body(i) for i in [0, n) on a few worker threads.  Each index writes
// only its own slot, so results do not depend on scheduling.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min(n, std::min<std::size_t>(hw, 8));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&body, w, workers, n] {
      for (std::size_t i = w; i < n; i += workers) body(i);
    }));
  }
  for (auto& j : jobs) j.get();
}

}  // namespace orlicz

#endif
