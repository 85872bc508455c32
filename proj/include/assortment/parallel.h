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

#ifndef ASSORTMENT_PARALLEL_H_
#define ASSORTMENT_PARALLEL_H_

#include <cstddef>
#include <exception>
#include <limits>
#include <mutex>

namespace assortment {

// Environment variable read for the default OpenMP thread count.
inline constexpr const char* kThreadsEnvVar = "ASSORT_NUM_THREADS";

// Thread count from ASSORT_NUM_THREADS, or the OpenMP default when unset.
int DefaultThreadCount();
// Applies to every subsequent parallel kernel in the process.
void SetThreadCount(int threads);
int ThreadCount();

// Collects exceptions thrown inside OpenMP loop bodies (which must not leak
// out of the parallel region) and rethrows the one with the smallest loop
// index, so the reported error does not depend on scheduling.
class LoopErrors {
 public:
  void Capture(std::size_t index) noexcept {
    std::lock_guard<std::mutex> lock(mutex_);
    if (index < index_) {
      index_ = index;
      error_ = std::current_exception();
    }
  }
  void RethrowIfAny() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::mutex mutex_;
  std::size_t index_ = std::numeric_limits<std::size_t>::max();
  std::exception_ptr error_;
};

}  // namespace assortment

#endif  // ASSORTMENT_PARALLEL_H_
