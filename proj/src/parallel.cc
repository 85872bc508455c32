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

#include "assortment/parallel.h"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace assortment {

int DefaultThreadCount() {
  if (const char* env = std::getenv(kThreadsEnvVar)) {
    try {
      int threads = std::stoi(env);
      if (threads > 0) return threads;
    } catch (const std::exception&) {
      // Fall through to the OpenMP default.
    }
  }
  return omp_get_max_threads();
}

void SetThreadCount(int threads) { omp_set_num_threads(threads > 0 ? threads : 1); }

int ThreadCount() { return omp_get_max_threads(); }

}  // namespace assortment
