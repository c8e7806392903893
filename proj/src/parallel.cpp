// Copyright 2026 The ncdist Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nc/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>

#include <omp.h>

namespace nc {

namespace {

std::atomic<int> g_override{-1};

int env_workers() {
    const char *raw = std::getenv("NC_THREADS");
    if (raw == nullptr || *raw == '\0') {
        return 0;
    }
    try {
        return std::max(0, std::stoi(raw));
    } catch (const std::exception &) {
        return 0;
    }
}

} // namespace

int worker_count() {
    int cap = g_override.load();
    if (cap < 0) {
        cap = env_workers();
    }
    return cap > 0 ? cap : omp_get_max_threads();
}

void set_worker_count(int workers) {
    g_override.store(workers > 0 ? workers : -1);
}

} // namespace nc
