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

#pragma once

namespace nc {

/// Number of OpenMP workers for parallel kernels. Honours the NC_THREADS
/// environment variable (0 or unset means the OpenMP default).
[[nodiscard]] int worker_count();

/// Overrides NC_THREADS for the current process; 0 falls back to it again.
void set_worker_count(int workers);

} // namespace nc
