// Copyright 2026 The qreuse Authors
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

namespace qreuse {

/// Applies QREUSE_THREADS (a positive integer) as the OpenMP thread cap.
/// Returns the resulting thread count. Invalid values are ignored.
int configure_threads_from_env();

/// Current OpenMP thread cap (1 when built without OpenMP).
int max_threads();

}  // namespace qreuse
