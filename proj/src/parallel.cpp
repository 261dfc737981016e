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


#include "qreuse/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qreuse {

int configure_threads_from_env() {
    if (const char *env = std::getenv("QREUSE_THREADS")) {
        try {
            size_t used = 0;
            int n = std::stoi(env, &used);
            if (n > 0 && env[used] == '\0') {
#ifdef _OPENMP
                omp_set_num_threads(n);
#endif
            }
        } catch (const std::exception &) {
        }
    }
    return max_threads();
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace qreuse
