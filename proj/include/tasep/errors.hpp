/*
   Copyright 2026 the tasep-tq authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TASEP_ERRORS_HPP
#define TASEP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tasep {

// An exactly-solved linear system came out inconsistent or rank-deficient.
// This is never expected for valid inputs; it would contradict the
// uniqueness of the perturbative solution, so it gets its own type (and
// its own process exit code in the CLI).
struct SolverInconsistency : std::runtime_error {
    explicit SolverInconsistency(const std::string& what) : std::runtime_error(what) {}
};

// An iterative numerical routine hit its iteration cap.
struct NonConvergence : std::runtime_error {
    explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tasep

#endif
