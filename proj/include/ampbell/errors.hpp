// Copyright 2026 The ampbell Authors
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

#ifndef AMPBELL_ERRORS_HPP
#define AMPBELL_ERRORS_HPP

#include <stdexcept>

namespace ampbell {

/// A photon number outside the retained range [0, n_max].
struct CutoffViolation : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Two states (or a state and an operator) built on different cutoffs.
struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of a closed form.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Error propagation evaluated where the signal slope vanishes.
struct DegeneratePoint : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace ampbell

#endif
