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

#ifndef AMPBELL_VERIFY_HPP
#define AMPBELL_VERIFY_HPP

#include <string>
#include <vector>

#include "ampbell/metrology.hpp"

namespace ampbell {

enum class VerifyLevel {
    fast,  ///< r <= 0.5, sectors N <= 6
    full,  ///< r <= 1.5, sectors N <= 10 (beam splitter N <= 20)
    long_  ///< full plus brute force at nbar = 60
};

VerifyLevel parse_verify_level(const std::string& name);
std::string to_string(VerifyLevel level);

struct VerifyOptions {
    VerifyLevel level = VerifyLevel::fast;
    double epsilon_tail = kDefaultEpsilonTail;
    /// Beam splitter under test. Empty means ampbell::beam_splitter.
    BeamSplitterFn beam_splitter;
};

struct CheckResult {
    std::string group;
    bool passed;
    double max_error;
    double tolerance;
    std::string detail;
};

/// Runs every invariant group for the level. Deterministic: the same options
/// give the same results bit for bit.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace ampbell

#endif
