// Copyright 2026 The gbslxe Authors
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

#ifndef GBSLXE_VERIFY_HPP
#define GBSLXE_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <string>

namespace gbslxe {

struct VerifyOptions {
    /// Adds the 2N = 8 enumeration, reported but not asserted.
    bool deep = false;
    unsigned threads = 1;
    std::uint64_t seed = 1;
    /// Receives one line per check as it completes.
    std::function<void(const std::string &)> on_line;
};

struct VerifyResult {
    int passed = 0;
    int failed = 0;
    int reported = 0;
    bool ok() const { return failed == 0; }
};

/// Self-check suite behind `gbslxe verify`: exact table reproduction, the
/// identity checks of every module, and a small seeded Monte Carlo subset.
VerifyResult run_verify(const VerifyOptions &options);

}  // namespace gbslxe

#endif
