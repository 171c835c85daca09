// SPDX-License-Identifier: Apache-2.0
//
// lisbt-sim: channel models and pilot-based parameter estimators for
// large-intelligent-surface transceivers.
//
// Fast library self-checks behind the `validate` CLI subcommand: reduced-size
// versions of the core invariants, each finishing in well under a second.

#pragma once

#include <string>
#include <vector>

namespace lisbt {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

std::vector<CheckResult> run_selfchecks(std::uint64_t seed = 1);

} // namespace lisbt
