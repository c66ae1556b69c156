#pragma once

#include "logo/optimizer.hpp"

namespace logo {

/// Standalone simultaneous optimistic optimization, written directly from the
/// per-depth description: visit depth sets shallow to deep, divide a set's best
/// cell when it beats every larger cell, and retire divided cells only when the
/// sweep ends.
///
/// Uses h_max(n) = sqrt(n) - 1 and the same trisection as the LOGO search, so
/// its trace must match LogoSearch with FixedWidth{1}. `config.width` and
/// `config.hmax` are ignored.
RunResult run_soo(const Objective& objective, const Domain& domain, const OptimizerConfig& config,
                  const DivisionObserver& observer = {});

}  // namespace logo
