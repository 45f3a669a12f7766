#pragma once

#include "usctec/model.hpp"
#include "usctec/rational.hpp"

#include <span>

namespace usctec {

/// Distribute `total` load over the available machines of `speeds`, each
/// capped by `caps[n]`, minimizing the largest load/speed ratio.
struct LoadProblem {
    Rational total;
    SpeedRealization speeds;
    RationalVec caps;
};

struct LoadSolution {
    RationalVec load;
    /// max over available n of load[n] / speeds[n]
    Rational time;
};

/// Exact water-filling: level c = remaining / (speed of uncapped machines);
/// machines with c*s[n] > caps[n] are pinned at their cap, repeat until stable.
/// Throws InfeasibleError when no machine is available or total exceeds the caps.
LoadSolution solve_lp(const LoadProblem& problem);

/// max_{n available} theta[n] / s[n]. Throws InputError if load sits on an unavailable machine.
Rational computation_time(std::span<const Rational> load, const SpeedRealization& speeds);

/// Probability-weighted sum of per-realization times.
Rational expected_time(const SpeedDistribution& dist, std::span<const Rational> times);

}  // namespace usctec
