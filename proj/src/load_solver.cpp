#include "usctec/load_solver.hpp"

#include "usctec/errors.hpp"

#include <vector>

namespace usctec {

LoadSolution solve_lp(const LoadProblem& problem) {
    const auto& s = problem.speeds.speeds;
    const std::size_t n_machines = s.size();
    if (problem.caps.size() != n_machines) throw InputError("load caps and speeds differ in length");
    if (problem.total.sign() < 0) throw InputError("negative total load " + problem.total.str());

    const auto avail = problem.speeds.available_machines();
    if (avail.empty()) throw InfeasibleError("no available machines");

    Rational capacity;
    for (auto n : avail) {
        if (problem.caps[n].sign() < 0) throw InputError("negative load cap on machine " + std::to_string(n + 1));
        capacity += problem.caps[n];
    }
    if (problem.total > capacity)
        throw InfeasibleError("total load " + problem.total.str() + " exceeds available capacity " + capacity.str());

    std::vector<bool> pinned(n_machines, false);
    Rational level;
    // Pinning only ever raises the level, so each round pins at least one
    // new machine or stops: at most |available| rounds.
    for (std::size_t round = 0; round <= avail.size(); ++round) {
        Rational remaining = problem.total;
        Rational free_speed;
        for (auto n : avail) {
            if (pinned[n]) remaining -= problem.caps[n];
            else free_speed += s[n];
        }
        if (free_speed.is_zero()) break;  // everything pinned: total == capacity
        level = remaining / free_speed;
        bool changed = false;
        for (auto n : avail) {
            if (!pinned[n] && level * s[n] > problem.caps[n]) {
                pinned[n] = true;
                changed = true;
            }
        }
        if (!changed) break;
    }

    LoadSolution out;
    out.load.assign(n_machines, Rational());
    for (auto n : avail) out.load[n] = pinned[n] ? problem.caps[n] : level * s[n];
    out.time = computation_time(out.load, problem.speeds);
    return out;
}

Rational computation_time(std::span<const Rational> load, const SpeedRealization& speeds) {
    if (load.size() != speeds.speeds.size()) throw InputError("load and speeds differ in length");
    Rational worst;
    for (std::size_t n = 0; n < load.size(); ++n) {
        if (!speeds.available(n)) {
            if (!load[n].is_zero())
                throw InputError("machine " + std::to_string(n + 1) + " has load " + load[n].str() + " but speed 0");
            continue;
        }
        worst = max(worst, load[n] / speeds.speeds[n]);
    }
    return worst;
}

Rational expected_time(const SpeedDistribution& dist, std::span<const Rational> times) {
    if (times.size() != dist.realizations.size())
        throw InputError("expected one time per realization");
    Rational total;
    for (std::size_t i = 0; i < times.size(); ++i) total += dist.realizations[i].probability * times[i];
    return total;
}

}  // namespace usctec
