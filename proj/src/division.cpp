#include "usctec/division.hpp"

#include "usctec/errors.hpp"

#include <algorithm>
#include <numeric>

namespace usctec {

Scheme DivisionResult::to_scheme(std::size_t machines) const {
    Scheme out;
    out.gamma = gamma;
    out.mu.assign(gamma.size(), RationalVec(machines));
    for (std::size_t g = 0; g < supports.size(); ++g)
        for (auto n : supports[g]) out.mu[g][n] = Rational(1);
    return out;
}

bool division_feasible(std::span<const Rational> load, std::size_t replication) {
    if (replication == 0) return false;
    Rational bound = sum(load) / Rational(static_cast<std::int64_t>(replication));
    return std::all_of(load.begin(), load.end(), [&](const Rational& t) { return t <= bound; });
}

DivisionResult divide(const DivisionProblem& problem) {
    const std::size_t k = problem.replication;
    const std::size_t n_machines = problem.load.size();
    if (k == 0) throw InputError("replication must be positive");
    if (problem.mass.sign() <= 0 || problem.mass > Rational(1))
        throw InfeasibleError("division mass " + problem.mass.str() + " outside (0,1]");

    const Rational k_rat(static_cast<std::int64_t>(k));
    const Rational total = sum(problem.load);
    if (total != k_rat * problem.mass)
        throw InfeasibleError("load sums to " + total.str() + ", expected k*mass = " + (k_rat * problem.mass).str());
    for (std::size_t n = 0; n < n_machines; ++n) {
        const auto& t = problem.load[n];
        if (t.sign() < 0 || t > problem.mass)
            throw InfeasibleError("load[" + std::to_string(n + 1) + "] = " + t.str() + " outside [0, " +
                                  problem.mass.str() + "]");
    }

    RationalVec theta = problem.load;
    DivisionResult out;
    std::vector<std::size_t> order;
    const std::size_t guard = 4 * n_machines + 4;
    while (std::any_of(theta.begin(), theta.end(), [](const Rational& t) { return !t.is_zero(); })) {
        if (out.gamma.size() >= guard) throw Error("division did not terminate within 4N rounds");

        order.clear();
        for (std::size_t n = 0; n < n_machines; ++n)
            if (!theta[n].is_zero()) order.push_back(n);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return theta[a] < theta[b]; });
        const std::size_t nonzero = order.size();
        if (nonzero < k) throw Error("division left fewer than k nonzero entries");

        std::vector<std::size_t> support{order.front()};
        support.insert(support.end(), order.end() - static_cast<std::ptrdiff_t>(k - 1), order.end());

        Rational remaining = sum(theta);
        Rational step = theta[order.front()];
        if (nonzero >= k + 1) step = min(remaining / k_rat - theta[order[nonzero - k]], step);

        for (auto n : support) theta[n] -= step;
        std::sort(support.begin(), support.end());
        out.gamma.push_back(step);
        out.supports.push_back(std::move(support));
    }
    return out;
}

Rational BlockAssignment::machine_mass(std::size_t n) const {
    Rational total;
    for (const auto& g : groups)
        if (std::find(g.machines.begin(), g.machines.end(), n) != g.machines.end()) total += g.mass;
    return total;
}

BlockAssignment build_assignment(std::span<const Rational> mu_row, std::size_t replication) {
    if (std::all_of(mu_row.begin(), mu_row.end(), [](const Rational& m) { return m.is_zero(); }))
        throw InputError("mu row is all zeros");

    BlockAssignment out;
    const bool binary = std::all_of(mu_row.begin(), mu_row.end(),
                                    [](const Rational& m) { return m.is_zero() || m == Rational(1); });
    if (binary) {
        ColumnGroup whole{Rational(1), {}};
        for (std::size_t n = 0; n < mu_row.size(); ++n)
            if (!mu_row[n].is_zero()) whole.machines.push_back(n);
        if (whole.machines.size() != replication)
            throw InfeasibleError("binary mu row has " + std::to_string(whole.machines.size()) +
                                  " ones, expected " + std::to_string(replication));
        out.groups.push_back(std::move(whole));
        return out;
    }

    DivisionResult split = divide({RationalVec(mu_row.begin(), mu_row.end()), Rational(1), replication});
    for (std::size_t f = 0; f < split.gamma.size(); ++f)
        out.groups.push_back({split.gamma[f], split.supports[f]});
    return out;
}

std::vector<IndexRange> realize_ranges(std::span<const Rational> masses, std::size_t width) {
    std::vector<IndexRange> out;
    if (masses.empty()) return out;
    const Rational total = sum(masses);
    if (total.sign() <= 0) throw InputError("masses must have positive total");
    const Rational w(static_cast<std::int64_t>(width));
    const Rational half(1, 2);

    Rational cumulative;
    std::size_t prev = 0;
    for (std::size_t i = 0; i < masses.size(); ++i) {
        if (masses[i].sign() < 0) throw InputError("negative mass " + masses[i].str());
        cumulative += masses[i];
        std::size_t boundary = width;
        if (i + 1 < masses.size())
            boundary = static_cast<std::size_t>((cumulative / total * w + half).floor());
        out.push_back({prev, boundary});
        prev = boundary;
    }
    return out;
}

std::vector<IndexRange> realize_columns(const BlockAssignment& assignment, std::size_t columns,
                                        std::size_t recovery_threshold) {
    if (recovery_threshold == 0 || columns % recovery_threshold != 0)
        throw InputError("r=" + std::to_string(columns) + " is not divisible by L=" + std::to_string(recovery_threshold));
    RationalVec masses;
    for (const auto& g : assignment.groups) masses.push_back(g.mass);
    return realize_ranges(masses, columns / recovery_threshold);
}

}  // namespace usctec
