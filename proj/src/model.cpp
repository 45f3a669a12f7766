#include "usctec/model.hpp"

#include "usctec/errors.hpp"

#include <sstream>

namespace usctec {

std::vector<std::size_t> SpeedRealization::available_machines() const {
    std::vector<std::size_t> out;
    for (std::size_t n = 0; n < speeds.size(); ++n)
        if (available(n)) out.push_back(n);
    return out;
}

std::size_t SpeedRealization::available_count() const {
    std::size_t count = 0;
    for (const auto& s : speeds)
        if (s.sign() > 0) ++count;
    return count;
}

std::vector<std::string> validate(const SystemParams& params, const SpeedDistribution& dist) {
    std::vector<std::string> errors;
    auto report = [&](auto&&... parts) {
        std::ostringstream os;
        (os << ... << parts);
        errors.push_back(os.str());
    };

    const std::size_t n_machines = params.machines;
    const std::size_t k = params.replication();
    if (n_machines == 0) report("N must be positive");
    if (params.recovery_threshold == 0) report("L must be at least 1");
    if (k > n_machines) report("L+S=", k, " exceeds N=", n_machines);
    if (params.storage_caps.size() != n_machines) {
        report("e has ", params.storage_caps.size(), " entries, expected N=", n_machines);
    } else {
        for (std::size_t n = 0; n < n_machines; ++n) {
            const auto& e = params.storage_caps[n];
            if (e.sign() < 0 || e > Rational(1)) report("e[", n + 1, "]=", e, " outside [0,1]");
        }
    }

    if (dist.realizations.empty()) report("speed distribution has no realizations");
    Rational total;
    for (std::size_t i = 0; i < dist.realizations.size(); ++i) {
        const auto& wr = dist.realizations[i];
        const auto& speeds = wr.realization.speeds;
        if (speeds.size() != n_machines)
            report("realization ", i + 1, " has ", speeds.size(), " speeds, expected N=", n_machines);
        for (std::size_t n = 0; n < speeds.size(); ++n)
            if (speeds[n].sign() < 0) report("realization ", i + 1, " speed s[", n + 1, "]=", speeds[n], " is negative");
        std::size_t avail = wr.realization.available_count();
        if (avail < k)
            report("realization ", i + 1, " has only ", avail, " available machines < L+S=", k);
        if (wr.probability.sign() <= 0)
            report("realization ", i + 1, " probability ", wr.probability, " is not positive");
        total += wr.probability;
    }
    if (!dist.realizations.empty() && total != Rational(1))
        report("probabilities sum to ", total, " != 1");
    return errors;
}

Model make_model(SystemParams params, SpeedDistribution dist) {
    auto errors = validate(params, dist);
    if (!errors.empty()) throw ValidationError(std::move(errors));
    return Model(std::move(params), std::move(dist));
}

std::vector<std::size_t> Scheme::selected(std::size_t block) const {
    std::vector<std::size_t> out;
    for (std::size_t n = 0; n < mu[block].size(); ++n)
        if (mu[block][n].sign() > 0) out.push_back(n);
    return out;
}

RationalVec Scheme::load(std::size_t machines) const { return combine_load(gamma, mu, machines); }

RationalVec combine_load(std::span<const Rational> gamma, const std::vector<RationalVec>& mu,
                         std::size_t machines) {
    if (gamma.size() != mu.size()) throw InputError("gamma and mu have different block counts");
    RationalVec theta(machines);
    for (std::size_t g = 0; g < gamma.size(); ++g) {
        if (mu[g].size() != machines) throw InputError("mu row has wrong width");
        for (std::size_t n = 0; n < machines; ++n)
            if (!mu[g][n].is_zero()) theta[n] += gamma[g] * mu[g][n];
    }
    return theta;
}

std::vector<std::string> check_scheme(const Scheme& scheme, std::size_t replication,
                                      const SpeedRealization& speeds) {
    std::vector<std::string> errors;
    const std::size_t n_machines = speeds.speeds.size();
    if (scheme.gamma.size() != scheme.mu.size()) {
        errors.push_back("gamma and mu have different block counts");
        return errors;
    }
    for (std::size_t g = 0; g < scheme.blocks(); ++g) {
        std::ostringstream block;
        block << "block " << g + 1 << ": ";
        if (scheme.gamma[g].sign() <= 0 || scheme.gamma[g] > Rational(1))
            errors.push_back(block.str() + "gamma outside (0,1]");
        const auto& row = scheme.mu[g];
        if (row.size() != n_machines) {
            errors.push_back(block.str() + "mu row has wrong width");
            continue;
        }
        Rational row_sum;
        for (std::size_t n = 0; n < n_machines; ++n) {
            if (row[n].sign() < 0 || row[n] > Rational(1))
                errors.push_back(block.str() + "mu entry outside [0,1]");
            if (row[n].sign() > 0 && !speeds.available(n))
                errors.push_back(block.str() + "load on unavailable machine " + std::to_string(n + 1));
            row_sum += row[n];
        }
        if (row_sum != Rational(static_cast<std::int64_t>(replication)))
            errors.push_back(block.str() + "mu row sums to " + row_sum.str() + ", expected L+S");
        if (scheme.selected(g).size() < replication)
            errors.push_back(block.str() + "fewer than L+S selected machines");
    }
    return errors;
}

}  // namespace usctec
