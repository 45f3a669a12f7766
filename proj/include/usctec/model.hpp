#pragma once

#include "usctec/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace usctec {

/// Static description of the cluster: N machines, recovery threshold L,
/// straggler tolerance S, and per-machine storage caps e[n] (fractions of A).
struct SystemParams {
    std::size_t machines = 0;
    std::size_t recovery_threshold = 0;
    std::size_t stragglers = 0;
    RationalVec storage_caps;

    /// L + S: every row block and every column group is served by this many machines.
    std::size_t replication() const { return recovery_threshold + stragglers; }
};

/// Speeds for one round. A machine with speed 0 is unavailable (preempted).
struct SpeedRealization {
    RationalVec speeds;

    bool available(std::size_t n) const { return speeds[n].sign() > 0; }
    std::vector<std::size_t> available_machines() const;
    std::size_t available_count() const;
};

struct WeightedRealization {
    SpeedRealization realization;
    Rational probability;
};

struct SpeedDistribution {
    std::vector<WeightedRealization> realizations;
};

/// A validated (params, distribution) pair. Only `make_model` produces one.
class Model {
public:
    const SystemParams& params() const { return params_; }
    const SpeedDistribution& distribution() const { return dist_; }

private:
    Model(SystemParams params, SpeedDistribution dist) : params_(std::move(params)), dist_(std::move(dist)) {}
    friend Model make_model(SystemParams params, SpeedDistribution dist);

    SystemParams params_;
    SpeedDistribution dist_;
};

/// Every violated invariant, one message each; empty means valid.
std::vector<std::string> validate(const SystemParams& params, const SpeedDistribution& dist);

/// Throws ValidationError carrying the full diagnostic list.
Model make_model(SystemParams params, SpeedDistribution dist);

/// A partitioning vector gamma (G block fractions) and a G x N load division matrix mu.
struct Scheme {
    RationalVec gamma;
    std::vector<RationalVec> mu;

    std::size_t blocks() const { return gamma.size(); }
    /// U_g = { n : mu[g,n] > 0 }.
    std::vector<std::size_t> selected(std::size_t block) const;
    /// theta = gamma . mu
    RationalVec load(std::size_t machines) const;
};

/// Checks row sums, entry ranges, |U_g| >= replication and zero columns for unavailable machines.
std::vector<std::string> check_scheme(const Scheme& scheme, std::size_t replication,
                                      const SpeedRealization& speeds);

/// theta[n] = sum_g gamma[g] * mu[g][n]
RationalVec combine_load(std::span<const Rational> gamma, const std::vector<RationalVec>& mu,
                         std::size_t machines);

}  // namespace usctec
