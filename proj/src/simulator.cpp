#include "usctec/simulator.hpp"

#include "usctec/cyclic.hpp"
#include "usctec/errors.hpp"
#include "usctec/load_solver.hpp"
#include "usctec/placement.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <random>
#include <sstream>
#include <thread>

namespace usctec {

std::string Strategy::name() const {
    if (kind == Kind::cyclic) return "cyclic(" + std::to_string(blocks_per_machine) + ")";
    return "usctec";
}

SystemReport evaluate_system(const Model& model, const Strategy& strategy) {
    const auto& params = model.params();
    const auto& dist = model.distribution();
    SystemReport report;
    report.strategy = strategy;
    try {
        if (strategy.kind == Strategy::Kind::placement) {
            auto placed = place(model);
            report.schemes = std::move(placed.schemes);
            report.times = std::move(placed.times);
            report.expected_time = placed.expected_time;
            report.storage_size = storage_size(placed);
        } else {
            const std::size_t q = strategy.blocks_per_machine;
            const Rational share(static_cast<std::int64_t>(q), static_cast<std::int64_t>(params.machines));
            for (std::size_t n = 0; n < params.machines; ++n)
                if (params.storage_caps[n] < share)
                    throw InfeasibleError("cyclic placement stores " + share.str() + " on machine " +
                                          std::to_string(n + 1) + ", cap is " + params.storage_caps[n].str());
            for (const auto& wr : dist.realizations) {
                auto scheme = build_cyclic(params, q, wr.realization);
                report.times.push_back(computation_time(scheme.load(params.machines), wr.realization));
                report.schemes.push_back(std::move(scheme));
            }
            report.expected_time = expected_time(dist, report.times);
            report.storage_size = cyclic_storage_size(params, q);
        }
        report.feasible = true;
    } catch (const InfeasibleError& e) {
        report.feasible = false;
        report.error = e.what();
        report.schemes.clear();
        report.times.clear();
    }
    return report;
}

BigInt exact_rows(const Scheme& scheme) { return common_denominator(scheme.gamma); }

BigInt exact_columns(const Scheme& scheme, const SystemParams& params) {
    BigInt width = 1;
    for (const auto& row : scheme.mu) {
        const auto assignment = build_assignment(row, params.replication());
        for (const auto& g : assignment.groups) width = lcm(width, g.mass.denominator());
    }
    return width * static_cast<unsigned long long>(params.recovery_threshold);
}

std::size_t simulator_threads() {
    if (const char* env = std::getenv("USCTEC_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return static_cast<std::size_t>(v);
    }
    return 1;
}

namespace {

template <class Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    const std::size_t threads = std::min(simulator_threads(), std::max<std::size_t>(count, 1));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) fn(i);
        });
}

struct RoundTask {
    std::size_t realization;
    std::size_t trial;
};

}  // namespace

VerifyReport verify_round(const Model& model, const Strategy& strategy, const VerifyOptions& options) {
    const auto& params = model.params();
    VerifyReport report;
    report.seed = options.seed;

    const auto system = evaluate_system(model, strategy);
    if (!system.feasible) {
        report.notice = system.error;
        return report;
    }

    const PrimeField field(options.prime);
    const auto points = EvaluationPoints::standard(field, params.recovery_threshold, params.machines);
    const std::size_t per_group = options.stragglers_per_group.value_or(params.stragglers);

    std::vector<RoundPlan> plans;
    for (std::size_t i = 0; i < system.schemes.size(); ++i) {
        const auto& scheme = system.schemes[i];
        BigInt q = options.rows ? BigInt(options.rows) : exact_rows(scheme);
        BigInt r = options.columns ? BigInt(options.columns) : exact_columns(scheme, params);
        if (options.matrices) {
            q = options.matrices->first.rows();
            r = options.matrices->second.cols();
        }
        if (q > options.max_dimension || r > options.max_dimension) {
            report.skipped = true;
            report.notice = "realization " + std::to_string(i + 1) + " needs q=" + q.str() + ", r=" + r.str() +
                            " to realize exactly, above the bound " + std::to_string(options.max_dimension);
            return report;
        }
        report.rows.push_back(q.convert_to<std::size_t>());
        report.columns.push_back(r.convert_to<std::size_t>());
        plans.push_back(plan_round(scheme, params, report.rows.back(), report.columns.back(), options.rounding));
    }

    std::vector<RoundTask> tasks;
    for (std::size_t i = 0; i < plans.size(); ++i)
        for (std::size_t t = 0; t < options.trials; ++t) tasks.push_back({i, t});
    report.rounds.resize(tasks.size());

    parallel_for(tasks.size(), [&](std::size_t idx) {
        const auto [i, t] = tasks[idx];
        const auto& plan = plans[i];
        std::seed_seq seq{options.seed, static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(t)};
        std::mt19937_64 rng(seq);

        FieldMatrix a;
        FieldMatrix b;
        if (options.matrices) {
            a = options.matrices->first;
            b = options.matrices->second;
        } else {
            a = FieldMatrix::random(field, plan.rows, options.inner, rng);
            b = FieldMatrix::random(field, options.inner, plan.columns, rng);
        }

        StragglerMask mask;
        RoundOutcome outcome{i, t, false, false, 0, {}};
        for (const auto& [g, f, n] : options.withheld) {
            mask.withhold(g, f, n);
            ++outcome.stragglers;
        }
        for (std::size_t g = 0; g < plan.blocks.size() && options.withheld.empty(); ++g)
            for (std::size_t f = 0; f < plan.blocks[g].groups.size(); ++f) {
                auto machines = plan.blocks[g].groups[f].machines;
                std::size_t count = per_group;
                if (!options.stragglers_per_group)
                    count = std::uniform_int_distribution<std::size_t>(0, per_group)(rng);
                count = std::min(count, machines.size());
                std::shuffle(machines.begin(), machines.end(), rng);
                for (std::size_t j = 0; j < count; ++j) mask.withhold(g, f, machines[j]);
                outcome.stragglers += count;
            }

        try {
            const auto coded = run_round(field, a, b, plan, points, mask);
            outcome.decoded = true;
            outcome.matches = coded == multiply(field, a, b);
            if (!outcome.matches) outcome.detail = "decoded product differs from A*B";
        } catch (const NotDecodableError& e) {
            outcome.detail = e.what();
        }
        report.rounds[idx] = std::move(outcome);
    });

    report.passed = std::all_of(report.rounds.begin(), report.rounds.end(),
                                [](const RoundOutcome& o) { return o.decoded && o.matches; });
    return report;
}

std::vector<ComparisonRow> compare(const Model& base, std::span<const std::size_t> blocks_per_machine) {
    std::vector<ComparisonRow> rows;
    const std::size_t n_machines = base.params().machines;
    for (auto q : blocks_per_machine) {
        SystemParams params = base.params();
        params.storage_caps.assign(n_machines, Rational(static_cast<std::int64_t>(q), static_cast<std::int64_t>(n_machines)));
        const Model model = make_model(params, base.distribution());
        for (const auto& strategy : {Strategy::cyclic(q), Strategy::placement()}) {
            const auto report = evaluate_system(model, strategy);
            rows.push_back({q, n_machines, strategy.kind == Strategy::Kind::cyclic ? "cyclic" : "usctec",
                            report.feasible, report.storage_size, report.expected_time});
        }
    }
    return rows;
}

std::string comparison_csv(const std::vector<ComparisonRow>& rows) {
    std::ostringstream os;
    os << "Q_over_N,strategy,storage_size,expected_time_exact,expected_time_5dp\n";
    for (const auto& r : rows) {
        os << r.blocks_per_machine << '/' << r.machines << ',' << r.strategy << ',';
        if (!r.feasible) {
            os << "infeasible,infeasible,infeasible\n";
            continue;
        }
        os << r.storage_size.to_decimal_truncated(5) << ',' << r.expected_time << ','
           << r.expected_time.to_decimal_truncated(5) << '\n';
    }
    return os.str();
}

}  // namespace usctec
