#include "usctec/repro.hpp"

#include "usctec/coded_multiply.hpp"
#include "usctec/division.hpp"
#include "usctec/errors.hpp"
#include "usctec/instances.hpp"
#include "usctec/load_solver.hpp"
#include "usctec/placement.hpp"
#include "usctec/simulator.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <random>
#include <sstream>

namespace usctec::repro {

namespace {

using Rows = std::vector<std::vector<std::size_t>>;

RationalVec rationals(std::initializer_list<const char*> items) {
    RationalVec out;
    for (auto s : items) out.push_back(Rational::parse(s));
    return out;
}

std::string join(std::span<const Rational> v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].str();
    return out + ")";
}

Rows one_based(const Rows& rows) {
    Rows out = rows;
    for (auto& r : out)
        for (auto& n : r) ++n;
    return out;
}

std::string render(const Rows& rows) {
    std::string out;
    for (std::size_t g = 0; g < rows.size(); ++g) {
        out += g ? ",{" : "{";
        for (std::size_t i = 0; i < rows[g].size(); ++i) out += (i ? "," : "") + std::to_string(rows[g][i]);
        out += "}";
    }
    return out;
}

Rows sorted(Rows rows) {
    std::sort(rows.begin(), rows.end());
    return rows;
}

template <class Fn>
Criterion run_timed(Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    Criterion c = fn();
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream label;
    label << "runtime under " << c.budget_seconds << " s";
    c.expect(c.seconds < c.budget_seconds, label.str());
    return c;
}

}  // namespace

bool Criterion::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void print(std::ostream& os, const Criterion& c) {
    for (const auto& check : c.checks) os << "  " << (check.passed ? "PASS " : "FAIL ") << check.label << '\n';
    std::ostringstream t;
    t.precision(3);
    t << std::fixed << c.seconds;
    os << (c.passed() ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " (" << t.str() << " s)\n";
}

Criterion single_round_example() {
    return run_timed([] {
        Criterion c{1, "Single-round exact reproduction", 1.0, 0, {}};
        const auto model = instances::single_round();
        const auto& params = model.params();
        const auto& s = model.distribution().realizations[0].realization;
        const auto lp = solve_lp({Rational(static_cast<std::int64_t>(params.replication())), s,
                                  RationalVec(params.machines, Rational(1))});
        const auto theta = rationals({"3/8", "3/8", "1/2", "1/2", "5/8", "5/8"});
        c.expect(lp.load == theta, "SingleRound.theta = " + join(lp.load));
        c.expect(lp.time == Rational(1, 8), "SingleRound.c = " + lp.time.str());

        const auto div = divide({lp.load, Rational(1), params.replication()});
        c.expect(div.gamma == rationals({"3/8", "1/4", "1/8", "1/8", "1/8"}), "SingleRound.gamma = " + join(div.gamma));
        const Rows expected{{1, 5, 6}, {3, 4, 5}, {2, 3, 6}, {2, 3, 4}, {2, 4, 6}};
        c.expect(one_based(div.supports) == expected, "SingleRound.supports = " + render(one_based(div.supports)));
        return c;
    });
}

Criterion constrained_pair_example() {
    return run_timed([] {
        Criterion c{2, "Constrained-pair placement trace", 1.0, 0, {}};
        const auto res = place(instances::constrained_pair());
        const auto& p1 = res.passes.at(0);
        c.expect(p1.overflow && p1.overflow->location == Rational(3, 5),
                 "ConstrainedPair.pass1.overflow_at = " + (p1.overflow ? p1.overflow->location.str() : std::string("none")));
        c.expect(p1.overflow && p1.overflow->machines == std::vector<std::size_t>{0}, "ConstrainedPair.pass1.overflow_machines = {1}");
        if (p1.truncated.size() == 2) {
            c.expect(p1.truncated[0].gamma == rationals({"3/8", "9/40"}),
                     "ConstrainedPair.truncated_gamma_1 = " + join(p1.truncated[0].gamma));
            c.expect(p1.truncated[1].gamma == rationals({"3/16", "3/8", "3/80"}),
                     "ConstrainedPair.truncated_gamma_2 = " + join(p1.truncated[1].gamma));
        } else {
            c.expect(false, "ConstrainedPair.truncated_gamma present");
        }
        if (res.passes.size() < 2) {
            c.expect(false, "ConstrainedPair.pass2 present");
            return c;
        }
        const auto& p2 = res.passes[1];
        c.expect(p2.pending_loads[0] == rationals({"0", "6/35", "8/35", "8/35", "2/7", "2/7"}),
                 "ConstrainedPair.pass2.theta_1 = " + join(p2.pending_loads[0]));
        c.expect(p2.pending_loads[1] == rationals({"0", "1/10", "1/5", "1/5", "3/10", "2/5"}),
                 "ConstrainedPair.pass2.theta_2 = " + join(p2.pending_loads[1]));
        c.expect(p2.pending[0].gamma == rationals({"6/35", "4/35", "4/35"}),
                 "ConstrainedPair.pass2.gamma_1 = " + join(p2.pending[0].gamma));
        const auto rows1 = one_based(p2.pending[0].supports);
        c.expect(rows1 == Rows{{2, 5, 6}, {3, 4, 5}, {3, 4, 6}}, "ConstrainedPair.pass2.supports_1 = " + render(rows1));
        const auto rows2 = one_based(p2.pending[1].supports);
        c.expect(sorted(rows2) == sorted({{2, 5, 6}, {4, 5, 6}, {3, 5, 6}, {3, 4, 6}}),
                 "ConstrainedPair.pass2.supports_2 = " + render(rows2) + " (up to row order)");
        c.expect(res.storage[0].measure() == Rational(3, 5),
                 "ConstrainedPair.machine1.stored = " + res.storage[0].measure().str());
        c.expect(res.passes.size() == 2 && !res.passes.back().overflow, "ConstrainedPair.pass3 = no overflow");
        return c;
    });
}

Criterion twelve_machine_table() {
    return run_timed([] {
        Criterion c{3, "Twelve-machine table reproduction", 5.0, 0, {}};
        std::vector<SystemReport> placed;
        for (const auto& ref : instances::kTwelveMachineReference) {
            const std::size_t q = ref.blocks_per_machine;
            const auto model = instances::twelve_machines(q);
            const std::string tag = "Twelve.Q=" + std::to_string(q) + ".";

            const auto cyc = evaluate_system(model, Strategy::cyclic(q));
            const double cyc_ref = std::stod(std::string(ref.cyclic_time));
            const double cyc_got = cyc.expected_time.to_double();
            c.expect(cyc.feasible && std::abs(cyc_got - cyc_ref) <= kCyclicTimeTolerance,
                     tag + "cyclic.time = " + cyc.expected_time.to_decimal(7) + " vs " + std::string(ref.cyclic_time));
            c.expect(cyc.storage_size == Rational(static_cast<std::int64_t>(q)),
                     tag + "cyclic.storage = " + cyc.storage_size.str());
            if (q == 12)
                c.expect(cyc.expected_time == Rational(189, 3965), tag + "cyclic.time_exact = " + cyc.expected_time.str());

            auto usc = evaluate_system(model, Strategy::placement());
            const double t_ref = std::stod(std::string(ref.placed_time));
            const double z_ref = std::stod(std::string(ref.placed_storage));
            c.expect(usc.feasible && std::abs(usc.expected_time.to_double() - t_ref) <= kPlacedTimeTolerance,
                     tag + "usctec.time = " + usc.expected_time.to_decimal(7) + " vs " + std::string(ref.placed_time));
            c.expect(usc.feasible && std::abs(usc.storage_size.to_double() - z_ref) <= kPlacedStorageTolerance,
                     tag + "usctec.storage = " + usc.storage_size.to_decimal(7) + " vs " +
                         std::string(ref.placed_storage));
            if (q >= 8) placed.push_back(std::move(usc));
        }
        bool plateau = !placed.empty();
        for (const auto& r : placed)
            plateau = plateau && r.expected_time == placed.front().expected_time &&
                      r.storage_size == placed.front().storage_size && r.times == placed.front().times;
        c.expect(plateau, "Twelve.plateau Q=8..12 identical");
        return c;
    });
}

namespace {

/// Runs one trial on every plan: each group alone with every straggler set of
/// size <= S, one round with S stragglers in every group at once, and every
/// group with S+1 stragglers, which must fail naming that group.
struct TrialTally {
    std::size_t rounds = 0;
    std::size_t mismatches = 0;
    std::size_t undecodable_ok = 0;
    std::size_t undecodable_bad = 0;
};

void subsets_up_to(const std::vector<std::size_t>& items, std::size_t max_size, std::size_t start,
                   std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
    out.push_back(cur);
    if (cur.size() == max_size) return;
    for (std::size_t i = start; i < items.size(); ++i) {
        cur.push_back(items[i]);
        subsets_up_to(items, max_size, i + 1, cur, out);
        cur.pop_back();
    }
}

void run_trial(const PrimeField& field, const RoundPlan& plan, const EvaluationPoints& points, std::size_t stragglers,
               std::size_t inner, std::mt19937_64& rng, TrialTally& tally) {
    const auto a = FieldMatrix::random(field, plan.rows, inner, rng);
    const auto b = FieldMatrix::random(field, inner, plan.columns, rng);
    const auto truth = multiply(field, a, b);
    auto run = [&](const StragglerMask& mask) {
        ++tally.rounds;
        if (run_round(field, a, b, plan, points, mask) != truth) ++tally.mismatches;
    };

    StragglerMask everywhere;
    for (std::size_t g = 0; g < plan.blocks.size(); ++g) {
        for (std::size_t f = 0; f < plan.blocks[g].groups.size(); ++f) {
            const auto& machines = plan.blocks[g].groups[f].machines;
            std::vector<std::vector<std::size_t>> sets;
            std::vector<std::size_t> cur;
            subsets_up_to(machines, stragglers, 0, cur, sets);
            for (const auto& set : sets) {
                if (set.empty()) continue;
                StragglerMask mask;
                for (auto n : set) mask.withhold(g, f, n);
                run(mask);
            }
            auto shuffled = machines;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            for (std::size_t j = 0; j < stragglers && j < shuffled.size(); ++j) everywhere.withhold(g, f, shuffled[j]);

            if (plan.blocks[g].groups[f].columns.size() == 0) continue;
            StragglerMask too_many;
            for (std::size_t j = 0; j <= stragglers && j < shuffled.size(); ++j) too_many.withhold(g, f, shuffled[j]);
            try {
                run_round(field, a, b, plan, points, too_many);
                ++tally.undecodable_bad;
            } catch (const NotDecodableError& e) {
                if (e.block() == g && e.group() == f) ++tally.undecodable_ok;
                else ++tally.undecodable_bad;
            }
        }
    }
    run(everywhere);
    run(StragglerMask{});
}

}  // namespace

Criterion coded_rounds(std::size_t trials) {
    return run_timed([trials] {
        Criterion c{4, "Coded-round correctness", 10.0, 0, {}};
        const PrimeField field;
        struct Setup {
            std::string name;
            Model model;
            std::size_t rows;
            std::size_t columns;
            RowRounding rounding;
        };
        const std::vector<Setup> setups{
            {"SingleRound", instances::single_round(), 8, 20, RowRounding::exact},
            {"ConstrainedPair", instances::constrained_pair(), 32, 40, RowRounding::nearest},
        };
        constexpr std::size_t kInner = 16;
        for (const auto& setup : setups) {
            const auto& params = setup.model.params();
            const auto points = EvaluationPoints::standard(field, params.recovery_threshold, params.machines);
            const auto placed = place(setup.model);
            for (std::size_t i = 0; i < placed.schemes.size(); ++i) {
                const auto plan = plan_round(placed.schemes[i], params, setup.rows, setup.columns, setup.rounding);
                TrialTally tally;
                for (std::size_t t = 0; t < trials; ++t) {
                    std::seed_seq seq{std::uint64_t{2024}, std::uint64_t{i}, std::uint64_t{t}};
                    std::mt19937_64 rng(seq);
                    run_trial(field, plan, points, params.stragglers, kInner, rng, tally);
                }
                const std::string tag = setup.name + ".s" + std::to_string(i + 1);
                c.expect(tally.mismatches == 0, tag + " q=" + std::to_string(setup.rows) + " v=" +
                                                    std::to_string(kInner) + " r=" + std::to_string(setup.columns) +
                                                    ": " + std::to_string(tally.rounds) + " rounds with <= S stragglers, " +
                                                    std::to_string(tally.mismatches) + " mismatches");
                c.expect(tally.undecodable_bad == 0 && tally.undecodable_ok > 0,
                         tag + ": S+1 stragglers -> NotDecodable in " + std::to_string(tally.undecodable_ok) + " of " +
                             std::to_string(tally.undecodable_ok + tally.undecodable_bad) + " cases");
            }
        }
        return c;
    });
}

Criterion relaxed_storage() {
    return run_timed([] {
        Criterion c{6, "Relaxed-constraint reduction", 10.0, 0, {}};
        std::vector<std::pair<std::string, Model>> systems;
        auto relax = [](const Model& m) {
            SystemParams p = m.params();
            p.storage_caps.assign(p.machines, Rational(1));
            return make_model(p, m.distribution());
        };
        systems.emplace_back("SingleRound", instances::single_round());
        systems.emplace_back("ConstrainedPair", relax(instances::constrained_pair()));
        systems.emplace_back("Twelve", relax(instances::twelve_machines(12)));
        std::mt19937_64 rng(6);
        for (int t = 0; t < 100; ++t) {
            std::uniform_int_distribution<std::size_t> size(3, 9);
            const std::size_t n = size(rng);
            std::uniform_int_distribution<std::size_t> pick_l(1, n - 1);
            const std::size_t l = pick_l(rng);
            std::uniform_int_distribution<std::size_t> pick_s(0, n - l);
            SystemParams p{n, l, pick_s(rng), RationalVec(n, Rational(1))};
            SpeedDistribution d;
            std::uniform_int_distribution<int> count(1, 3);
            std::uniform_int_distribution<std::int64_t> speed(1, 12);
            const int k = count(rng);
            for (int r = 0; r < k; ++r) {
                SpeedRealization s;
                for (std::size_t i = 0; i < n; ++i) s.speeds.emplace_back(speed(rng), 2);
                d.realizations.push_back({s, Rational(1, k)});
            }
            systems.emplace_back("random" + std::to_string(t), make_model(p, d));
        }
        std::size_t exact = 0;
        std::string first_failure;
        for (const auto& [name, model] : systems) {
            const auto& p = model.params();
            Rational mean;
            for (const auto& wr : model.distribution().realizations)
                mean += wr.probability * solve_lp({Rational(static_cast<std::int64_t>(p.replication())), wr.realization,
                                                   RationalVec(p.machines, Rational(1))})
                                             .time;
            const auto res = place(model);
            if (res.expected_time == mean) ++exact;
            else if (first_failure.empty()) first_failure = name;
            if (name.rfind("random", 0) != 0)
                c.expect(res.expected_time == mean, name + ".expected_time = " + res.expected_time.str() +
                                                        " = mean LP objective " + mean.str());
        }
        c.expect(exact == systems.size(), "random systems: " + std::to_string(exact) + " of " +
                                              std::to_string(systems.size()) + " exact" +
                                              (first_failure.empty() ? "" : ", first failure " + first_failure));
        return c;
    });
}

}  // namespace usctec::repro
