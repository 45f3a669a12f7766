#include "oracles.hpp"
#include "support.hpp"
#include "usctec/coded_multiply.hpp"
#include "usctec/division.hpp"
#include "usctec/instances.hpp"
#include "usctec/load_solver.hpp"
#include "usctec/placement.hpp"
#include "usctec/repro.hpp"
#include "usctec/simulator.hpp"

#include <chrono>
#include <cstring>
#include <iostream>
#include <numeric>

using namespace usctec;
using namespace usctec::testing;

namespace {

std::size_t lp_oracle_mismatches() {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::size_t> size(1, 6);
    std::uniform_int_distribution<int> coin(0, 4);
    std::size_t bad = 0;
    for (int t = 0; t < 1000; ++t) {
        const std::size_t n = size(rng);
        LoadProblem p;
        for (std::size_t i = 0; i < n; ++i) {
            p.speeds.speeds.push_back(coin(rng) == 0 ? Rational(0) : random_rational(rng, 4, 0, 9) + Rational(1, 4));
            p.caps.push_back(random_rational(rng, 6, 0, 1));
        }
        if (p.speeds.available_count() == 0) p.speeds.speeds[0] = Rational(3);
        Rational capacity;
        for (auto i : p.speeds.available_machines()) capacity += p.caps[i];
        p.total = capacity * random_rational(rng, 7, 0, 1);
        const auto sol = solve_lp(p);
        if (sol.time != bisection_level(p.total, p.speeds, p.caps) || sum(sol.load) != p.total) ++bad;
    }
    return bad;
}

std::size_t division_mismatches() {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<std::size_t> size(1, 8);
    std::size_t bad = 0;
    for (int t = 0; t < 1000; ++t) {
        const std::size_t n = size(rng);
        const std::size_t k = std::uniform_int_distribution<std::size_t>(1, n)(rng);
        RationalVec theta(n);
        Rational mass;
        if (t % 2 == 0) {
            for (int g = std::uniform_int_distribution<int>(1, 6)(rng); g > 0; --g) {
                const Rational w = random_rational(rng, 12, 0, 1) / Rational(6);
                if (w.is_zero()) continue;
                mass += w;
                for (auto i : random_subset(rng, n, k)) theta[i] += w;
            }
            if (mass.is_zero()) {
                mass = Rational(1, 2);
                for (std::size_t i = 0; i < k; ++i) theta[i] = mass;
            }
        } else {
            mass = random_rational(rng, 10, 0, 1);
            if (mass.is_zero()) mass = Rational(1);
            SpeedRealization s;
            for (std::size_t i = 0; i < n; ++i) s.speeds.push_back(random_rational(rng, 3, 1, 9));
            theta = solve_lp({mass * Rational(static_cast<std::int64_t>(k)), s, RationalVec(n, mass)}).load;
        }
        const auto res = divide({theta, mass, k});
        RationalVec rebuilt(n);
        bool ok = sum(res.gamma) == mass && res.gamma.size() <= n;
        for (std::size_t g = 0; g < res.gamma.size(); ++g) {
            ok = ok && res.supports[g].size() == k;
            for (auto i : res.supports[g]) rebuilt[i] += res.gamma[g];
        }
        if (!ok || rebuilt != theta) ++bad;
    }
    return bad;
}

std::pair<std::size_t, std::size_t> feasibility_mismatches() {
    std::vector<std::int64_t> farey;
    for (std::int64_t q = 1; q <= 6; ++q)
        for (std::int64_t p = 0; p <= q; ++p)
            if (std::gcd(p, q) == 1) farey.push_back(60 * p / q);
    std::sort(farey.begin(), farey.end());
    std::size_t bad = 0;
    std::size_t total = 0;
    for (std::size_t n = 1; n <= 5; ++n) {
        for (std::size_t k = 1; k <= n; ++k) {
            const ConeSearch cone(n, k);
            std::vector<std::size_t> idx(n, 0);
            while (true) {
                std::vector<std::int64_t> scaled(n);
                RationalVec theta(n);
                for (std::size_t i = 0; i < n; ++i) {
                    scaled[i] = farey[idx[i]];
                    theta[i] = Rational(scaled[i], 60);
                }
                ++total;
                if (division_feasible(theta, k) != cone.representable(scaled)) ++bad;
                std::size_t pos = n;
                while (pos > 0 && idx[pos - 1] == farey.size() - 1) --pos;
                if (pos == 0) break;
                ++idx[pos - 1];
                for (std::size_t j = pos; j < n; ++j) idx[j] = idx[pos - 1];
            }
        }
    }
    return {bad, total};
}

std::pair<std::size_t, std::size_t> decode_mismatches() {
    const PrimeField f;
    std::mt19937_64 rng(21);
    std::vector<std::pair<Model, std::size_t>> systems;
    systems.emplace_back(instances::single_round(), 0);
    systems.emplace_back(instances::constrained_pair(), 0);
    systems.emplace_back(instances::constrained_pair(), 1);
    systems.emplace_back(make_model(SystemParams{6, 3, 2, RationalVec(6, Rational(1))},
                                    {{{SpeedRealization{ints({1, 2, 3, 4, 5, 6})}, Rational(1)}}}),
                         0);
    systems.emplace_back(make_model(SystemParams{5, 2, 2, RationalVec(5, Rational(1))},
                                    {{{SpeedRealization{ints({1, 3, 3, 4, 9})}, Rational(1)}}}),
                         0);
    std::size_t bad = 0;
    std::size_t total = 0;
    for (const auto& [model, which] : systems) {
        const auto& params = model.params();
        const auto scheme = place(model).schemes[which];
        const auto q = exact_rows(scheme).convert_to<std::size_t>();
        const auto r = exact_columns(scheme, params).convert_to<std::size_t>();
        const auto plan = plan_round(scheme, params, q, r);
        const auto pts = EvaluationPoints::standard(f, params.recovery_threshold, params.machines);
        const auto a = FieldMatrix::random(f, q, 3, rng);
        const auto b = FieldMatrix::random(f, 3, r, rng);
        const std::size_t width = plan.block_width();
        const std::size_t L = params.recovery_threshold;
        for (std::size_t g = 0; g < plan.blocks.size(); ++g) {
            const auto a_g = a.row_range(plan.blocks[g].rows.begin, plan.blocks[g].rows.end);
            for (const auto& group : plan.blocks[g].groups) {
                std::vector<std::size_t> cols;
                for (auto j = group.columns.begin; j < group.columns.end; ++j) cols.push_back(j);
                if (cols.empty()) continue;
                std::vector<FieldMatrix> truth;
                for (std::size_t l = 0; l < L; ++l) {
                    std::vector<std::size_t> idx;
                    for (auto c : cols) idx.push_back(l * width + c);
                    truth.push_back(multiply(f, a_g, b.columns(idx)));
                }
                std::vector<bool> mask(group.machines.size(), false);
                std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(L), true);
                do {
                    std::vector<GroupResponse> responses;
                    for (std::size_t i = 0; i < mask.size(); ++i) {
                        if (!mask[i]) continue;
                        const auto n = group.machines[i];
                        const auto h = worker_compute(f, a_g, encode(f, b, plan, pts, n), plan, n, g);
                        const auto mine = plan.machine_columns(n, g);
                        std::vector<std::size_t> pos;
                        for (auto j : cols)
                            pos.push_back(static_cast<std::size_t>(std::find(mine.begin(), mine.end(), j) - mine.begin()));
                        responses.push_back({n, h.columns(pos)});
                    }
                    ++total;
                    if (decode_group(f, responses, pts) != truth) ++bad;
                } while (std::prev_permutation(mask.begin(), mask.end()));
            }
        }
    }
    return {bad, total};
}

repro::Criterion property_suites() {
    const auto start = std::chrono::steady_clock::now();
    repro::Criterion c{5, "Property suites", 60.0, 0, {}};
    const auto lp = lp_oracle_mismatches();
    c.expect(lp == 0, "(a) water-filling vs bisection oracle: " + std::to_string(lp) + " of 1000 differ");
    const auto dv = division_mismatches();
    c.expect(dv == 0, "(b) division reconstruction, row sums, G <= N: " + std::to_string(dv) + " of 1000 fail");
    const auto [lb, lt] = feasibility_mismatches();
    c.expect(lb == 0 && lt > 0, "(c) feasibility criterion vs cone search: " + std::to_string(lb) + " of " +
                                    std::to_string(lt) + " differ");
    const auto [db, dt] = decode_mismatches();
    c.expect(db == 0 && dt > 0,
             "(d) any L of L+S decode: " + std::to_string(db) + " of " + std::to_string(dt) + " subsets differ");
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(c.seconds < c.budget_seconds, "runtime under 60 s");
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
        else {
            std::cerr << "usage: acceptance [--criterion N]\n";
            return 2;
        }
    }
    bool ok = true;
    auto run = [&](int id, auto&& fn) {
        if (only && only != id) return;
        const auto c = fn();
        repro::print(std::cout, c);
        ok = ok && c.passed();
    };
    run(1, [] { return repro::single_round_example(); });
    run(2, [] { return repro::constrained_pair_example(); });
    run(3, [] { return repro::twelve_machine_table(); });
    run(4, [] { return repro::coded_rounds(); });
    run(5, [] { return property_suites(); });
    run(6, [] { return repro::relaxed_storage(); });
    return ok ? 0 : 1;
}
