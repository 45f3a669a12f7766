#include "oracles.hpp"
#include "support.hpp"
#include "usctec/errors.hpp"
#include "usctec/load_solver.hpp"

#include <doctest.h>

using namespace usctec;
using namespace usctec::testing;

TEST_CASE("water-filling on the single-round system") {
    const auto sol = solve_lp({Rational(3), SpeedRealization{ints({3, 3, 4, 4, 5, 5})}, RationalVec(6, Rational(1))});
    CHECK(sol.load == V({"3/8", "3/8", "1/2", "1/2", "5/8", "5/8"}));
    CHECK(sol.time == R("1/8"));
}

TEST_CASE("water-filling with clamped and unavailable machines") {
    const RationalVec caps(6, R("2/5"));
    const auto b = solve_lp({R("6/5"), SpeedRealization{ints({0, 1, 2, 2, 3, 5})}, caps});
    CHECK(b.load == V({"0", "1/10", "1/5", "1/5", "3/10", "2/5"}));
    CHECK(b.time == R("1/10"));
    const auto a = solve_lp({R("6/5"), SpeedRealization{ints({0, 3, 4, 4, 5, 5})}, caps});
    CHECK(a.load == V({"0", "6/35", "8/35", "8/35", "2/7", "2/7"}));
    CHECK(a.time == R("2/35"));
}

TEST_CASE("load problem edge cases") {
    const SpeedRealization s{ints({1, 2})};
    CHECK(solve_lp({Rational(0), s, RationalVec(2, Rational(1))}).time == Rational(0));
    // total equals capacity: everything pinned
    const auto full = solve_lp({Rational(2), s, RationalVec(2, Rational(1))});
    CHECK(full.load == ints({1, 1}));
    CHECK(full.time == Rational(1));
    CHECK_THROWS_AS(solve_lp({R("5/2"), s, RationalVec(2, Rational(1))}), InfeasibleError);
    CHECK_THROWS_AS(solve_lp({Rational(1), SpeedRealization{ints({0, 0})}, RationalVec(2, Rational(1))}),
                    InfeasibleError);
    CHECK_THROWS_AS(solve_lp({Rational(1), s, RationalVec(3, Rational(1))}), InputError);
}

TEST_CASE("computation and expected time") {
    CHECK(computation_time(V({"3/8", "3/8", "1/2", "1/2", "5/8", "5/8"}), SpeedRealization{ints({3, 3, 4, 4, 5, 5})}) ==
          R("1/8"));
    CHECK(computation_time(ints({0, 0, 0}), SpeedRealization{ints({1, 1, 4})}) == Rational(0));
    CHECK(computation_time(ints({0, 0, 1}), SpeedRealization{ints({1, 1, 4})}) == R("1/4"));
    CHECK_THROWS_AS(computation_time(ints({1, 0}), SpeedRealization{ints({0, 1})}), InputError);

    SpeedDistribution two{{{SpeedRealization{ints({1})}, R("1/2")}, {SpeedRealization{ints({1})}, R("1/2")}}};
    const auto t = expected_time(two, V({"3/61", "3/65"}));
    CHECK(t == R("189/3965"));
    CHECK(t.to_double() == doctest::Approx(0.047667).epsilon(1e-5));
    SpeedDistribution one{{{SpeedRealization{ints({1})}, Rational(1)}}};
    CHECK(expected_time(one, V({"2/7"})) == R("2/7"));
    CHECK_THROWS_AS(expected_time(one, V({"1", "2"})), InputError);
}

namespace {

LoadProblem random_problem(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> size(1, 6);
    std::uniform_int_distribution<int> coin(0, 4);
    const std::size_t n = size(rng);
    LoadProblem p;
    p.speeds.speeds.resize(n);
    p.caps.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        p.speeds.speeds[i] = coin(rng) == 0 ? Rational(0) : random_rational(rng, 4, 0, 9) + Rational(1, 4);
        p.caps[i] = random_rational(rng, 6, 0, 1);
    }
    if (p.speeds.available_count() == 0) p.speeds.speeds[0] = Rational(3);
    Rational capacity;
    for (auto i : p.speeds.available_machines()) capacity += p.caps[i];
    p.total = capacity * random_rational(rng, 7, 0, 1);
    return p;
}

}  // namespace

TEST_CASE("water-filling equals the bisection oracle (1000 random instances)") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 1000; ++t) {
        const auto p = random_problem(rng);
        const auto sol = solve_lp(p);
        const Rational c = bisection_level(p.total, p.speeds, p.caps);
        REQUIRE(sol.time == c);
        CHECK(sum(sol.load) == p.total);
        for (std::size_t n = 0; n < p.caps.size(); ++n) {
            if (!p.speeds.available(n)) {
                CHECK(sol.load[n].is_zero());
                continue;
            }
            CHECK(sol.load[n].sign() >= 0);
            CHECK(sol.load[n] <= p.caps[n]);
            CHECK(sol.load[n] == min(c * p.speeds.speeds[n], p.caps[n]));
            // complementary slackness
            if (sol.load[n] < p.caps[n]) CHECK(sol.load[n] / p.speeds.speeds[n] == c);
        }
    }
}

TEST_CASE("load level is monotone in caps and total") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 300; ++t) {
        auto p = random_problem(rng);
        const Rational base = solve_lp(p).time;

        auto more_cap = p;
        std::uniform_int_distribution<std::size_t> pick(0, p.caps.size() - 1);
        auto& cap = more_cap.caps[pick(rng)];
        cap = min(Rational(1), cap + random_rational(rng, 5, 0, 1));
        CHECK(solve_lp(more_cap).time <= base);

        auto less_load = p;
        less_load.total = p.total * random_rational(rng, 5, 0, 1);
        CHECK(solve_lp(less_load).time <= base);
    }
}
