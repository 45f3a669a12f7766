#include "usctec/instances.hpp"

namespace usctec::instances {

namespace {

RationalVec ints(std::initializer_list<std::int64_t> values) {
    RationalVec out;
    for (auto v : values) out.emplace_back(v);
    return out;
}

}  // namespace

Model single_round() {
    SystemParams params{6, 2, 1, RationalVec(6, Rational(1))};
    SpeedDistribution dist{{{SpeedRealization{ints({3, 3, 4, 4, 5, 5})}, Rational(1)}}};
    return make_model(std::move(params), std::move(dist));
}

Model constrained_pair() {
    SystemParams params{6, 2, 1,
                        {Rational(3, 5), Rational(3, 5), Rational(4, 5), Rational(4, 5), Rational(1), Rational(1)}};
    SpeedDistribution dist{{
        {SpeedRealization{ints({3, 3, 4, 4, 5, 5})}, Rational(1, 2)},
        {SpeedRealization{ints({3, 1, 2, 2, 3, 5})}, Rational(1, 2)},
    }};
    return make_model(std::move(params), std::move(dist));
}

Model twelve_machines(std::size_t blocks_per_machine) {
    SystemParams params{12, 2, 1, RationalVec(12, Rational(static_cast<std::int64_t>(blocks_per_machine), 12))};
    SpeedDistribution dist{{
        {SpeedRealization{ints({1, 1, 2, 2, 2, 3, 8, 8, 8, 8, 9, 9})}, Rational(1, 2)},
        {SpeedRealization{ints({8, 8, 2, 3, 9, 9, 2, 1, 8, 5, 2, 8})}, Rational(1, 2)},
    }};
    return make_model(std::move(params), std::move(dist));
}

}  // namespace usctec::instances
