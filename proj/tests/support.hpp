#pragma once

#include "usctec/errors.hpp"
#include "usctec/model.hpp"
#include "usctec/rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

namespace usctec::testing {

inline Rational R(const char* text) { return Rational::parse(text); }

inline RationalVec V(std::initializer_list<const char*> items) {
    RationalVec out;
    for (auto s : items) out.push_back(Rational::parse(s));
    return out;
}

inline RationalVec ints(std::initializer_list<std::int64_t> items) {
    RationalVec out;
    for (auto v : items) out.emplace_back(v);
    return out;
}

/// p/q with q in [1, max_den] and value in [lo, hi] (integers).
inline Rational random_rational(std::mt19937_64& rng, std::int64_t max_den, std::int64_t lo, std::int64_t hi) {
    std::uniform_int_distribution<std::int64_t> den(1, max_den);
    std::int64_t q = den(rng);
    std::uniform_int_distribution<std::int64_t> num(lo * q, hi * q);
    return Rational(num(rng), q);
}

/// Uniform random k-subset of {0..n-1}, ascending.
inline std::vector<std::size_t> random_subset(std::mt19937_64& rng, std::size_t n, std::size_t k) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(k);
    std::sort(all.begin(), all.end());
    return all;
}

inline std::vector<std::size_t> one_based(std::vector<std::size_t> v) {
    for (auto& x : v) ++x;
    return v;
}

}  // namespace usctec::testing
