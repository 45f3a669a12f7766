#pragma once

#include "usctec/model.hpp"
#include "usctec/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace usctec::testing {

/// Smallest c with sum over available n of min(c*s[n], sigma[n]) >= l, found by
/// bisection and solved exactly once no breakpoint sigma/s lies inside the bracket.
Rational bisection_level(const Rational& l, const SpeedRealization& s, const RationalVec& sigma);

/// Does theta lie in the cone spanned by the k-subset indicator vectors?
/// Searches linearly independent indicator subsets (Caratheodory) and solves
/// each square subsystem by integer Cramer's rule.
class ConeSearch {
public:
    ConeSearch(std::size_t machines, std::size_t replication);
    /// theta given as integers (already scaled by a common denominator).
    bool representable(const std::vector<std::int64_t>& theta) const;

private:
    struct Basis {
        std::vector<std::size_t> columns;  // indices into subsets_
        std::vector<std::size_t> rows;     // row selection with nonzero minor
        std::int64_t det = 0;
    };
    std::size_t machines_;
    std::vector<std::vector<std::int64_t>> subsets_;  // indicator vectors
    std::vector<Basis> bases_;
};

std::int64_t integer_det(std::vector<std::vector<std::int64_t>> m);

}  // namespace usctec::testing
