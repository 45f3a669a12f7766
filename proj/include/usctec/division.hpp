#pragma once

#include "usctec/model.hpp"
#include "usctec/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace usctec {

/// Split a load vector theta of total k*mass into blocks gamma (summing to
/// mass), each served by exactly k machines.
struct DivisionProblem {
    RationalVec load;
    Rational mass;
    std::size_t replication = 0;
};

struct DivisionResult {
    RationalVec gamma;
    /// Machines (0-based, ascending) with mu[g,n] = 1; each has exactly `replication` entries.
    std::vector<std::vector<std::size_t>> supports;

    /// Dense binary mu.
    Scheme to_scheme(std::size_t machines) const;
};

/// A binary division exists iff theta[n] <= sum(theta) / k for every n.
bool division_feasible(std::span<const Rational> load, std::size_t replication);

/// Greedy filling: each round pairs the smallest nonzero entry with the k-1
/// largest (ties by ascending value, then ascending index) and subtracts the
/// largest step that keeps the remainder feasible.
/// Throws InfeasibleError if the problem violates its invariants.
DivisionResult divide(const DivisionProblem& problem);

/// One column group M_{g,f}: a fraction of the unit column range served by k machines.
struct ColumnGroup {
    Rational mass;
    std::vector<std::size_t> machines;
};

/// (M_g, P_g) for one row block.
struct BlockAssignment {
    std::vector<ColumnGroup> groups;

    /// Sum of masses of the groups containing machine n.
    Rational machine_mass(std::size_t n) const;
};

/// Builds the column groups of a block from its mu row (sum must equal k).
/// Binary rows give a single group: the whole range on U_g.
BlockAssignment build_assignment(std::span<const Rational> mu_row, std::size_t replication);

/// Contiguous half-open index range [begin, end).
struct IndexRange {
    std::size_t begin = 0;
    std::size_t end = 0;

    std::size_t size() const { return end - begin; }
    friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

/// Maps nonnegative masses onto `width` indices: the cumulative boundaries
/// (normalized by the total mass) are rounded half up, so the ranges always
/// partition [0, width) and are exact whenever mass * width is integral.
std::vector<IndexRange> realize_ranges(std::span<const Rational> masses, std::size_t width);

/// Column ranges of [r/L] for each group of `assignment`. Throws InputError unless L divides r.
std::vector<IndexRange> realize_columns(const BlockAssignment& assignment, std::size_t columns,
                                        std::size_t recovery_threshold);

}  // namespace usctec
