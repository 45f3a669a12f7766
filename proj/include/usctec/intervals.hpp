#pragma once

#include "usctec/rational.hpp"

#include <span>
#include <vector>

namespace usctec {

/// Half-open [lo, hi) over row locations in [0, 1].
struct Interval {
    Rational lo;
    Rational hi;

    Rational length() const { return hi - lo; }
    bool empty() const { return !(lo < hi); }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Union of disjoint, maximal, sorted half-open intervals.
class IntervalSet {
public:
    IntervalSet() = default;
    explicit IntervalSet(Interval iv);
    /// Normalizes arbitrary (possibly overlapping, empty, unsorted) input.
    static IntervalSet from(std::vector<Interval> intervals);

    const std::vector<Interval>& intervals() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    Rational measure() const;
    /// Measure of the set restricted to [0, y).
    Rational measure_below(const Rational& y) const;
    bool contains(const Rational& y) const;
    bool is_subset_of(const IntervalSet& other) const;

    IntervalSet unite(const IntervalSet& other) const;
    IntervalSet intersect(const IntervalSet& other) const;
    void add(Interval iv);

    friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

private:
    std::vector<Interval> parts_;
};

IntervalSet unite(std::span<const IntervalSet> sets);

/// Lays blocks out back to back starting at `origin`: block g covers
/// [origin + sum_{g'<g} gamma, origin + sum_{g'<=g} gamma).
/// Throws InputError if the layout runs past 1.
std::vector<Interval> gamma_to_intervals(std::span<const Rational> gamma, const Rational& origin);

}  // namespace usctec
