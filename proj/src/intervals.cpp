#include "usctec/intervals.hpp"

#include "usctec/errors.hpp"

#include <algorithm>

namespace usctec {

IntervalSet::IntervalSet(Interval iv) {
    if (!iv.empty()) parts_.push_back(std::move(iv));
}

IntervalSet IntervalSet::from(std::vector<Interval> intervals) {
    std::erase_if(intervals, [](const Interval& iv) { return iv.empty(); });
    std::sort(intervals.begin(), intervals.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    IntervalSet out;
    for (auto& iv : intervals) {
        if (!out.parts_.empty() && iv.lo <= out.parts_.back().hi) {
            if (out.parts_.back().hi < iv.hi) out.parts_.back().hi = iv.hi;
        } else {
            out.parts_.push_back(std::move(iv));
        }
    }
    return out;
}

Rational IntervalSet::measure() const {
    Rational total;
    for (const auto& iv : parts_) total += iv.length();
    return total;
}

Rational IntervalSet::measure_below(const Rational& y) const {
    Rational total;
    for (const auto& iv : parts_) {
        if (!(iv.lo < y)) break;
        total += min(iv.hi, y) - iv.lo;
    }
    return total;
}

bool IntervalSet::contains(const Rational& y) const {
    return std::any_of(parts_.begin(), parts_.end(),
                       [&](const Interval& iv) { return iv.lo <= y && y < iv.hi; });
}

bool IntervalSet::is_subset_of(const IntervalSet& other) const { return intersect(other) == *this; }

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
    std::vector<Interval> all = parts_;
    all.insert(all.end(), other.parts_.begin(), other.parts_.end());
    return from(std::move(all));
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
    IntervalSet out;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < parts_.size() && j < other.parts_.size()) {
        const auto& a = parts_[i];
        const auto& b = other.parts_[j];
        Rational lo = max(a.lo, b.lo);
        Rational hi = min(a.hi, b.hi);
        if (lo < hi) out.parts_.push_back({lo, hi});
        if (a.hi < b.hi) ++i; else ++j;
    }
    return out;
}

void IntervalSet::add(Interval iv) { *this = unite(IntervalSet(std::move(iv))); }

IntervalSet unite(std::span<const IntervalSet> sets) {
    std::vector<Interval> all;
    for (const auto& s : sets) all.insert(all.end(), s.intervals().begin(), s.intervals().end());
    return IntervalSet::from(std::move(all));
}

std::vector<Interval> gamma_to_intervals(std::span<const Rational> gamma, const Rational& origin) {
    if (origin.sign() < 0) throw InputError("interval origin is negative");
    std::vector<Interval> out;
    out.reserve(gamma.size());
    Rational cursor = origin;
    for (const auto& g : gamma) {
        if (g.sign() < 0) throw InputError("negative block fraction " + g.str());
        Rational next = cursor + g;
        out.push_back({cursor, next});
        cursor = std::move(next);
    }
    if (cursor > Rational(1))
        throw InputError("block layout overflows [0,1]: origin + sum(gamma) = " + cursor.str());
    return out;
}

}  // namespace usctec
