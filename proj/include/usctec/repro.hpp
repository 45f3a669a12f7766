#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace usctec::repro {

inline constexpr double kCyclicTimeTolerance = 1e-4;
inline constexpr double kPlacedTimeTolerance = 1e-3;
inline constexpr double kPlacedStorageTolerance = 1e-2;

struct Check {
    std::string label;
    bool passed = false;
};

struct Criterion {
    int id = 0;
    std::string title;
    double budget_seconds = 0;
    double seconds = 0;
    std::vector<Check> checks;

    void expect(bool ok, std::string label) { checks.push_back({std::move(label), ok}); }
    bool passed() const;
};

/// Single-round water-filling and division, exact.
Criterion single_round_example();
/// Placement trace of the two-realization system with storage caps.
Criterion constrained_pair_example();
/// Twelve-machine comparison, Q = 6..12.
Criterion twelve_machine_table();
/// Seeded coded rounds with adversarial stragglers on both example systems.
Criterion coded_rounds(std::size_t trials = 100);
/// e = 1: placement equals the mean of the unconstrained optima.
Criterion relaxed_storage();

/// Check lines, then one summary line "PASS [id] title (t s)".
void print(std::ostream& os, const Criterion& c);

}  // namespace usctec::repro
