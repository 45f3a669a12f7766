#pragma once

#include "usctec/coded_multiply.hpp"
#include "usctec/model.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace usctec {

/// How schemes are produced: storage-aware placement, or the cyclic baseline with Q blocks per machine.
struct Strategy {
    enum class Kind { placement, cyclic };
    Kind kind = Kind::placement;
    std::size_t blocks_per_machine = 0;

    static Strategy placement() { return {}; }
    static Strategy cyclic(std::size_t q) { return {Kind::cyclic, q}; }
    std::string name() const;
};

struct SystemReport {
    Strategy strategy;
    bool feasible = false;
    std::string error;
    std::vector<Scheme> schemes;
    RationalVec times;
    Rational expected_time;
    Rational storage_size;
};

/// Per-realization times, expected time and storage for one strategy.
/// Infeasibility is reported in the result (feasible = false), not thrown.
SystemReport evaluate_system(const Model& model, const Strategy& strategy);

struct VerifyOptions {
    std::uint64_t prime = PrimeField::kDefaultPrime;
    std::size_t rows = 0;      // q; 0 = smallest exact size
    std::size_t inner = 4;     // v
    std::size_t columns = 0;   // r; 0 = smallest exact size
    std::uint64_t seed = 0;
    std::size_t trials = 1;
    std::optional<std::size_t> stragglers_per_group;  // default S
    RowRounding rounding = RowRounding::exact;
    std::size_t max_dimension = 4096;
    /// Fixed (A, B) instead of seeded random matrices; overrides rows/inner/columns.
    std::optional<std::pair<FieldMatrix, FieldMatrix>> matrices;
    /// Explicit (block, group, machine) triples, 0-based; replaces random straggler draws.
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> withheld;
};

struct RoundOutcome {
    std::size_t realization = 0;
    std::size_t trial = 0;
    bool decoded = false;
    bool matches = false;
    std::size_t stragglers = 0;
    std::string detail;
};

struct VerifyReport {
    bool passed = false;
    bool skipped = false;
    std::string notice;
    std::uint64_t seed = 0;
    std::vector<std::size_t> rows;     // per realization
    std::vector<std::size_t> columns;  // per realization
    std::vector<RoundOutcome> rounds;
};

/// Builds schemes, draws seeded matrices and straggler sets, runs the coded
/// round and compares against the direct product. Rounds run on
/// USCTEC_THREADS worker threads (default 1); the report does not depend on it.
VerifyReport verify_round(const Model& model, const Strategy& strategy, const VerifyOptions& options);

/// Smallest q with every gamma[g] * q integral.
BigInt exact_rows(const Scheme& scheme);
/// Smallest r, a multiple of L, with every column-group mass * r / L integral.
BigInt exact_columns(const Scheme& scheme, const SystemParams& params);

struct ComparisonRow {
    std::size_t blocks_per_machine = 0;
    std::size_t machines = 0;
    std::string strategy;
    bool feasible = false;
    Rational storage_size;
    Rational expected_time;
};

/// For each Q: caps e = Q/N everywhere, then both strategies.
std::vector<ComparisonRow> compare(const Model& base, std::span<const std::size_t> blocks_per_machine);

/// Header: Q_over_N,strategy,storage_size,expected_time_exact,expected_time_5dp
std::string comparison_csv(const std::vector<ComparisonRow>& rows);

/// Threads used by the simulator (USCTEC_THREADS, at least 1).
std::size_t simulator_threads();

}  // namespace usctec
