#pragma once

#include "usctec/division.hpp"
#include "usctec/intervals.hpp"
#include "usctec/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace usctec {

/// Storage selection I_n of every machine under `scheme`, with blocks laid out from 0.
std::vector<IntervalSet> storage_selection(const Scheme& scheme, std::size_t machines);

struct Overflow {
    /// Largest y with measure_below(Z_n, y) <= e[n] for every machine.
    Rational location;
    /// Machines that would exceed their cap past `location` (0-based, ascending).
    std::vector<std::size_t> machines;
};

/// nullopt when every candidate fits its cap (storing exactly e[n] is allowed).
std::optional<Overflow> detect_overflow(std::span<const IntervalSet> candidate, std::span<const Rational> caps);

/// Keeps the leading blocks up to cumulative mass `mass`, shortening the
/// boundary block; mu rows are kept unchanged.
Scheme truncate(const Scheme& scheme, const Rational& mass);

/// Everything that happened in one pass of the placement loop.
struct PlacementPass {
    Rational committed;                        // rho-hat at the start of the pass
    std::vector<RationalVec> pending_loads;    // per realization, LP solution on the residual rows
    std::vector<DivisionResult> pending;       // per realization, division of that load
    std::vector<IntervalSet> candidate;        // per machine, union over realizations
    std::optional<Overflow> overflow;
    std::vector<Scheme> truncated;             // per realization; empty when no overflow
};

struct PlacementResult {
    std::vector<IntervalSet> storage;                   // Z_n
    std::vector<std::vector<IntervalSet>> selections;   // [realization][machine] -> I_{s,n}
    std::vector<Scheme> schemes;                        // final (gamma'_s, mu'_s)
    RationalVec times;
    Rational expected_time;
    std::vector<std::size_t> disabled;                  // machines switched off by overflow, in order
    std::vector<PlacementPass> passes;
};

/// Storage placement and per-realization selections under the storage caps.
/// Throws InfeasibleError (naming pass and realization) when disabling
/// machines leaves a realization unable to serve L+S copies.
PlacementResult place(const Model& model);

/// Sum over machines of measure(Z_n).
Rational storage_size(const PlacementResult& result);

struct GeometryRow {
    std::size_t machine = 0;                // 0-based
    Rational start;
    Rational end;
    std::vector<std::size_t> realizations;  // 0-based, ascending
    bool common = false;                    // selected by every realization
};

/// One row per maximal stored interval with a constant set of selecting realizations.
std::vector<GeometryRow> export_geometry(const PlacementResult& result);

/// CSV with header `machine,start,end,tags`; machines 1-based, tags "common" or "s1;s3".
std::string geometry_csv(const std::vector<GeometryRow>& rows);

}  // namespace usctec
