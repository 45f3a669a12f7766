#include "usctec/placement.hpp"

#include "usctec/errors.hpp"
#include "usctec/load_solver.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace usctec {

std::vector<IntervalSet> storage_selection(const Scheme& scheme, std::size_t machines) {
    const auto blocks = gamma_to_intervals(scheme.gamma, Rational(0));
    std::vector<std::vector<Interval>> parts(machines);
    for (std::size_t g = 0; g < blocks.size(); ++g)
        for (auto n : scheme.selected(g)) parts[n].push_back(blocks[g]);
    std::vector<IntervalSet> out;
    out.reserve(machines);
    for (auto& p : parts) out.push_back(IntervalSet::from(std::move(p)));
    return out;
}

std::optional<Overflow> detect_overflow(std::span<const IntervalSet> candidate, std::span<const Rational> caps) {
    if (candidate.size() != caps.size()) throw InputError("candidate storage and caps differ in length");
    std::optional<Rational> first;
    std::vector<std::pair<std::size_t, Rational>> crossings;
    for (std::size_t n = 0; n < candidate.size(); ++n) {
        if (candidate[n].measure() <= caps[n]) continue;
        // Walk until the stored measure would pass the cap; the supremum of
        // feasible prefixes is inside (or at the start of) that interval.
        Rational stored;
        for (const auto& iv : candidate[n].intervals()) {
            if (stored + iv.length() > caps[n]) {
                Rational y = iv.lo + (caps[n] - stored);
                crossings.emplace_back(n, y);
                if (!first || y < *first) first = y;
                break;
            }
            stored += iv.length();
        }
    }
    if (!first) return std::nullopt;
    Overflow out{*first, {}};
    for (const auto& [n, y] : crossings)
        if (y == *first) out.machines.push_back(n);
    return out;
}

Scheme truncate(const Scheme& scheme, const Rational& mass) {
    Rational total = sum(scheme.gamma);
    if (mass > total) throw InputError("cannot truncate to " + mass.str() + ": scheme mass is " + total.str());
    if (mass.sign() < 0) throw InputError("negative truncation mass");
    Scheme out;
    Rational cumulative;
    for (std::size_t g = 0; g < scheme.blocks() && cumulative < mass; ++g) {
        Rational take = min(scheme.gamma[g], mass - cumulative);
        cumulative += take;
        out.gamma.push_back(std::move(take));
        out.mu.push_back(scheme.mu[g]);
    }
    return out;
}

namespace {

Scheme concat(const Scheme& head, const Scheme& tail) {
    Scheme out = head;
    out.gamma.insert(out.gamma.end(), tail.gamma.begin(), tail.gamma.end());
    out.mu.insert(out.mu.end(), tail.mu.begin(), tail.mu.end());
    return out;
}

std::string where(std::size_t pass, std::size_t realization) {
    return "pass " + std::to_string(pass) + ", realization " + std::to_string(realization + 1) + ": ";
}

}  // namespace

PlacementResult place(const Model& model) {
    const auto& params = model.params();
    const auto& dist = model.distribution();
    const std::size_t n_machines = params.machines;
    const std::size_t k = params.replication();
    const std::size_t n_real = dist.realizations.size();
    const Rational k_rat(static_cast<std::int64_t>(k));

    Rational committed;
    std::vector<Scheme> prefix(n_real);
    std::vector<SpeedRealization> working;
    for (const auto& wr : dist.realizations) working.push_back(wr.realization);

    PlacementResult result;
    std::vector<Scheme> full(n_real);
    // Every overflow pass disables at least one machine.
    for (std::size_t pass = 1;; ++pass) {
        if (pass > n_machines + 1) throw Error("placement did not terminate within N+1 passes");

        PlacementPass record;
        record.committed = committed;
        const Rational residual = Rational(1) - committed;
        const RationalVec caps(n_machines, residual);

        std::vector<IntervalSet> candidate(n_machines);
        std::vector<std::vector<IntervalSet>> selections(n_real);
        for (std::size_t i = 0; i < n_real; ++i) {
            if (working[i].available_count() < k)
                throw InfeasibleError(where(pass, i) + "only " + std::to_string(working[i].available_count()) +
                                      " enabled machines left, L+S=" + std::to_string(k));
            LoadSolution lp;
            try {
                lp = solve_lp({k_rat * residual, working[i], caps});
            } catch (const InfeasibleError& e) {
                throw InfeasibleError(where(pass, i) + e.what());
            }
            DivisionResult pending = divide({lp.load, residual, k});
            full[i] = concat(prefix[i], pending.to_scheme(n_machines));
            selections[i] = storage_selection(full[i], n_machines);
            for (std::size_t n = 0; n < n_machines; ++n) candidate[n] = candidate[n].unite(selections[i][n]);
            record.pending_loads.push_back(std::move(lp.load));
            record.pending.push_back(std::move(pending));
        }
        record.candidate = candidate;
        record.overflow = detect_overflow(candidate, params.storage_caps);

        if (!record.overflow) {
            result.storage = std::move(candidate);
            result.selections = std::move(selections);
            result.passes.push_back(std::move(record));
            break;
        }

        committed = record.overflow->location;
        for (std::size_t i = 0; i < n_real; ++i) {
            prefix[i] = truncate(full[i], committed);
            record.truncated.push_back(prefix[i]);
            for (auto n : record.overflow->machines) working[i].speeds[n] = Rational(0);
        }
        for (auto n : record.overflow->machines) result.disabled.push_back(n);
        result.passes.push_back(std::move(record));
    }

    result.schemes = std::move(full);
    for (std::size_t i = 0; i < n_real; ++i)
        result.times.push_back(computation_time(result.schemes[i].load(n_machines), dist.realizations[i].realization));
    result.expected_time = expected_time(dist, result.times);
    return result;
}

Rational storage_size(const PlacementResult& result) {
    Rational total;
    for (const auto& z : result.storage) total += z.measure();
    return total;
}

std::vector<GeometryRow> export_geometry(const PlacementResult& result) {
    std::vector<GeometryRow> rows;
    const std::size_t n_real = result.selections.size();
    for (std::size_t n = 0; n < result.storage.size(); ++n) {
        for (const auto& stored : result.storage[n].intervals()) {
            std::set<Rational> cuts{stored.lo, stored.hi};
            for (std::size_t i = 0; i < n_real; ++i)
                for (const auto& iv : result.selections[i][n].intervals()) {
                    if (stored.lo < iv.lo && iv.lo < stored.hi) cuts.insert(iv.lo);
                    if (stored.lo < iv.hi && iv.hi < stored.hi) cuts.insert(iv.hi);
                }
            std::vector<Rational> points(cuts.begin(), cuts.end());
            for (std::size_t c = 0; c + 1 < points.size(); ++c) {
                std::vector<std::size_t> tags;
                for (std::size_t i = 0; i < n_real; ++i)
                    if (result.selections[i][n].contains(points[c])) tags.push_back(i);
                if (!rows.empty() && rows.back().machine == n && rows.back().end == points[c] &&
                    rows.back().realizations == tags) {
                    rows.back().end = points[c + 1];
                    continue;
                }
                GeometryRow row{n, points[c], points[c + 1], tags, tags.size() == n_real};
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

std::string geometry_csv(const std::vector<GeometryRow>& rows) {
    std::ostringstream os;
    os << "machine,start,end,tags\n";
    for (const auto& r : rows) {
        os << r.machine + 1 << ',' << r.start << ',' << r.end << ',';
        if (r.common) {
            os << "common";
        } else {
            for (std::size_t i = 0; i < r.realizations.size(); ++i)
                os << (i ? ";" : "") << 's' << r.realizations[i] + 1;
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace usctec
