#include "usctec/json_io.hpp"

#include "usctec/placement.hpp"

#include <fstream>
#include <sstream>

namespace usctec::io {

namespace {

const json& at_pointer(const json& doc, const std::string& pointer) {
    try {
        return doc.at(json::json_pointer(pointer));
    } catch (const json::exception&) {
        throw ConfigError(pointer, "missing field");
    }
}

bool has(const json& doc, const std::string& pointer) { return doc.contains(json::json_pointer(pointer)); }

std::size_t size_at(const json& doc, const std::string& pointer) {
    const json& v = at_pointer(doc, pointer);
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
        throw ConfigError(pointer, "expected a non-negative integer");
    return v.get<std::size_t>();
}

json one_based(const std::vector<std::size_t>& machines) {
    json out = json::array();
    for (auto n : machines) out.push_back(n + 1);
    return out;
}

}  // namespace

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError("", std::string("malformed JSON: ") + e.what());
    }
}

Rational rational_at(const json& doc, const std::string& pointer) {
    const json& v = at_pointer(doc, pointer);
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (!v.is_string()) throw ConfigError(pointer, "expected a rational string such as \"3/5\"");
    try {
        return Rational::parse(v.get<std::string>());
    } catch (const InputError& e) {
        throw ConfigError(pointer, e.what());
    }
}

RationalVec rationals_at(const json& doc, const std::string& pointer) {
    const json& v = at_pointer(doc, pointer);
    if (!v.is_array()) throw ConfigError(pointer, "expected an array");
    RationalVec out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(rational_at(doc, pointer + "/" + std::to_string(i)));
    return out;
}

SystemConfig parse_system(const json& doc) {
    if (!doc.is_object()) throw ConfigError("", "expected a JSON object");
    SystemConfig cfg;
    cfg.params.machines = size_at(doc, "/N");
    cfg.params.recovery_threshold = size_at(doc, "/L");
    cfg.params.stragglers = size_at(doc, "/S");
    cfg.params.storage_caps = has(doc, "/e") ? rationals_at(doc, "/e") : RationalVec(cfg.params.machines, Rational(1));

    const json& reals = at_pointer(doc, "/realizations");
    if (!reals.is_array()) throw ConfigError("/realizations", "expected an array");
    for (std::size_t i = 0; i < reals.size(); ++i) {
        const std::string base = "/realizations/" + std::to_string(i);
        WeightedRealization wr;
        wr.realization.speeds = rationals_at(doc, base + "/s");
        wr.probability = has(doc, base + "/prob") ? rational_at(doc, base + "/prob")
                                                  : Rational(1, static_cast<std::int64_t>(reals.size()));
        cfg.distribution.realizations.push_back(std::move(wr));
    }

    if (has(doc, "/field/prime")) {
        const json& p = at_pointer(doc, "/field/prime");
        if (!p.is_number_unsigned()) throw ConfigError("/field/prime", "expected a positive integer");
        cfg.prime = p.get<std::uint64_t>();
    }
    if (has(doc, "/matrices")) {
        auto& m = cfg.matrices;
        if (has(doc, "/matrices/q")) m.rows = size_at(doc, "/matrices/q");
        if (has(doc, "/matrices/v")) m.inner = size_at(doc, "/matrices/v");
        if (has(doc, "/matrices/r")) m.columns = size_at(doc, "/matrices/r");
        if (has(doc, "/matrices/seed")) m.seed = size_at(doc, "/matrices/seed");
        if (has(doc, "/matrices/csv")) {
            const json& csv = at_pointer(doc, "/matrices/csv");
            if (!csv.contains("A") || !csv.contains("B") || !csv["A"].is_string() || !csv["B"].is_string())
                throw ConfigError("/matrices/csv", "expected {\"A\": path, \"B\": path}");
            m.csv_a = csv["A"].get<std::string>();
            m.csv_b = csv["B"].get<std::string>();
        }
    }
    return cfg;
}

LoadProblem parse_load_problem(const json& doc) {
    LoadProblem p;
    p.total = rational_at(doc, "/l");
    p.speeds.speeds = rationals_at(doc, "/s");
    p.caps = has(doc, "/sigma") ? rationals_at(doc, "/sigma") : RationalVec(p.speeds.speeds.size(), Rational(1));
    if (p.caps.size() != p.speeds.speeds.size()) throw ConfigError("/sigma", "length differs from /s");
    return p;
}

DivisionProblem parse_division_problem(const json& doc) {
    DivisionProblem p;
    p.load = rationals_at(doc, "/theta");
    p.replication = size_at(doc, "/k");
    p.mass = has(doc, "/rho") ? rational_at(doc, "/rho")
                              : sum(p.load) / Rational(static_cast<std::int64_t>(std::max<std::size_t>(p.replication, 1)));
    return p;
}

json to_json(const Rational& r) { return r.str(); }

json to_json(std::span<const Rational> values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(v.str());
    return out;
}

json to_json(const Interval& iv) { return json::array({iv.lo.str(), iv.hi.str()}); }

json to_json(const IntervalSet& set) {
    json out = json::array();
    for (const auto& iv : set.intervals()) out.push_back(to_json(iv));
    return out;
}

json to_json(const LoadSolution& solution) {
    json decimals = json::array();
    for (const auto& t : solution.load) decimals.push_back(t.to_decimal(6));
    return {{"theta", to_json(solution.load)},
            {"theta_decimal", decimals},
            {"c", solution.time.str()},
            {"c_decimal", solution.time.to_decimal(6)}};
}

json to_json(const DivisionResult& result, std::size_t machines) {
    json supports = json::array();
    for (const auto& s : result.supports) supports.push_back(one_based(s));
    json mu = json::array();
    for (const auto& row : result.to_scheme(machines).mu) mu.push_back(to_json(row));
    return {{"gamma", to_json(result.gamma)}, {"supports", supports}, {"mu", mu}};
}

json to_json(const Scheme& scheme) {
    const std::size_t machines = scheme.mu.empty() ? 0 : scheme.mu.front().size();
    json mu = json::array();
    json selected = json::array();
    for (std::size_t g = 0; g < scheme.blocks(); ++g) {
        mu.push_back(to_json(scheme.mu[g]));
        selected.push_back(one_based(scheme.selected(g)));
    }
    return {{"gamma", to_json(scheme.gamma)}, {"mu", mu}, {"selected", selected},
            {"theta", to_json(scheme.load(machines))}};
}

json to_json(const BlockAssignment& assignment, const std::vector<IndexRange>* columns) {
    json groups = json::array();
    for (std::size_t f = 0; f < assignment.groups.size(); ++f) {
        json g = {{"mass", assignment.groups[f].mass.str()}, {"machines", one_based(assignment.groups[f].machines)}};
        if (columns) {
            const auto& c = (*columns)[f];
            // 1-based inclusive, empty ranges have last < first
            g["columns"] = {{"first", c.begin + 1}, {"last", c.end}};
        }
        groups.push_back(std::move(g));
    }
    return {{"F", assignment.groups.size()}, {"groups", groups}};
}

json to_json(const PlacementResult& result) {
    json storage = json::array();
    for (std::size_t n = 0; n < result.storage.size(); ++n)
        storage.push_back({{"machine", n + 1}, {"intervals", to_json(result.storage[n])},
                           {"measure", result.storage[n].measure().str()}});
    json selections = json::array();
    for (const auto& per_machine : result.selections) {
        json s = json::array();
        for (const auto& iv : per_machine) s.push_back(to_json(iv));
        selections.push_back(std::move(s));
    }
    json schemes = json::array();
    for (const auto& sc : result.schemes) schemes.push_back(to_json(sc));
    json passes = json::array();
    for (const auto& p : result.passes) {
        json pass = {{"committed", p.committed.str()}};
        json loads = json::array();
        for (const auto& l : p.pending_loads) loads.push_back(to_json(l));
        pass["pending_loads"] = loads;
        json pending = json::array();
        const std::size_t machines = result.storage.size();
        for (const auto& d : p.pending) pending.push_back(to_json(d, machines));
        pass["pending_divisions"] = pending;
        if (p.overflow) {
            pass["overflow"] = {{"location", p.overflow->location.str()}, {"machines", one_based(p.overflow->machines)}};
            json truncated = json::array();
            for (const auto& t : p.truncated) truncated.push_back(to_json(t.gamma));
            pass["truncated_gamma"] = truncated;
        } else {
            pass["overflow"] = nullptr;
        }
        passes.push_back(std::move(pass));
    }
    return {{"storage", storage},
            {"storage_size", storage_size(result).str()},
            {"storage_size_decimal", storage_size(result).to_decimal(5)},
            {"selections", selections},
            {"schemes", schemes},
            {"times", to_json(result.times)},
            {"expected_time", result.expected_time.str()},
            {"expected_time_decimal", result.expected_time.to_decimal(5)},
            {"disabled", one_based(result.disabled)},
            {"passes", passes}};
}

json to_json(const SystemReport& report) {
    json out = {{"strategy", report.strategy.name()}, {"feasible", report.feasible}};
    if (!report.feasible) {
        out["error"] = report.error;
        return out;
    }
    json schemes = json::array();
    for (const auto& s : report.schemes) schemes.push_back(to_json(s));
    out["schemes"] = schemes;
    out["times"] = to_json(report.times);
    out["expected_time"] = report.expected_time.str();
    out["expected_time_5dp"] = report.expected_time.to_decimal_truncated(5);
    out["storage_size"] = report.storage_size.str();
    out["storage_size_5dp"] = report.storage_size.to_decimal_truncated(5);
    return out;
}

json to_json(const VerifyReport& report) {
    json rounds = json::array();
    for (const auto& r : report.rounds) {
        json o = {{"realization", r.realization + 1}, {"trial", r.trial}, {"stragglers", r.stragglers},
                  {"decoded", r.decoded}, {"matches", r.matches}};
        if (!r.detail.empty()) o["detail"] = r.detail;
        rounds.push_back(std::move(o));
    }
    json out = {{"passed", report.passed}, {"skipped", report.skipped}, {"seed", report.seed},
                {"q", report.rows}, {"r", report.columns}, {"rounds", rounds}};
    if (!report.notice.empty()) out["notice"] = report.notice;
    return out;
}

FieldMatrix read_matrix_csv(const std::string& path, const PrimeField& field) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open matrix file " + path);
    std::vector<std::vector<std::int64_t>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<std::int64_t> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                std::size_t used = 0;
                row.push_back(std::stoll(cell, &used));
                if (cell.find_first_not_of(" \t\r", used) != std::string::npos) throw std::invalid_argument(cell);
            } catch (const std::exception&) {
                throw InputError(path + ": row " + std::to_string(rows.size() + 1) + ": not an integer: '" + cell + "'");
            }
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw InputError(path + ": row " + std::to_string(rows.size() + 1) + " has a different width");
        rows.push_back(std::move(row));
    }
    FieldMatrix out(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) out.at(i, j) = field.reduce(rows[i][j]);
    return out;
}

}  // namespace usctec::io
