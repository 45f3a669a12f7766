#include "usctec/cyclic.hpp"
#include "usctec/division.hpp"
#include "usctec/errors.hpp"
#include "usctec/instances.hpp"
#include "usctec/json_io.hpp"
#include "usctec/load_solver.hpp"
#include "usctec/placement.hpp"
#include "usctec/repro.hpp"
#include "usctec/simulator.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

using namespace usctec;
using io::json;

enum Exit { kOk = 0, kInvalid = 1, kInfeasible = 2, kFailed = 3 };

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

json read_json(const std::string& path) { return io::parse_document(read_input(path)); }

Model load_model(const io::SystemConfig& cfg) { return make_model(cfg.params, cfg.distribution); }

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

int report_error(const char* kind, const std::string& message, int code, json extra = json::object()) {
    json err = {{"error", kind}, {"message", message}};
    err.update(extra);
    std::cerr << err.dump() << '\n';
    return code;
}

/// "b:g:m,b:g:m" with 1-based block, group and machine.
std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> parse_withheld(const std::string& text) {
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t b = 0, g = 0, m = 0;
        char c1 = 0, c2 = 0;
        std::stringstream is(item);
        if (!(is >> b >> c1 >> g >> c2 >> m) || c1 != ':' || c2 != ':' || b == 0 || g == 0 || m == 0 ||
            !(is >> std::ws).eof())
            throw InputError("--stragglers: expected a count or block:group:machine list, got '" + item + "'");
        out.emplace_back(b - 1, g - 1, m - 1);
    }
    return out;
}

Strategy pick_strategy(const std::string& name, std::size_t q) {
    if (name == "usctec") return Strategy::placement();
    if (name == "cyclic") {
        if (q == 0) throw InputError("--strategy cyclic needs --Q");
        return Strategy::cyclic(q);
    }
    throw InputError("unknown strategy '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Elastic coded matrix multiplication with uncoded storage: scheduling, placement and simulation"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string geometry_path;
    std::size_t blocks = 0;
    std::string strategy = "usctec";
    std::optional<std::uint64_t> prime;
    std::optional<std::size_t> q, v, r;
    std::optional<std::uint64_t> seed;
    std::size_t trials = 1;
    std::string stragglers;
    std::string rounding = "exact";
    bool twelve = false;
    std::vector<std::size_t> q_list;

    auto* solve = app.add_subcommand("solve-lp", "Water-filling load problem: {l, s, sigma} -> theta, c");
    solve->add_option("input", input, "JSON file, - for stdin");

    auto* div = app.add_subcommand("divide", "Binary division of a load vector: {theta, k, rho}");
    div->add_option("input", input, "JSON file, - for stdin");

    auto* assign = app.add_subcommand("assign", "Column groups for one mu row: {mu, k, r?, L?}");
    assign->add_option("input", input, "JSON file, - for stdin");

    auto* placecmd = app.add_subcommand("place", "Storage placement under caps for a system config");
    placecmd->add_option("input", input, "system JSON, - for stdin");
    placecmd->add_option("--geometry", geometry_path, "also write machine,start,end,tags CSV here (- for stdout)");

    auto* cyc = app.add_subcommand("cyclic", "Cyclic baseline with Q blocks per machine");
    cyc->add_option("input", input, "system JSON, - for stdin");
    cyc->add_option("--Q", blocks, "blocks stored per machine")->required();

    auto* sim = app.add_subcommand("simulate", "Run seeded coded rounds and compare with the direct product");
    sim->add_option("input", input, "system JSON, - for stdin");
    sim->add_option("--strategy", strategy, "usctec or cyclic")->check(CLI::IsMember({"usctec", "cyclic"}));
    sim->add_option("--Q", blocks, "blocks per machine for the cyclic strategy");
    sim->add_option("--prime", prime, "field prime (< 2^32)");
    sim->add_option("--q", q, "rows of A (0: smallest exact)");
    sim->add_option("--v", v, "columns of A / rows of B");
    sim->add_option("--r", r, "columns of B (0: smallest exact)");
    sim->add_option("--seed", seed, "random seed");
    sim->add_option("--trials", trials, "rounds per realization");
    sim->add_option("--stragglers", stragglers, "per-group count, or block:group:machine list (1-based)");
    sim->add_option("--rounding", rounding, "row rounding: exact or nearest")->check(CLI::IsMember({"exact", "nearest"}));

    auto* cmp = app.add_subcommand("compare", "Cyclic vs placement over a sweep of Q, as CSV");
    cmp->add_option("input", input, "base system JSON");
    cmp->add_flag("--twelve", twelve, "built-in twelve-machine system, Q = 6..12");
    cmp->add_option("--Q", q_list, "values of Q (default L+S..N)");

    auto* fig = app.add_subcommand("export-fig", "Placement geometry CSV (default: the two-realization example)");
    fig->add_option("input", input, "system JSON");

    auto* repro = app.add_subcommand("repro", "Reproduce the worked examples and the comparison table");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve) {
            emit(io::to_json(solve_lp(io::parse_load_problem(read_json(input)))));
        } else if (*div) {
            const auto problem = io::parse_division_problem(read_json(input));
            json out = io::to_json(divide(problem), problem.load.size());
            out["feasible"] = true;
            emit(out);
        } else if (*assign) {
            const auto doc = read_json(input);
            const auto row = io::rationals_at(doc, "/mu");
            const std::size_t k = doc.value("k", std::size_t{0});
            if (k == 0) throw io::ConfigError("/k", "expected a positive integer");
            const auto asn = build_assignment(row, k);
            if (doc.contains("r")) {
                const auto cols = realize_columns(asn, doc.at("r").get<std::size_t>(), doc.value("L", std::size_t{1}));
                emit(io::to_json(asn, &cols));
            } else {
                emit(io::to_json(asn, nullptr));
            }
        } else if (*placecmd) {
            const auto result = place(load_model(io::parse_system(read_json(input))));
            if (!geometry_path.empty()) write_text(geometry_path, geometry_csv(export_geometry(result)));
            if (geometry_path != "-") emit(io::to_json(result));
        } else if (*cyc) {
            const auto report = evaluate_system(load_model(io::parse_system(read_json(input))), Strategy::cyclic(blocks));
            if (!report.feasible) throw InfeasibleError(report.error);
            emit(io::to_json(report));
        } else if (*sim) {
            const auto cfg = io::parse_system(read_json(input));
            const auto model = load_model(cfg);
            VerifyOptions opts;
            opts.prime = prime.value_or(cfg.prime);
            opts.rows = q.value_or(cfg.matrices.rows);
            opts.inner = v.value_or(cfg.matrices.inner);
            opts.columns = r.value_or(cfg.matrices.columns);
            opts.seed = seed.value_or(cfg.matrices.seed);
            opts.trials = trials;
            opts.rounding = rounding == "nearest" ? RowRounding::nearest : RowRounding::exact;
            if (!stragglers.empty()) {
                if (stragglers.find(':') == std::string::npos) opts.stragglers_per_group = std::stoul(stragglers);
                else opts.withheld = parse_withheld(stragglers);
            }
            if (cfg.matrices.csv_a) {
                const PrimeField field(opts.prime);
                opts.matrices.emplace(io::read_matrix_csv(*cfg.matrices.csv_a, field),
                                      io::read_matrix_csv(*cfg.matrices.csv_b, field));
                if (opts.matrices->first.cols() != opts.matrices->second.rows())
                    throw io::ConfigError("/matrices/csv", "A columns differ from B rows");
            }
            const auto report = verify_round(model, pick_strategy(strategy, blocks), opts);
            emit(io::to_json(report));
            if (report.skipped) std::cerr << report.notice << '\n';
            else if (!report.notice.empty()) throw InfeasibleError(report.notice);
            else if (!report.passed) return kFailed;
        } else if (*cmp) {
            std::optional<Model> base;
            if (twelve) {
                base = instances::twelve_machines(12);
                if (q_list.empty()) q_list = {6, 7, 8, 9, 10, 11, 12};
            } else {
                base = load_model(io::parse_system(read_json(input)));
            }
            if (q_list.empty())
                for (std::size_t x = base->params().replication(); x <= base->params().machines; ++x) q_list.push_back(x);
            std::cout << comparison_csv(compare(*base, q_list));
        } else if (*fig) {
            const Model model = fig->count("input") ? load_model(io::parse_system(read_json(input)))
                                                    : instances::constrained_pair();
            std::cout << geometry_csv(export_geometry(place(model)));
        } else if (*repro) {
            bool ok = true;
            for (const auto& c : {repro::single_round_example(), repro::constrained_pair_example(),
                                  repro::twelve_machine_table(), repro::coded_rounds(), repro::relaxed_storage()}) {
                repro::print(std::cout, c);
                ok = ok && c.passed();
            }
            return ok ? kOk : kFailed;
        }
    } catch (const io::ConfigError& e) {
        return report_error("config", e.what(), kInvalid, {{"pointer", e.pointer()}});
    } catch (const ValidationError& e) {
        return report_error("validation", e.what(), kInvalid, {{"diagnostics", e.diagnostics()}});
    } catch (const InfeasibleError& e) {
        return report_error("infeasible", e.what(), kInfeasible);
    } catch (const json::exception& e) {
        return report_error("config", e.what(), kInvalid);
    } catch (const Error& e) {
        return report_error("input", e.what(), kInvalid);
    } catch (const std::exception& e) {
        return report_error("input", e.what(), kInvalid);
    }
    return kOk;
}
