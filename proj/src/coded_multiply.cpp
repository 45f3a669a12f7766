#include "usctec/coded_multiply.hpp"

#include "usctec/errors.hpp"

#include <algorithm>
#include <map>

namespace usctec {

EvaluationPoints EvaluationPoints::standard(const PrimeField& field, std::size_t recovery_threshold,
                                            std::size_t machines) {
    if (field.prime() <= machines + recovery_threshold)
        throw InputError("prime " + std::to_string(field.prime()) + " must exceed N + L = " +
                         std::to_string(machines + recovery_threshold));
    EvaluationPoints out;
    for (std::size_t l = 1; l <= recovery_threshold; ++l) out.beta.push_back(l);
    for (std::size_t n = 1; n <= machines; ++n) out.alpha.push_back(recovery_threshold + n);
    return out;
}

void EvaluationPoints::check(const PrimeField& field) const {
    std::set<std::uint64_t> seen;
    for (auto v : beta) {
        if (v >= field.prime()) throw InputError("evaluation point outside the field");
        if (!seen.insert(v).second) throw InputError("repeated beta point " + std::to_string(v));
    }
    for (auto v : alpha) {
        if (v >= field.prime()) throw InputError("evaluation point outside the field");
        if (!seen.insert(v).second)
            throw InputError("alpha point " + std::to_string(v) + " collides with another evaluation point");
    }
}

std::vector<std::size_t> RoundPlan::machine_columns(std::size_t machine, std::size_t block) const {
    std::vector<std::size_t> out;
    for (const auto& group : blocks[block].groups) {
        if (!std::binary_search(group.machines.begin(), group.machines.end(), machine)) continue;
        for (std::size_t j = group.columns.begin; j < group.columns.end; ++j) out.push_back(j);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> RoundPlan::machine_columns(std::size_t machine) const {
    std::set<std::size_t> all;
    for (std::size_t g = 0; g < blocks.size(); ++g)
        for (auto j : machine_columns(machine, g)) all.insert(j);
    return {all.begin(), all.end()};
}

std::vector<RationalVec> RoundPlan::realized_mu() const {
    std::vector<RationalVec> out;
    const auto width = static_cast<std::int64_t>(block_width());
    for (std::size_t g = 0; g < blocks.size(); ++g) {
        RationalVec row(machines);
        for (std::size_t n = 0; n < machines; ++n)
            row[n] = Rational(static_cast<std::int64_t>(machine_columns(n, g).size()), width);
        out.push_back(std::move(row));
    }
    return out;
}

RoundPlan plan_round(const Scheme& scheme, const SystemParams& params, std::size_t rows, std::size_t columns,
                     RowRounding rounding) {
    const std::size_t L = params.recovery_threshold;
    if (L == 0 || columns % L != 0)
        throw InputError("r=" + std::to_string(columns) + " is not divisible by L=" + std::to_string(L));
    if (sum(scheme.gamma) != Rational(1)) throw InputError("scheme gamma must sum to 1");

    RoundPlan plan;
    plan.machines = params.machines;
    plan.recovery_threshold = L;
    plan.replication = params.replication();
    plan.rows = rows;
    plan.columns = columns;

    if (rounding == RowRounding::exact) {
        for (const auto& g : scheme.gamma)
            if ((g * Rational(static_cast<std::int64_t>(rows))).denominator() != 1)
                throw InputError("q=" + std::to_string(rows) + " does not realize block fraction " + g.str() +
                                 " exactly");
    }
    const auto row_ranges = realize_ranges(scheme.gamma, rows);
    for (std::size_t g = 0; g < scheme.blocks(); ++g) {
        BlockPlan block;
        block.rows = row_ranges[g];
        const auto assignment = build_assignment(scheme.mu[g], plan.replication);
        const auto col_ranges = realize_columns(assignment, columns, L);
        for (std::size_t f = 0; f < assignment.groups.size(); ++f)
            block.groups.push_back({col_ranges[f], assignment.groups[f].machines});
        plan.blocks.push_back(std::move(block));
    }
    return plan;
}

namespace {

std::vector<std::uint64_t> block_column_indices(std::size_t l, std::size_t width, std::span<const std::size_t> local) {
    std::vector<std::uint64_t> out;
    out.reserve(local.size());
    for (auto j : local) out.push_back(l * width + j);
    return out;
}

}  // namespace

FieldMatrix encode(const PrimeField& field, const FieldMatrix& b, const RoundPlan& plan,
                   const EvaluationPoints& points, std::size_t machine) {
    const std::size_t L = plan.recovery_threshold;
    const std::size_t width = plan.block_width();
    if (b.cols() != plan.columns) throw InputError("B has " + std::to_string(b.cols()) + " columns, plan expects r=" +
                                                   std::to_string(plan.columns));
    const auto local = plan.machine_columns(machine);
    FieldMatrix out(b.rows(), local.size());
    for (std::size_t l = 0; l < L; ++l) {
        const std::uint64_t coeff = lagrange_basis(field, points.beta, l, points.alpha[machine]);
        const auto global = block_column_indices(l, width, local);
        std::vector<std::size_t> idx(global.begin(), global.end());
        axpy(field, out, coeff, b.columns(idx));
    }
    return out;
}

FieldMatrix worker_compute(const PrimeField& field, const FieldMatrix& a_block, const FieldMatrix& payload,
                           const RoundPlan& plan, std::size_t machine, std::size_t block) {
    const auto all = plan.machine_columns(machine);
    const auto mine = plan.machine_columns(machine, block);
    if (payload.cols() != all.size()) throw InputError("payload does not match the machine's column set");
    std::vector<std::size_t> positions;
    positions.reserve(mine.size());
    for (auto j : mine) {
        auto it = std::lower_bound(all.begin(), all.end(), j);
        if (it == all.end() || *it != j) throw InputError("block column set is not contained in the payload");
        positions.push_back(static_cast<std::size_t>(it - all.begin()));
    }
    return multiply(field, a_block, payload.columns(positions));
}

std::vector<FieldMatrix> decode_group(const PrimeField& field, std::span<const GroupResponse> responses,
                                      const EvaluationPoints& points) {
    const std::size_t L = points.beta.size();
    if (responses.size() != L)
        throw InputError("decoding needs exactly L=" + std::to_string(L) + " responses, got " +
                         std::to_string(responses.size()));
    std::vector<std::uint64_t> nodes;
    for (const auto& r : responses) nodes.push_back(points.alpha[r.machine]);

    std::vector<FieldMatrix> out;
    for (std::size_t l = 0; l < L; ++l) {
        FieldMatrix acc(responses.front().value.rows(), responses.front().value.cols());
        for (std::size_t i = 0; i < responses.size(); ++i)
            axpy(field, acc, lagrange_basis(field, nodes, i, points.beta[l]), responses[i].value);
        out.push_back(std::move(acc));
    }
    return out;
}

FieldMatrix run_round(const PrimeField& field, const FieldMatrix& a, const FieldMatrix& b, const RoundPlan& plan,
                      const EvaluationPoints& points, const StragglerMask& stragglers) {
    points.check(field);
    if (a.rows() != plan.rows) throw InputError("A row count differs from plan q");
    if (a.cols() != b.rows()) throw InputError("A and B inner dimensions differ");
    const std::size_t L = plan.recovery_threshold;
    const std::size_t width = plan.block_width();

    std::map<std::size_t, FieldMatrix> payloads;
    for (std::size_t n = 0; n < plan.machines; ++n)
        if (!plan.machine_columns(n).empty()) payloads.emplace(n, encode(field, b, plan, points, n));

    FieldMatrix product(a.rows(), b.cols());
    for (std::size_t g = 0; g < plan.blocks.size(); ++g) {
        const auto& block = plan.blocks[g];
        const FieldMatrix a_block = a.row_range(block.rows.begin, block.rows.end);
        std::map<std::size_t, FieldMatrix> results;
        std::map<std::size_t, std::vector<std::size_t>> result_columns;

        for (std::size_t f = 0; f < block.groups.size(); ++f) {
            const auto& group = block.groups[f];
            if (group.columns.size() == 0) continue;
            std::vector<GroupResponse> responses;
            for (auto n : group.machines) {
                if (responses.size() == L) break;
                if (stragglers.withheld(g, f, n)) continue;
                if (!results.contains(n)) {
                    results.emplace(n, worker_compute(field, a_block, payloads.at(n), plan, n, g));
                    result_columns.emplace(n, plan.machine_columns(n, g));
                }
                const auto& cols = result_columns.at(n);
                std::vector<std::size_t> positions;
                for (std::size_t j = group.columns.begin; j < group.columns.end; ++j)
                    positions.push_back(static_cast<std::size_t>(std::lower_bound(cols.begin(), cols.end(), j) - cols.begin()));
                responses.push_back({n, results.at(n).columns(positions)});
            }
            if (responses.size() < L) throw NotDecodableError(g, f, responses.size(), L);

            const auto decoded = decode_group(field, responses, points);
            for (std::size_t l = 0; l < L; ++l)
                for (std::size_t i = 0; i < decoded[l].rows(); ++i)
                    for (std::size_t j = 0; j < decoded[l].cols(); ++j)
                        product.at(block.rows.begin + i, l * width + group.columns.begin + j) = decoded[l].at(i, j);
        }
    }
    return product;
}

}  // namespace usctec
