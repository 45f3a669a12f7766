#pragma once

#include "usctec/division.hpp"
#include "usctec/field.hpp"
#include "usctec/model.hpp"

#include <set>
#include <tuple>
#include <vector>

namespace usctec {

/// beta_1..beta_L interpolation nodes and one alpha per machine; all distinct.
struct EvaluationPoints {
    std::vector<std::uint64_t> beta;
    std::vector<std::uint64_t> alpha;

    /// beta_l = l, alpha_n = L + n (1-based). Requires p > N + L.
    static EvaluationPoints standard(const PrimeField& field, std::size_t recovery_threshold, std::size_t machines);
    /// Throws InputError on repeated or out-of-field points.
    void check(const PrimeField& field) const;
};

struct GroupPlan {
    IndexRange columns;                  // M_{g,f} within [0, r/L)
    std::vector<std::size_t> machines;   // P_{g,f}, ascending
};

struct BlockPlan {
    IndexRange rows;                     // rows of A forming A_g
    std::vector<GroupPlan> groups;
};

/// A scheme realized on concrete dimensions: q rows of A, r columns of B.
struct RoundPlan {
    std::size_t machines = 0;
    std::size_t recovery_threshold = 0;
    std::size_t replication = 0;
    std::size_t rows = 0;
    std::size_t columns = 0;
    std::vector<BlockPlan> blocks;

    std::size_t block_width() const { return columns / recovery_threshold; }
    /// D_{n,g}: columns of [r/L] machine n works on for block g (ascending).
    std::vector<std::size_t> machine_columns(std::size_t machine, std::size_t block) const;
    /// D_n: union over blocks (ascending).
    std::vector<std::size_t> machine_columns(std::size_t machine) const;
    /// |D_{n,g}| / (r/L)
    std::vector<RationalVec> realized_mu() const;
};

enum class RowRounding {
    exact,    // every gamma[g] * q must be an integer
    nearest,  // cumulative block boundaries rounded to the nearest row
};

/// Turns a scheme into row blocks and column groups. Throws InputError when
/// L does not divide r, or rows cannot be realized exactly under RowRounding::exact.
RoundPlan plan_round(const Scheme& scheme, const SystemParams& params, std::size_t rows, std::size_t columns,
                     RowRounding rounding = RowRounding::exact);

/// Withheld results. A machine can be silenced in one group or everywhere.
class StragglerMask {
public:
    void withhold(std::size_t block, std::size_t group, std::size_t machine) { per_group_.emplace(block, group, machine); }
    void withhold_everywhere(std::size_t machine) { machines_.insert(machine); }
    bool withheld(std::size_t block, std::size_t group, std::size_t machine) const {
        return machines_.contains(machine) || per_group_.contains({block, group, machine});
    }

private:
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> per_group_;
    std::set<std::size_t> machines_;
};

/// Coded payload sent to `machine`: sum_l (B_l)_{D_n} * prod_{k != l} (alpha_n - beta_k) / (beta_l - beta_k).
/// Columns follow plan.machine_columns(machine).
FieldMatrix encode(const PrimeField& field, const FieldMatrix& b, const RoundPlan& plan,
                   const EvaluationPoints& points, std::size_t machine);

/// H_{g,n} = A_g (B~_n)_{D_{n,g}}; columns follow plan.machine_columns(machine, block).
FieldMatrix worker_compute(const PrimeField& field, const FieldMatrix& a_block, const FieldMatrix& payload,
                           const RoundPlan& plan, std::size_t machine, std::size_t block);

struct GroupResponse {
    std::size_t machine;
    FieldMatrix value;  // (H_{g,n}) restricted to the group's columns
};

/// Interpolates H_{g,f} from exactly L responses and evaluates it at every
/// beta_l, giving A_g (B_l)_{M_{g,f}} for l = 1..L.
std::vector<FieldMatrix> decode_group(const PrimeField& field, std::span<const GroupResponse> responses,
                                      const EvaluationPoints& points);

/// Full round: encode, compute on every selected machine, decode each group
/// from the first L non-withheld machines (ascending index), and assemble A*B.
/// Throws NotDecodableError naming the first undecodable (block, group).
FieldMatrix run_round(const PrimeField& field, const FieldMatrix& a, const FieldMatrix& b, const RoundPlan& plan,
                      const EvaluationPoints& points, const StragglerMask& stragglers);

}  // namespace usctec
