#include "usctec/cyclic.hpp"

#include "usctec/errors.hpp"
#include "usctec/load_solver.hpp"

namespace usctec {

std::size_t cyclic_index(std::int64_t a, std::size_t machines) {
    const auto n = static_cast<std::int64_t>(machines);
    // floor division, also for a < 1
    std::int64_t q = (a - 1) / n;
    if ((a - 1) % n != 0 && (a - 1) < 0) --q;
    return static_cast<std::size_t>(a - q * n);
}

std::vector<std::size_t> cyclic_blocks(std::size_t machine, std::size_t blocks_per_machine, std::size_t machines) {
    std::vector<std::size_t> out;
    out.reserve(blocks_per_machine);
    for (std::size_t j = 0; j < blocks_per_machine; ++j)
        out.push_back(cyclic_index(static_cast<std::int64_t>(machine + j), machines));
    return out;
}

Scheme build_cyclic(const SystemParams& params, std::size_t blocks_per_machine, const SpeedRealization& speeds) {
    const std::size_t n_machines = params.machines;
    const std::size_t k = params.replication();
    if (blocks_per_machine > n_machines) throw InputError("Q exceeds N");
    if (speeds.speeds.size() != n_machines) throw InputError("speed vector length differs from N");

    std::vector<std::vector<bool>> stores(n_machines, std::vector<bool>(n_machines, false));
    for (std::size_t m = 1; m <= n_machines; ++m)
        for (auto b : cyclic_blocks(m, blocks_per_machine, n_machines)) stores[b - 1][m - 1] = true;

    Scheme out;
    const Rational block(1, static_cast<std::int64_t>(n_machines));
    for (std::size_t g = 0; g < n_machines; ++g) {
        SpeedRealization restricted;
        restricted.speeds.assign(n_machines, Rational(0));
        for (std::size_t n = 0; n < n_machines; ++n)
            if (stores[g][n]) restricted.speeds[n] = speeds.speeds[n];
        if (restricted.available_count() < k)
            throw InfeasibleError("block " + std::to_string(g + 1) + " has " +
                                  std::to_string(restricted.available_count()) +
                                  " available storers, L+S=" + std::to_string(k));
        auto lp = solve_lp({Rational(static_cast<std::int64_t>(k)), restricted, RationalVec(n_machines, Rational(1))});
        out.gamma.push_back(block);
        out.mu.push_back(std::move(lp.load));
    }
    return out;
}

Rational cyclic_storage_size(const SystemParams& params, std::size_t blocks_per_machine) {
    if (params.machines == 0) return Rational(0);
    const auto n = static_cast<std::int64_t>(params.machines);
    return Rational(n) * Rational(static_cast<std::int64_t>(blocks_per_machine), n);
}

}  // namespace usctec
