#pragma once

#include "usctec/model.hpp"

#include <cstdint>
#include <vector>

namespace usctec {

/// 1-based wraparound: a - floor((a-1)/N) * N, mapping any integer into 1..N.
std::size_t cyclic_index(std::int64_t a, std::size_t machines);

/// Blocks (1-based) stored by machine `machine` (1-based): machine, ..., machine+Q-1 wrapped.
std::vector<std::size_t> cyclic_blocks(std::size_t machine, std::size_t blocks_per_machine, std::size_t machines);

/// Cyclic baseline: N equal blocks, machine n stores Q consecutive blocks,
/// and each block's mu row is the water-filling of L+S over the machines storing it.
/// Throws InfeasibleError if a block has fewer than L+S available storers.
Scheme build_cyclic(const SystemParams& params, std::size_t blocks_per_machine, const SpeedRealization& speeds);

/// N * (Q / N) = Q.
Rational cyclic_storage_size(const SystemParams& params, std::size_t blocks_per_machine);

}  // namespace usctec
