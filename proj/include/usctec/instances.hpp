#pragma once

#include "usctec/model.hpp"

#include <array>
#include <string_view>

namespace usctec::instances {

/// 6 machines, L=2, S=1, no storage limit, one realization s = (3,3,4,4,5,5).
Model single_round();

/// 6 machines, L=2, S=1, e = (3/5,3/5,4/5,4/5,1,1), two equiprobable realizations.
Model constrained_pair();

/// 12 machines, L=2, S=1, e = (Q/12, ..., Q/12), two equiprobable realizations.
Model twelve_machines(std::size_t blocks_per_machine);

/// Published comparison figures for `twelve_machines`, Q = 6..12.
struct ReferenceRow {
    std::size_t blocks_per_machine;
    std::string_view cyclic_storage;
    std::string_view cyclic_time;
    std::string_view placed_storage;
    std::string_view placed_time;
};

inline constexpr std::array<ReferenceRow, 7> kTwelveMachineReference{{
    {6, "6", "0.07235", "5.16591", "0.09164"},
    {7, "7", "0.06072", "5.23310", "0.04812"},
    {8, "8", "0.05371", "5.23480", "0.04766"},
    {9, "9", "0.05101", "5.23480", "0.04766"},
    {10, "10", "0.04927", "5.23480", "0.04766"},
    {11, "11", "0.04812", "5.23480", "0.04766"},
    {12, "12", "0.04766", "5.23480", "0.04766"},
}};

}  // namespace usctec::instances
