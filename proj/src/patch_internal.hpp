#pragma once

#include <optional>
#include <vector>

#include "mapsym/flag_system.hpp"

namespace mapsym::detail {

// Finds the face whose boundary walk (from class-0 flags) equals `outer` as a
// cyclic sequence; the reversed sequence is accepted when it matches exactly
// one face. Returns the class-0 flag at outer[0] (or at its reversed start).
std::optional<int> locate_outer(const FlagSystem& fs, const CellIndex& c,
                                const std::vector<int>& outer, bool* reversed);

}  // namespace mapsym::detail
