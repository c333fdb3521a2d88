#pragma once

#include <cstddef>
#include <string_view>

#include "tamlab/limits.hpp"
#include "tamlab/perm.hpp"

namespace tamlab {

PermGroup trivial_group();
/// Cyclic group of order n acting on n points.
PermGroup cyclic_group(std::size_t n, const Limits& limits = {});
/// Dihedral group of order 2n. Acts on n points for n >= 3; D1 is C2 and D2 is V4.
PermGroup dihedral_group(std::size_t n, const Limits& limits = {});
PermGroup symmetric_group(std::size_t n, const Limits& limits = {});
PermGroup alternating_group(std::size_t n, const Limits& limits = {});
/// Quaternion group in its regular representation on 8 points.
PermGroup quaternion_group();
/// ⟨(1 2)(3 4), (1 3)(2 4)⟩.
PermGroup klein_four_group();

/// Resolves "C<n>", "D<n>", "S<n>", "A<n>", "Q8", "V4" or "perm:<degree>:<cycles;cycles;...>".
/// Throws ParseError on anything else and OrderCapExceeded past limits.max_order.
PermGroup parse_group_spec(std::string_view spec, const Limits& limits = {});

} // namespace tamlab
