#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ramsey {

/// Advances idx to the next k-combination of [0, pool_size) in
/// lexicographic order; false once the last combination was reached.
/// idx must hold a strictly increasing combination already.
bool next_combination(std::vector<std::uint32_t>& idx, std::size_t pool_size);

/// Binomial coefficient C(v, k) in floating point; good enough for
/// comparing enumeration sizes against caps.
double choose_approx(std::size_t v, std::uint32_t k);

} // namespace ramsey
