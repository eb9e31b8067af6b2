#pragma once

#include <functional>
#include <span>

#include "amicable/int_math.hpp"

namespace amicable {

/// Streams aliquot sums s(n) for n in [1, limit] in ascending segments.
///
/// Each segment starts from sigma = 1 and divides every sieving prime
/// p <= sqrt(limit) out of its multiples, multiplying in 1 + p + .. + p^k;
/// whatever cofactor remains is a single prime q contributing (1 + q).
/// `visit(first, sums)` receives s(first), s(first + 1), ...
/// Memory is O(segment_size + sqrt(limit)).
void for_each_aliquot_segment(u64 limit,
                              const std::function<void(u64 first, std::span<const u64> sums)>& visit,
                              u64 segment_size = u64{1} << 18);

}  // namespace amicable
