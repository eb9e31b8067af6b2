#pragma once

#include <cstdint>
#include <utility>
#include <vector>

// Brute-force reference implementations. Nothing here may depend on the
// factorizer or the sieves; agreement between the two is only meaningful if
// they share no code.

namespace amicable::oracle {

inline constexpr std::uint64_t kOracleBound = 1'000'000'000;

/// Sum of d < n with d | n, by divisor-pair trial division up to sqrt(n).
/// RangeError outside [1, 1e9].
std::uint64_t brute_aliquot(std::uint64_t n);

/// Number of d < n with d | n. RangeError outside [1, 1e9].
std::uint64_t brute_divisor_count(std::uint64_t n);

/// Every amicable pair (a < b) with b <= limit, found by computing
/// brute_aliquot for each n. Quadratic-ish; meant for limits up to ~1e5.
std::vector<std::pair<std::uint64_t, std::uint64_t>> brute_amicable_pairs(std::uint64_t limit);

}  // namespace amicable::oracle
