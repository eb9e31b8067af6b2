#pragma once

// Test-only trial-division factorizer; shares nothing with the library's sieve.

#include <cstdint>
#include <utility>
#include <vector>

namespace amicable::test_support {

inline std::vector<std::pair<std::uint64_t, unsigned>> trial_factor(std::uint64_t n)
{
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        unsigned k = 0;
        while (n % d == 0) {
            n /= d;
            ++k;
        }
        if (k) {
            out.emplace_back(d, k);
        }
    }
    if (n > 1) {
        out.emplace_back(n, 1);
    }
    return out;
}

}  // namespace amicable::test_support

namespace amicable::test_support {

/// Divisor-pair trial division without the library oracle's 1e9 cap.
inline std::uint64_t unbounded_brute_aliquot(std::uint64_t n)
{
    if (n < 2) {
        return 0;
    }
    std::uint64_t sum = 1;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            sum += d;
            if (n / d != d) {
                sum += n / d;
            }
        }
    }
    return sum;
}

}  // namespace amicable::test_support
