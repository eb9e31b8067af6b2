#pragma once

#include <optional>
#include <span>
#include <vector>

#include "amicable/factor.hpp"

namespace amicable {

/// Running proper-divisor counts as prime powers are multiplied in one at a
/// time: counts[0] = k_1 and counts[i] = k_i * (counts[i-1] + 1) + counts[i-1].
struct DivisorCountTrace {
    std::vector<unsigned> exponents;
    std::vector<u64> counts;

    u64 final_count() const { return counts.back(); }
};

struct PowerOfTwoSquareResult {
    unsigned k0 = 0;
    bool is_square = false;
    /// j with (2j + 1)^2 = 2^k0 - 1, present only when is_square.
    std::optional<u64> witness_j;
};

/// Necessary conditions for (m even, n odd) to be an amicable pair.
struct MixedParityVerdict {
    bool n_is_perfect_square = false;
    bool m_has_odd_prime_factor = false;
    bool m_odd_part_is_square = false;
    bool admissible = false;

    friend bool operator==(const MixedParityVerdict&, const MixedParityVerdict&) = default;
};

/// Throws DomainError for an empty list or a zero exponent, OverflowError if a
/// count leaves 64 bits.
DivisorCountTrace divisor_count_recurrence(std::span<const unsigned> exponents);

/// Aliquot sum of p1^k1 * p2^k2 assembled from its five groups of divisors:
///
///   (p1 + .. + p1^k1) + (p2 + .. + p2^k2)
///     + p2^k2 * (p1 + .. + p1^(k1-1))          dropped when k1 = 1
///     + (p1 + .. + p1^k1) * (p2 + .. + p2^(k2-1))  dropped when k2 = 1
///     + 1
///
/// Both primes must be odd and distinct, exponents >= 1 (DomainError otherwise).
u64 case2_sum(u64 p1, unsigned k1, u64 p2, unsigned k2);

/// Aliquot sum of p1^k1 * p2^k2 * p3^k3 extended from case2_sum:
///
///   S2 * (1 + p3 + .. + p3^k3) + p1^k1 * p2^k2 * (1 + p3 + .. + p3^(k3-1))
///
/// where the second factor collapses to the bare p1^k1 * p2^k2 when k3 = 1.
u64 case3_sum(u64 p1, unsigned k1, u64 p2, unsigned k2, u64 p3, unsigned k3);

/// Parity of the aliquot sum of an odd number, derived from the divisor count:
/// every proper divisor is odd, so the sum is even iff there is an even number
/// of them. Throws DomainError if `f` contains the prime 2.
bool odd_aliquot_parity_even(const Factorization& f);

/// Whether 2^k0 - 1 is a perfect square, for 1 <= k0 <= 62 (RangeError outside).
///
/// Writing 2^k0 = (2j + 1)^2 + 1 = 4j^2 + 4j + 2 and halving gives
/// 2^(k0-1) = 2(j^2 + j) + 1. The right side is odd, so the identity can only
/// hold when 2^(k0-1) = 1, i.e. k0 = 1 with j = 0. The check itself is done
/// with an integer square root; the argument above is what the tests confirm.
PowerOfTwoSquareResult pow2_square_check(unsigned k0);

/// Aliquot sum of 2^k0 * D via the closed form
///   (2^(k0+1) - 1) * s(D) + D * (2^k0 - 1),
/// with s(D) the aliquot sum of the odd part D (0 when D = 1).
u64 even_aliquot_closed_form(const EvenDecomposition& d);

/// Throws DomainError unless m is even and n is odd (both >= 1).
MixedParityVerdict mixed_parity_conditions(u64 m, u64 n);

}  // namespace amicable
