#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "amicable/errors.hpp"

namespace amicable {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

/// Largest integer accepted by the public arithmetic operations.
inline constexpr u64 kArithmeticBound = u64{1} << 62;

inline void require_in_bound(u64 n, const char* what)
{
    if (n > kArithmeticBound) {
        throw RangeError(std::string(what) + ": " + std::to_string(n) +
                         " exceeds arithmetic bound 2^62 = " + std::to_string(kArithmeticBound));
    }
}

/// Narrows a 128-bit intermediate, throwing instead of wrapping.
inline u64 narrow_checked(u128 v, const char* what)
{
    if (v > std::numeric_limits<u64>::max()) {
        throw OverflowError(std::string(what) + ": result does not fit in 64 bits");
    }
    return static_cast<u64>(v);
}

inline u64 mul_checked(u64 a, u64 b, const char* what)
{
    return narrow_checked(static_cast<u128>(a) * b, what);
}

inline u64 add_checked(u64 a, u64 b, const char* what)
{
    return narrow_checked(static_cast<u128>(a) + b, what);
}

/// floor(sqrt(n)), exact over the whole u64 range.
constexpr u64 isqrt(u64 n) noexcept
{
    if (n < 2) {
        return n;
    }
    // Newton iteration from an upper bound; monotone decreasing to the floor root.
    u64 x = u64{1} << ((64 - std::countl_zero(n) + 1) / 2);
    while (true) {
        const u64 y = (x + n / x) / 2;
        if (y >= x) {
            return x;
        }
        x = y;
    }
}

constexpr bool is_square_number(u64 n) noexcept
{
    const u64 r = isqrt(n);
    return r * r == n;
}

/// 1 + p + p^2 + ... + p^k, or nullopt if it exceeds 64 bits.
constexpr std::optional<u64> geometric_sum(u64 p, unsigned k) noexcept
{
    u128 term = 1;
    u128 sum = 1;
    constexpr u128 cap = std::numeric_limits<u64>::max();
    for (unsigned i = 0; i < k; ++i) {
        term *= p;
        sum += term;
        if (term > cap || sum > cap) {
            return std::nullopt;
        }
    }
    return static_cast<u64>(sum);
}

constexpr std::optional<u64> checked_pow(u64 base, unsigned exp) noexcept
{
    u128 r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        r *= base;
        if (r > std::numeric_limits<u64>::max()) {
            return std::nullopt;
        }
    }
    return static_cast<u64>(r);
}

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n) noexcept;

}  // namespace amicable
