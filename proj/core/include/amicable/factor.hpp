#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "amicable/int_math.hpp"

namespace amicable {

struct PrimePower {
    u64 prime = 0;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Ordered prime-power decomposition; the empty list stands for 1.
///
/// Instances are only created through `factorize` or `from_entries`, both of
/// which guarantee strictly increasing primes, exponents >= 1 and a value
/// that fits in 64 bits.
class Factorization {
public:
    Factorization() = default;

    /// Validates and adopts `entries`. Throws DomainError on a broken invariant
    /// (non-prime, unsorted or repeated prime, zero exponent) and OverflowError
    /// if the product does not fit in 64 bits.
    static Factorization from_entries(std::vector<PrimePower> entries);

    std::span<const PrimePower> entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }
    std::size_t size() const noexcept { return entries_.size(); }

    u64 value() const noexcept { return value_; }

    /// Exponent of `p`, 0 when absent.
    unsigned exponent_of(u64 p) const noexcept;

    friend bool operator==(const Factorization&, const Factorization&) = default;

private:
    Factorization(std::vector<PrimePower> entries, u64 value)
        : entries_(std::move(entries)), value_(value)
    {
    }

    friend class Factorizer;

    std::vector<PrimePower> entries_;
    u64 value_ = 1;
};

/// An even number written as 2^k0 times its odd part.
struct EvenDecomposition {
    unsigned k0 = 0;
    Factorization odd_part;

    /// 2^k0 * value(odd_part); throws OverflowError if that exceeds 64 bits.
    u64 value() const;

    friend bool operator==(const EvenDecomposition&, const EvenDecomposition&) = default;
};

/// Factors integers up to kArithmeticBound.
///
/// Numbers at or below `sieve_threshold` are split with a smallest-prime-factor
/// table; larger ones use trial division by the sieved primes, continuing with
/// a 6k+-1 wheel past the table if the cofactor is still composite-sized.
/// The table is built in the constructor and read-only afterwards, so one
/// instance may be shared by any number of threads.
class Factorizer {
public:
    static constexpr u64 kDefaultSieveThreshold = 10'000'000;

    explicit Factorizer(u64 sieve_threshold = kDefaultSieveThreshold);

    Factorization factorize(u64 n) const;

    u64 sieve_threshold() const noexcept { return threshold_; }
    std::span<const std::uint32_t> primes() const noexcept { return primes_; }

private:
    u64 threshold_;
    std::vector<std::uint32_t> spf_;  // smallest prime factor, indexed by n
    std::vector<std::uint32_t> primes_;
};

/// Process-wide factorizer with the default threshold, built on first use.
const Factorizer& default_factorizer();

Factorization factorize(u64 n);

/// Sum of all divisors of value(f), the number itself included.
u64 sigma(const Factorization& f);

/// sigma(n) - n; 0 for n = 1.
u64 aliquot_sum(u64 n);
u64 aliquot_sum(const Factorization& f);

/// prod(k_i + 1) - 1.
u64 proper_divisor_count(const Factorization& f);

bool is_perfect_square(const Factorization& f) noexcept;

/// Throws DomainError for odd m (and for m = 0).
EvenDecomposition split_even(u64 m);

}  // namespace amicable
