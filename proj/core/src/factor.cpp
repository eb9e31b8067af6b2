#include "amicable/factor.hpp"

#include <algorithm>
#include <string>

namespace amicable {

namespace {

u64 mulmod(u64 a, u64 b, u64 m) noexcept
{
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m) noexcept
{
    u64 result = 1;
    base %= m;
    while (exp) {
        if (exp & 1) {
            result = mulmod(result, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

}  // namespace

bool is_prime(u64 n) noexcept
{
    if (n < 2) {
        return false;
    }
    for (u64 p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n % p == 0) {
            return n == p;
        }
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These twelve bases are sufficient for all n < 3.3e24.
    for (u64 a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

Factorization Factorization::from_entries(std::vector<PrimePower> entries)
{
    u64 value = 1;
    u64 previous = 0;
    for (const auto& [p, k] : entries) {
        if (k == 0) {
            throw DomainError("factorization entry " + std::to_string(p) + " has exponent 0");
        }
        if (p <= previous) {
            throw DomainError("factorization primes must be strictly increasing");
        }
        if (!is_prime(p)) {
            throw DomainError("factorization entry " + std::to_string(p) + " is not prime");
        }
        const auto pk = checked_pow(p, k);
        if (!pk) {
            throw OverflowError("factorization value does not fit in 64 bits");
        }
        value = mul_checked(value, *pk, "factorization value");
        previous = p;
    }
    return Factorization(std::move(entries), value);
}

unsigned Factorization::exponent_of(u64 p) const noexcept
{
    const auto it = std::lower_bound(entries_.begin(), entries_.end(), p,
                                     [](const PrimePower& e, u64 q) { return e.prime < q; });
    return (it != entries_.end() && it->prime == p) ? it->exponent : 0;
}

u64 EvenDecomposition::value() const
{
    if (k0 >= 64) {
        throw OverflowError("even decomposition: 2^" + std::to_string(k0) + " does not fit in 64 bits");
    }
    return mul_checked(u64{1} << k0, odd_part.value(), "even decomposition value");
}

Factorizer::Factorizer(u64 sieve_threshold)
    : threshold_(std::max<u64>(sieve_threshold, 64))
{
    if (threshold_ > std::numeric_limits<std::uint32_t>::max()) {
        throw RangeError("factorizer sieve threshold " + std::to_string(threshold_) +
                         " exceeds 2^32 - 1");
    }
    // Linear sieve: each composite is written exactly once, by its smallest prime.
    spf_.assign(threshold_ + 1, 0);
    for (u64 i = 2; i <= threshold_; ++i) {
        if (spf_[i] == 0) {
            spf_[i] = static_cast<std::uint32_t>(i);
            primes_.push_back(static_cast<std::uint32_t>(i));
        }
        for (const std::uint32_t p : primes_) {
            const u64 composite = p * i;
            if (p > spf_[i] || composite > threshold_) {
                break;
            }
            spf_[composite] = p;
        }
    }
}

Factorization Factorizer::factorize(u64 n) const
{
    if (n == 0) {
        throw RangeError("factorize: 0 is not a positive integer");
    }
    require_in_bound(n, "factorize");

    const u64 original = n;
    std::vector<PrimePower> entries;
    auto take = [&](u64 p) {
        unsigned k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        entries.push_back({p, k});
    };

    if (n > threshold_) {
        for (const std::uint32_t p : primes_) {
            if (u64{p} * p > n) {
                break;
            }
            if (n % p == 0) {
                take(p);
            }
            if (n <= threshold_) {
                break;
            }
        }
        if (n > threshold_) {
            // Past the table: 6k +- 1 wheel from the first candidate above it.
            u64 f = (threshold_ + 1) / 6 * 6;
            for (; static_cast<u128>(f - 1) * (f - 1) <= n; f += 6) {
                for (const u64 c : {f - 1, f + 1}) {
                    if (c > threshold_ && n % c == 0) {
                        take(c);
                    }
                }
            }
            if (n > threshold_) {
                entries.push_back({n, 1});
                n = 1;
            }
        }
    }
    while (n > 1) {
        take(spf_[n]);
    }
    return Factorization(std::move(entries), original);
}

const Factorizer& default_factorizer()
{
    static const Factorizer instance;
    return instance;
}

Factorization factorize(u64 n)
{
    return default_factorizer().factorize(n);
}

u64 sigma(const Factorization& f)
{
    u64 result = 1;
    for (const auto& [p, k] : f.entries()) {
        const auto block = geometric_sum(p, k);
        if (!block) {
            throw OverflowError("sigma: divisor sum of " + std::to_string(p) + "^" +
                                std::to_string(k) + " does not fit in 64 bits");
        }
        result = mul_checked(result, *block, "sigma");
    }
    return result;
}

u64 aliquot_sum(const Factorization& f)
{
    return sigma(f) - f.value();
}

u64 aliquot_sum(u64 n)
{
    return aliquot_sum(factorize(n));
}

u64 proper_divisor_count(const Factorization& f)
{
    u64 count = 1;
    for (const auto& e : f.entries()) {
        count = mul_checked(count, u64{e.exponent} + 1, "proper_divisor_count");
    }
    return count - 1;
}

bool is_perfect_square(const Factorization& f) noexcept
{
    return std::all_of(f.entries().begin(), f.entries().end(),
                       [](const PrimePower& e) { return e.exponent % 2 == 0; });
}

EvenDecomposition split_even(u64 m)
{
    if (m == 0 || m % 2 != 0) {
        throw DomainError("split_even: " + std::to_string(m) + " is not a positive even number");
    }
    require_in_bound(m, "split_even");
    const auto k0 = static_cast<unsigned>(std::countr_zero(m));
    return {k0, factorize(m >> k0)};
}

}  // namespace amicable
