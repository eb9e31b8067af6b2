#include "amicable/aliquot_sieve.hpp"

#include <algorithm>
#include <vector>

namespace amicable {

namespace {

std::vector<u64> small_primes(u64 bound)
{
    std::vector<bool> composite(bound + 1, false);
    std::vector<u64> primes;
    for (u64 i = 2; i <= bound; ++i) {
        if (composite[i]) {
            continue;
        }
        primes.push_back(i);
        for (u64 j = i * i; j <= bound; j += i) {
            composite[j] = true;
        }
    }
    return primes;
}

}  // namespace

void for_each_aliquot_segment(u64 limit,
                              const std::function<void(u64, std::span<const u64>)>& visit,
                              u64 segment_size)
{
    if (limit == 0) {
        return;
    }
    require_in_bound(limit, "for_each_aliquot_segment");
    segment_size = std::max<u64>(segment_size, 1);

    const std::vector<u64> primes = small_primes(isqrt(limit));
    std::vector<u64> rest(segment_size);
    std::vector<u64> sig(segment_size);

    for (u64 lo = 1; lo <= limit; lo += segment_size) {
        const u64 hi = std::min(limit, lo + segment_size - 1);
        const u64 len = hi - lo + 1;
        for (u64 i = 0; i < len; ++i) {
            rest[i] = lo + i;
            sig[i] = 1;
        }
        for (const u64 p : primes) {
            if (p * p > hi) {
                break;
            }
            for (u64 n = (lo + p - 1) / p * p; n <= hi; n += p) {
                const u64 i = n - lo;
                u64 term = 1;
                u64 block = 1;
                while (rest[i] % p == 0) {
                    rest[i] /= p;
                    term *= p;
                    block += term;
                }
                sig[i] = mul_checked(sig[i], block, "aliquot sieve");
            }
        }
        for (u64 i = 0; i < len; ++i) {
            if (rest[i] > 1) {
                sig[i] = mul_checked(sig[i], rest[i] + 1, "aliquot sieve");
            }
            sig[i] -= lo + i;
        }
        visit(lo, std::span<const u64>(sig.data(), len));
    }
}

}  // namespace amicable
