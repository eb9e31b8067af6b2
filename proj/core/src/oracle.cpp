#include "amicable/oracle.hpp"

#include <stdexcept>
#include <string>

#include "amicable/errors.hpp"

namespace amicable::oracle {

namespace {

void require_oracle_range(std::uint64_t n, const char* what)
{
    if (n < 1 || n > kOracleBound) {
        throw RangeError(std::string(what) + ": " + std::to_string(n) + " outside [1, 1000000000]");
    }
}

template <typename Visit>
void for_each_proper_divisor(std::uint64_t n, Visit&& visit)
{
    if (n == 1) {
        return;
    }
    visit(1);
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) {
            continue;
        }
        visit(d);
        if (const auto co = n / d; co != d) {
            visit(co);
        }
    }
}

}  // namespace

std::uint64_t brute_aliquot(std::uint64_t n)
{
    require_oracle_range(n, "brute_aliquot");
    std::uint64_t sum = 0;
    for_each_proper_divisor(n, [&](std::uint64_t d) { sum += d; });
    return sum;
}

std::uint64_t brute_divisor_count(std::uint64_t n)
{
    require_oracle_range(n, "brute_divisor_count");
    std::uint64_t count = 0;
    for_each_proper_divisor(n, [&](std::uint64_t) { ++count; });
    return count;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> brute_amicable_pairs(std::uint64_t limit)
{
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    if (limit < 2) {
        return pairs;
    }
    require_oracle_range(limit, "brute_amicable_pairs");
    std::vector<std::uint64_t> s(limit + 1, 0);
    for (std::uint64_t n = 1; n <= limit; ++n) {
        s[n] = brute_aliquot(n);
    }
    for (std::uint64_t a = 2; a <= limit; ++a) {
        const std::uint64_t b = s[a];
        if (a < b && b <= limit && s[b] == a) {
            pairs.emplace_back(a, b);
        }
    }
    return pairs;
}

}  // namespace amicable::oracle
