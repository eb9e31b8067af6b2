#include "amicable/parity.hpp"

#include <string>

namespace amicable {

namespace {

/// p^from + p^(from+1) + ... + p^to; zero for an empty range.
u64 power_run(u64 p, unsigned from, unsigned to, const char* what)
{
    u64 sum = 0;
    for (unsigned i = from; i <= to; ++i) {
        const auto term = checked_pow(p, i);
        if (!term) {
            throw OverflowError(std::string(what) + ": power does not fit in 64 bits");
        }
        sum = add_checked(sum, *term, what);
    }
    return sum;
}

u64 prime_power(u64 p, unsigned k, const char* what)
{
    const auto v = checked_pow(p, k);
    if (!v) {
        throw OverflowError(std::string(what) + ": power does not fit in 64 bits");
    }
    return *v;
}

void require_odd_prime(u64 p, unsigned k, const char* what)
{
    if (p == 2 || !is_prime(p)) {
        throw DomainError(std::string(what) + ": " + std::to_string(p) + " is not an odd prime");
    }
    if (k == 0) {
        throw DomainError(std::string(what) + ": exponents must be >= 1");
    }
}

}  // namespace

DivisorCountTrace divisor_count_recurrence(std::span<const unsigned> exponents)
{
    if (exponents.empty()) {
        throw DomainError("divisor_count_recurrence: exponent list is empty");
    }
    DivisorCountTrace trace;
    trace.exponents.assign(exponents.begin(), exponents.end());
    trace.counts.reserve(exponents.size());
    for (const unsigned k : exponents) {
        if (k == 0) {
            throw DomainError("divisor_count_recurrence: exponents must be >= 1");
        }
        if (trace.counts.empty()) {
            trace.counts.push_back(k);
            continue;
        }
        const u64 prev = trace.counts.back();
        const u64 grown = mul_checked(k, add_checked(prev, 1, "divisor count"), "divisor count");
        trace.counts.push_back(add_checked(grown, prev, "divisor count"));
    }
    return trace;
}

u64 case2_sum(u64 p1, unsigned k1, u64 p2, unsigned k2)
{
    constexpr const char* what = "case2_sum";
    require_odd_prime(p1, k1, what);
    require_odd_prime(p2, k2, what);
    if (p1 == p2) {
        throw DomainError("case2_sum: primes must be distinct");
    }

    const u64 run1 = power_run(p1, 1, k1, what);
    const u64 run2 = power_run(p2, 1, k2, what);
    u64 sum = add_checked(run1, run2, what);
    if (k1 - 1 != 0) {
        const u64 term = mul_checked(prime_power(p2, k2, what), power_run(p1, 1, k1 - 1, what), what);
        sum = add_checked(sum, term, what);
    }
    if (k2 - 1 != 0) {
        const u64 term = mul_checked(run1, power_run(p2, 1, k2 - 1, what), what);
        sum = add_checked(sum, term, what);
    }
    return add_checked(sum, 1, what);
}

u64 case3_sum(u64 p1, unsigned k1, u64 p2, unsigned k2, u64 p3, unsigned k3)
{
    constexpr const char* what = "case3_sum";
    require_odd_prime(p3, k3, what);
    if (p3 == p1 || p3 == p2) {
        throw DomainError("case3_sum: primes must be distinct");
    }
    const u64 s2 = case2_sum(p1, k1, p2, k2);
    const u64 head = mul_checked(prime_power(p1, k1, what), prime_power(p2, k2, what), what);

    u64 sum = mul_checked(s2, power_run(p3, 0, k3, what), what);
    if (k3 - 1 == 0) {
        sum = add_checked(sum, head, what);
    } else {
        sum = add_checked(sum, mul_checked(head, power_run(p3, 0, k3 - 1, what), what), what);
    }
    return sum;
}

bool odd_aliquot_parity_even(const Factorization& f)
{
    if (f.value() % 2 == 0) {
        throw DomainError("odd_aliquot_parity_even: " + std::to_string(f.value()) + " is even");
    }
    return proper_divisor_count(f) % 2 == 0;
}

PowerOfTwoSquareResult pow2_square_check(unsigned k0)
{
    if (k0 < 1 || k0 > 62) {
        throw RangeError("pow2_square_check: k0 = " + std::to_string(k0) + " outside [1, 62]");
    }
    const u64 v = (u64{1} << k0) - 1;
    const u64 r = isqrt(v);
    PowerOfTwoSquareResult result{k0, r * r == v, std::nullopt};
    if (result.is_square) {
        result.witness_j = (r - 1) / 2;  // v is odd, so r is odd
    }
    return result;
}

u64 even_aliquot_closed_form(const EvenDecomposition& d)
{
    constexpr const char* what = "even_aliquot_closed_form";
    if (d.k0 < 1 || d.k0 > 62) {
        throw RangeError("even_aliquot_closed_form: k0 = " + std::to_string(d.k0) +
                         " outside [1, 62]");
    }
    if (d.odd_part.exponent_of(2) != 0) {
        throw DomainError("even_aliquot_closed_form: odd part contains the prime 2");
    }
    require_in_bound(d.value(), what);

    const u64 odd = d.odd_part.value();
    const u64 s_d = aliquot_sum(d.odd_part);
    const u64 pow2 = u64{1} << d.k0;
    const u64 left = mul_checked(2 * pow2 - 1, s_d, what);
    const u64 right = mul_checked(odd, pow2 - 1, what);
    return add_checked(left, right, what);
}

MixedParityVerdict mixed_parity_conditions(u64 m, u64 n)
{
    if (m == 0 || m % 2 != 0) {
        throw DomainError("mixed_parity_conditions: m = " + std::to_string(m) + " must be even");
    }
    if (n % 2 != 1) {
        throw DomainError("mixed_parity_conditions: n = " + std::to_string(n) + " must be odd");
    }
    const EvenDecomposition md = split_even(m);
    MixedParityVerdict v;
    v.n_is_perfect_square = is_perfect_square(factorize(n));
    v.m_has_odd_prime_factor = !md.odd_part.empty();
    v.m_odd_part_is_square = is_perfect_square(md.odd_part);
    v.admissible = v.n_is_perfect_square && v.m_has_odd_prime_factor && v.m_odd_part_is_square;
    return v;
}

}  // namespace amicable
