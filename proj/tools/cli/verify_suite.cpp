#include "verify_suite.hpp"

#include <algorithm>
#include <bit>

#include "amicable/oracle.hpp"
#include "amicable/parity.hpp"
#include "amicable/search.hpp"

namespace amicable::cli {

namespace {

/// Accumulates one property; `fail` keeps only the first counterexample.
class Property {
public:
    explicit Property(std::string name) { result_.name = std::move(name); }

    bool failed() const noexcept { return !result_.passed; }
    void count() noexcept { ++result_.checked; }

    void fail(std::string counterexample)
    {
        if (result_.passed) {
            result_.passed = false;
            result_.counterexample = std::move(counterexample);
        }
    }

    PropertyResult done() && { return std::move(result_); }

private:
    PropertyResult result_;
};

std::string str(u64 v)
{
    return std::to_string(v);
}

PropertyResult odd_side(u64 limit, const VerifyHooks& hooks)
{
    Property p("parity_theorem_odd_side");
    for (u64 n = 1; n <= limit && !p.failed(); n += 2) {
        p.count();
        const auto f = factorize(n);
        const bool square = is_square_number(n);
        const bool even_by_count = hooks.odd_parity_even(f);
        const bool even_by_sum = aliquot_sum(f) % 2 == 0;
        if (even_by_count != square || even_by_sum != square) {
            p.fail("n=" + str(n) + " square=" + (square ? "true" : "false") + " aliquot_even(count)=" +
                   (even_by_count ? "true" : "false") + " aliquot_even(sum)=" + (even_by_sum ? "true" : "false"));
        }
    }
    return std::move(p).done();
}

PropertyResult even_side(u64 limit)
{
    Property p("parity_theorem_even_side");
    for (u64 m = 2; m <= limit && !p.failed(); m += 2) {
        p.count();
        const bool odd_part_square = is_square_number(m >> std::countr_zero(m));
        const bool aliquot_odd = aliquot_sum(m) % 2 == 1;
        if (aliquot_odd != odd_part_square) {
            p.fail("m=" + str(m) + " odd_part_square=" + (odd_part_square ? "true" : "false") +
                   " aliquot_odd=" + (aliquot_odd ? "true" : "false"));
        }
    }
    return std::move(p).done();
}

PropertyResult closed_form(u64 limit, const VerifyHooks& hooks)
{
    Property p("even_aliquot_closed_form");
    for (u64 m = 2; m <= limit && !p.failed(); m += 2) {
        p.count();
        const u64 closed = hooks.even_closed_form(split_even(m));
        const u64 direct = aliquot_sum(m);
        if (closed != direct) {
            p.fail("m=" + str(m) + " closed_form=" + str(closed) + " aliquot_sum=" + str(direct));
        }
    }
    return std::move(p).done();
}

PropertyResult recurrence_identity()
{
    Property p("divisor_count_recurrence_product");
    std::vector<unsigned> ks;
    auto rec = [&](auto&& self, std::size_t len) -> void {
        if (p.failed()) {
            return;
        }
        if (ks.size() == len) {
            p.count();
            u64 product = 1;
            for (const unsigned k : ks) {
                product *= k + 1;
            }
            const u64 got = divisor_count_recurrence(ks).final_count();
            if (got != product - 1) {
                std::string list;
                for (const unsigned k : ks) {
                    list += (list.empty() ? "" : ",") + std::to_string(k);
                }
                p.fail("exponents=[" + list + "] recurrence=" + str(got) + " product-1=" + str(product - 1));
            }
            return;
        }
        for (unsigned k = 1; k <= 4; ++k) {
            ks.push_back(k);
            self(self, len);
            ks.pop_back();
        }
    };
    for (std::size_t len = 1; len <= 5; ++len) {
        rec(rec, len);
    }
    return std::move(p).done();
}

PropertyResult recurrence_vs_oracle(u64 limit)
{
    Property p("divisor_count_vs_oracle");
    for (u64 n = 1; n <= std::min(limit, kVerifyOracleLimit) && !p.failed(); ++n) {
        p.count();
        const auto f = factorize(n);
        std::vector<unsigned> ks;
        for (const auto& e : f.entries()) {
            ks.push_back(e.exponent);
        }
        // n = 1 has no exponents; the recurrence's base n_0 = 0 applies.
        const u64 got = ks.empty() ? 0 : divisor_count_recurrence(ks).final_count();
        const u64 want = oracle::brute_divisor_count(n);
        if (got != want) {
            p.fail("n=" + str(n) + " recurrence=" + str(got) + " brute=" + str(want));
        }
    }
    return std::move(p).done();
}

PropertyResult aliquot_vs_oracle(u64 limit)
{
    Property p("aliquot_sum_vs_oracle");
    for (u64 n = 1; n <= std::min(limit, kVerifyOracleLimit) && !p.failed(); ++n) {
        p.count();
        const u64 got = aliquot_sum(n);
        const u64 want = oracle::brute_aliquot(n);
        if (got != want) {
            p.fail("n=" + str(n) + " aliquot_sum=" + str(got) + " brute=" + str(want));
        }
    }
    return std::move(p).done();
}

PropertyResult case_formulas()
{
    Property p("case_sum_formulas");
    const u64 primes[] = {3, 5, 7, 11, 13};
    auto pw = [](u64 b, unsigned e) {
        u64 r = 1;
        while (e--) {
            r *= b;
        }
        return r;
    };
    auto reference = [](u64 n) { return n <= oracle::kOracleBound ? oracle::brute_aliquot(n) : aliquot_sum(n); };
    for (const u64 p1 : primes) {
        for (const u64 p2 : primes) {
            for (unsigned k1 = 1; k1 <= 3; ++k1) {
                for (unsigned k2 = 1; k2 <= 3; ++k2) {
                    if (p1 == p2 || p.failed()) {
                        continue;
                    }
                    const u64 n2 = pw(p1, k1) * pw(p2, k2);
                    p.count();
                    if (case2_sum(p1, k1, p2, k2) != reference(n2)) {
                        p.fail("case2 n=" + str(n2));
                    }
                    for (const u64 p3 : primes) {
                        for (unsigned k3 = 1; k3 <= 3; ++k3) {
                            if (p3 == p1 || p3 == p2 || p.failed()) {
                                continue;
                            }
                            const u64 n3 = n2 * pw(p3, k3);
                            p.count();
                            if (case3_sum(p1, k1, p2, k2, p3, k3) != reference(n3)) {
                                p.fail("case3 n=" + str(n3));
                            }
                        }
                    }
                }
            }
        }
    }
    return std::move(p).done();
}

PropertyResult pow2_square()
{
    Property p("power_of_two_minus_one_square");
    for (unsigned k = 1; k <= 62 && !p.failed(); ++k) {
        p.count();
        const auto r = pow2_square_check(k);
        if (r.is_square != (k == 1)) {
            p.fail("k0=" + std::to_string(k) + " is_square=" + (r.is_square ? "true" : "false"));
        }
    }
    p.count();
    if (evaluate_pair(2, 1).is_amicable) {
        p.fail("(2, 1) reported as amicable");
    }
    return std::move(p).done();
}

PropertyResult pruning_soundness(u64 limit)
{
    Property p("pruning_soundness");
    for (u64 m = 2; m <= limit && !p.failed(); m += 2) {
        p.count();
        const u64 n = aliquot_sum(m);
        if (n % 2 == 0 || n > limit || n < 2) {
            continue;
        }
        if (aliquot_sum(n) == m && !mixed_parity_conditions(m, n).admissible) {
            p.fail("m=" + str(m) + " n=" + str(n) + " is amicable but fails the necessary conditions");
        }
    }
    return std::move(p).done();
}

}  // namespace

bool VerifyHooks::odd_aliquot_parity_even_default(const Factorization& f)
{
    return odd_aliquot_parity_even(f);
}

u64 VerifyHooks::even_closed_form_default(const EvenDecomposition& d)
{
    return even_aliquot_closed_form(d);
}

std::vector<PropertyResult> run_verify_suite(u64 limit, const VerifyHooks& hooks)
{
    return {
        odd_side(limit, hooks),
        even_side(limit),
        closed_form(limit, hooks),
        recurrence_identity(),
        recurrence_vs_oracle(limit),
        aliquot_vs_oracle(limit),
        case_formulas(),
        pow2_square(),
        pruning_soundness(limit),
    };
}

}  // namespace amicable::cli
