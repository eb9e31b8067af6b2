#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "amicable/factor.hpp"

namespace amicable::cli {

struct PropertyResult {
    std::string name;
    bool passed = true;
    u64 checked = 0;
    std::optional<std::string> counterexample;
};

/// Replaceable predicates, so tests can inject a broken implementation and
/// confirm the suite reports a counterexample.
struct VerifyHooks {
    std::function<bool(const Factorization&)> odd_parity_even = odd_aliquot_parity_even_default;
    std::function<u64(const EvenDecomposition&)> even_closed_form = even_closed_form_default;

    static bool odd_aliquot_parity_even_default(const Factorization& f);
    static u64 even_closed_form_default(const EvenDecomposition& d);
};

inline constexpr u64 kVerifyMaxLimit = 10'000'000;
/// Oracle-backed properties stop here regardless of the requested limit.
inline constexpr u64 kVerifyOracleLimit = 100'000;

/// Runs every parity-theorem property over [1, limit]. Stops each property at
/// its first counterexample.
std::vector<PropertyResult> run_verify_suite(u64 limit, const VerifyHooks& hooks = {});

}  // namespace amicable::cli
