#pragma once

// Cross-module self-check driven by `cqs verify`.

#include <cstdint>
#include <string>
#include <vector>

namespace cqs {

struct SuiteResult {
    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t failed = 0;
    std::string first_failure;  // empty when failed == 0
    double seconds = 0.0;
};

struct VerifySummary {
    int max_n = 0;
    std::vector<SuiteResult> suites;

    std::size_t passed_suites() const;
    std::size_t failed_suites() const;
    bool ok() const { return failed_suites() == 0; }
};

inline constexpr int kMaxVerifyN = 60;

// Runs every suite up to max_n. Suites run concurrently; results come back in
// a fixed order. Throws std::invalid_argument for max_n outside [0, 60].
//
//   exponent_oracle        recursion == brute-force Hilbert basis, 2 <= n <= max_n
//   zero_chain_equivalence continued fraction vs. blow-down, lengths 2..min(7, max_n)
//   catalan                zero-chain counts, s = 2..min(7, max_n), bound s and s + 2
//   lens_uniqueness        HJ chain recognized as L(n,q); among all >= 2 chains
//                          (length, entries <= 8) each L(n,q), n <= max_n, occurs once
//   negation_duality       negated HJ chain recognized as L(n, n-q)
//   report_consistency     Milnor reports against the plumbing engine
VerifySummary verify(int max_n);

}  // namespace cqs
