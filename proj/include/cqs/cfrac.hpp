#pragma once

// Hirzebruch-Jung ("minus sign") continued fractions
//
//     [k_1, ..., k_s] = k_1 - 1/(k_2 - 1/(... - 1/k_s))
//
// evaluated exactly over arbitrary-precision rationals.

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "cqs/fraction.hpp"

namespace cqs {

// Nonempty integer sequence with minus-sign continued-fraction semantics.
// Entry signs are unconstrained here; consumers check positivity.
class CFChain {
public:
    explicit CFChain(std::vector<BigInt> entries);
    CFChain(std::initializer_list<long long> entries);

    static CFChain from_ints(const std::vector<long long>& entries);

    const std::vector<BigInt>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    const BigInt& operator[](std::size_t i) const { return entries_[i]; }

    CFChain reversed() const;
    bool all_positive() const;

    // Entries as machine integers; throws std::overflow_error if one does not fit.
    std::vector<long long> to_ints() const;

    std::string to_string() const;

    friend bool operator==(const CFChain&, const CFChain&) = default;
    // Lexicographic.
    friend bool operator<(const CFChain& a, const CFChain& b) { return a.entries_ < b.entries_; }

private:
    std::vector<BigInt> entries_;
};

std::ostream& operator<<(std::ostream& os, const CFChain& c);

struct DivisionByZero {
    friend bool operator==(DivisionByZero, DivisionByZero) { return true; }
};

// Result of evaluating a chain: an exact value, or the marker that some
// intermediate step divided by zero.
class CFValue {
public:
    CFValue(Fraction value) : v_(std::move(value)) {}  // NOLINT
    CFValue(DivisionByZero marker) : v_(marker) {}     // NOLINT

    bool divides_by_zero() const noexcept { return std::holds_alternative<DivisionByZero>(v_); }
    bool has_value() const noexcept { return !divides_by_zero(); }
    // Throws std::bad_variant_access on DIVISION-BY-ZERO.
    const Fraction& value() const { return std::get<Fraction>(v_); }

    friend bool operator==(const CFValue&, const CFValue&) = default;

private:
    std::variant<Fraction, DivisionByZero> v_;
};

std::ostream& operator<<(std::ostream& os, const CFValue& v);

// Unique expansion with every entry >= 2 (entry = ceiling of the running value).
// 1/1 expands to [1]. Throws std::domain_error for x < 1.
CFChain hj_expand(const Fraction& x);

// Right-to-left evaluation. The final value may be zero; a zero before the
// final step yields DivisionByZero.
CFValue eval_chain(const CFChain& c);

// Length >= 2: all entries positive, every proper tail [k_i..k_s] (i >= 2)
// evaluates to a positive value, and the whole chain evaluates to exactly 0.
// Positive tails rule out division by zero and also chains such as
// [2,1,1,1,1,2], which reach 0 only through the negative tail [1,1,2] = -1.
// Length 1: only [0].
bool represents_zero(const CFChain& c);

}  // namespace cqs
