#pragma once

// The cyclic quotient singularity X(n,q) = C^2 / <diag(z, z^q)>, z a primitive
// n-th root of unity, together with its continued-fraction data and the
// exponents of the invariant monomials x^i y^j that embed it in C^e.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cqs/cfrac.hpp"

namespace cqs {

class QuotientSingularity {
public:
    // Throws std::invalid_argument unless n >= 2, 0 < q < n and gcd(n, q) = 1.
    QuotientSingularity(std::int64_t n, std::int64_t q);

    std::int64_t n() const noexcept { return n_; }
    std::int64_t q() const noexcept { return q_; }

    friend bool operator==(const QuotientSingularity&, const QuotientSingularity&) = default;

private:
    std::int64_t n_;
    std::int64_t q_;
};

std::ostream& operator<<(std::ostream& os, const QuotientSingularity& x);

struct ExponentPair {
    std::int64_t i = 0;
    std::int64_t j = 0;
    friend bool operator==(const ExponentPair&, const ExponentPair&) = default;
};

using ExponentTable = std::vector<ExponentPair>;

std::ostream& operator<<(std::ostream& os, const ExponentPair& p);

// HJ expansion of n/(n-q); all entries >= 2.
CFChain hj_data(const QuotientSingularity& x);

// e = length of hj_data + 2.
std::int64_t embedding_dimension(const QuotientSingularity& x);

// Three-term recursion p_{k-1} + p_{k+1} = a_{k-1} p_k seeded with (n,0), (n-q,1).
// Throws std::logic_error if the table does not end at (0, n).
ExponentTable invariant_exponents(const QuotientSingularity& x);

inline constexpr std::int64_t kDefaultOracleBound = 200;

// Minimal generators of the semigroup {(i,j) >= 0 : i + q j = 0 mod n} by brute
// force, ordered by decreasing i. Independent of the continued fraction.
// Throws std::invalid_argument if n exceeds `bound`.
ExponentTable hilbert_basis_oracle(const QuotientSingularity& x,
                                   std::int64_t bound = kDefaultOracleBound);

// X(n, n-q); its link is the orientation reversal of the link of X(n,q).
QuotientSingularity dual(const QuotientSingularity& x);

}  // namespace cqs
