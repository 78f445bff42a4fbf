#include "cqs/quotient.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace cqs {

QuotientSingularity::QuotientSingularity(std::int64_t n, std::int64_t q) : n_(n), q_(q) {
    if (n < 2) {
        throw std::invalid_argument("n must be at least 2 (got " + std::to_string(n) + ")");
    }
    if (q <= 0 || q >= n) {
        throw std::invalid_argument("q must satisfy 0 < q < n (got n=" + std::to_string(n) +
                                    ", q=" + std::to_string(q) + ")");
    }
    if (std::gcd(n, q) != 1) {
        throw std::invalid_argument("n and q must be coprime (got n=" + std::to_string(n) +
                                    ", q=" + std::to_string(q) + ")");
    }
}

std::ostream& operator<<(std::ostream& os, const QuotientSingularity& x) {
    return os << "X(" << x.n() << "," << x.q() << ")";
}

std::ostream& operator<<(std::ostream& os, const ExponentPair& p) {
    return os << "(" << p.i << "," << p.j << ")";
}

CFChain hj_data(const QuotientSingularity& x) {
    return hj_expand(Fraction(BigInt(x.n()), BigInt(x.n() - x.q())));
}

std::int64_t embedding_dimension(const QuotientSingularity& x) {
    return static_cast<std::int64_t>(hj_data(x).size()) + 2;
}

ExponentTable invariant_exponents(const QuotientSingularity& x) {
    const std::vector<long long> a = hj_data(x).to_ints();
    ExponentTable table;
    table.reserve(a.size() + 2);
    table.push_back({x.n(), 0});
    table.push_back({x.n() - x.q(), 1});
    for (long long ak : a) {
        const ExponentPair& prev = table[table.size() - 2];
        const ExponentPair& cur = table.back();
        table.push_back({ak * cur.i - prev.i, ak * cur.j - prev.j});
    }
    if (table.back() != ExponentPair{0, x.n()}) {
        throw std::logic_error("invariant_exponents: recursion for X(" + std::to_string(x.n()) + "," +
                               std::to_string(x.q()) + ") did not terminate at (0,n)");
    }
    return table;
}

ExponentTable hilbert_basis_oracle(const QuotientSingularity& x, std::int64_t bound) {
    const std::int64_t n = x.n();
    const std::int64_t q = x.q();
    if (n > bound) {
        throw std::invalid_argument("hilbert_basis_oracle: n=" + std::to_string(n) +
                                    " exceeds bound " + std::to_string(bound));
    }
    const auto side = static_cast<std::size_t>(n + 1);
    std::vector<char> member(side * side, 0);
    auto idx = [side](std::int64_t i, std::int64_t j) {
        return static_cast<std::size_t>(i) * side + static_cast<std::size_t>(j);
    };
    std::vector<ExponentPair> solutions;
    for (std::int64_t i = 0; i <= n; ++i) {
        for (std::int64_t j = 0; j <= n; ++j) {
            if ((i == 0 && j == 0) || (i + q * j) % n != 0) continue;
            member[idx(i, j)] = 1;
            solutions.push_back({i, j});
        }
    }
    ExponentTable generators;
    for (const auto& s : solutions) {
        bool decomposable = false;
        for (const auto& t : solutions) {
            if (t.i > s.i || t.j > s.j || t == s) continue;
            const std::int64_t ri = s.i - t.i;
            const std::int64_t rj = s.j - t.j;
            if ((ri != 0 || rj != 0) && member[idx(ri, rj)]) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) generators.push_back(s);
    }
    std::sort(generators.begin(), generators.end(),
              [](const ExponentPair& a, const ExponentPair& b) { return a.i > b.i; });
    return generators;
}

QuotientSingularity dual(const QuotientSingularity& x) {
    return QuotientSingularity(x.n(), x.n() - x.q());
}

}  // namespace cqs
