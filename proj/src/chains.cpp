#include "cqs/chains.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace cqs {

ZeroChain ZeroChain::make(CFChain entries) {
    if (!represents_zero(entries)) {
        throw std::invalid_argument("chain " + entries.to_string() + " does not represent zero");
    }
    return ZeroChain(std::move(entries));
}

bool is_component_chain(const CFChain& k, const CFChain& a) {
    if (k.size() != a.size()) return false;
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (k[i] > a[i]) return false;
    }
    return represents_zero(k);
}

namespace {

// Depth-first over positions 0 .. s-1 in ascending entry order, which yields
// lexicographic output. `target` is the value the tail k[pos..] must take for
// the whole chain to evaluate to 0. A proper tail of a zero chain is positive
// and below its first entry (k - 1/v with v > 0), so targets outside
// (0, a_pos] cannot be completed and the cut loses nothing.
void search_components(const std::vector<BigInt>& a, std::size_t pos, const Fraction& target,
                       std::vector<BigInt>& k, std::vector<ComponentChain>& out,
                       const CFChain& bound) {
    if (pos + 1 == a.size()) {
        if (target.is_integer() && target.numerator() >= 1 && target.numerator() <= a[pos]) {
            k[pos] = target.numerator();
            CFChain candidate(k);
            if (represents_zero(candidate)) {
                out.push_back({ZeroChain::make(std::move(candidate)), bound});
            }
        }
        return;
    }
    for (BigInt v = 1; v <= a[pos]; ++v) {
        const Fraction rest = Fraction(v) - target;
        if (rest.sign() <= 0) continue;  // zero divides by zero; negative gives a nonpositive tail
        const Fraction next = rest.reciprocal();
        if (next > Fraction(a[pos + 1])) continue;
        k[pos] = v;
        search_components(a, pos + 1, next, k, out, bound);
    }
}

}  // namespace

std::vector<ComponentChain> enumerate_components(const QuotientSingularity& x) {
    const CFChain a = hj_data(x);
    std::vector<ComponentChain> out;
    if (a.size() == 1) {
        out.push_back({ZeroChain::make(CFChain{0}), a});
        return out;
    }
    std::vector<BigInt> k(a.size(), BigInt(1));
    search_components(a.entries(), 0, Fraction(0), k, out, a);
    return out;
}

namespace {

// Depth-first over positions s-1 .. 0, carrying the suffix value num/den.
// Suffixes that will become proper tails must be positive, so a nonpositive
// suffix value cuts the subtree.
void scan_zero_chains(int s, int bound, const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> k(static_cast<std::size_t>(s), 0);
    std::function<void(int, const BigInt&, const BigInt&)> descend =
        [&](int pos, const BigInt& num, const BigInt& den) {
            // num/den is the value of k[pos+1 .. s-1].
            if (pos < 0) {
                if (num.is_zero()) emit(k);
                return;
            }
            if (num.sign() * den.sign() <= 0) return;
            for (int v = 1; v <= bound; ++v) {
                k[static_cast<std::size_t>(pos)] = v;
                descend(pos - 1, v * num - den, num);
            }
        };
    for (int last = 1; last <= bound; ++last) {
        k[static_cast<std::size_t>(s - 1)] = last;
        descend(s - 2, BigInt(last), BigInt(1));
    }
}

void check_length(int s, int& entry_bound) {
    if (s < 1 || s > kMaxZeroChainLength) {
        throw std::invalid_argument("zero-chain length must be in [1, " +
                                    std::to_string(kMaxZeroChainLength) + "] (got " +
                                    std::to_string(s) + ")");
    }
    if (entry_bound == 0) entry_bound = s;
    if (entry_bound < 1) {
        throw std::invalid_argument("entry bound must be positive");
    }
}

}  // namespace

std::uint64_t count_zero_chains(int s, int entry_bound) {
    check_length(s, entry_bound);
    std::uint64_t count = 0;
    scan_zero_chains(s, entry_bound, [&](const std::vector<int>&) { ++count; });
    return count;
}

std::vector<CFChain> list_zero_chains(int s, int entry_bound) {
    check_length(s, entry_bound);
    std::vector<CFChain> out;
    scan_zero_chains(s, entry_bound, [&](const std::vector<int>& k) {
        out.push_back(CFChain(std::vector<BigInt>(k.begin(), k.end())));
    });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cqs
