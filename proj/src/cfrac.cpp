#include "cqs/cfrac.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cqs {

CFChain::CFChain(std::vector<BigInt> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw std::invalid_argument("CFChain: empty chain");
    }
}

CFChain::CFChain(std::initializer_list<long long> entries)
    : CFChain(std::vector<BigInt>(entries.begin(), entries.end())) {}

CFChain CFChain::from_ints(const std::vector<long long>& entries) {
    return CFChain(std::vector<BigInt>(entries.begin(), entries.end()));
}

CFChain CFChain::reversed() const {
    return CFChain(std::vector<BigInt>(entries_.rbegin(), entries_.rend()));
}

bool CFChain::all_positive() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const BigInt& k) { return k.sign() > 0; });
}

std::vector<long long> CFChain::to_ints() const {
    std::vector<long long> out;
    out.reserve(entries_.size());
    for (const auto& k : entries_) {
        if (k > std::numeric_limits<long long>::max() || k < std::numeric_limits<long long>::min()) {
            throw std::overflow_error("CFChain: entry " + k.str() + " exceeds 64 bits");
        }
        out.push_back(static_cast<long long>(k));
    }
    return out;
}

std::string CFChain::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) os << ',';
        os << entries_[i];
    }
    os << ']';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CFChain& c) { return os << c.to_string(); }

std::ostream& operator<<(std::ostream& os, const CFValue& v) {
    if (v.divides_by_zero()) return os << "DIVISION-BY-ZERO";
    return os << v.value();
}

CFChain hj_expand(const Fraction& x) {
    if (x < Fraction(1)) {
        throw std::domain_error("hj_expand: argument " + x.to_string() + " is below 1");
    }
    std::vector<BigInt> entries;
    Fraction current = x;
    for (;;) {
        BigInt a = current.ceil();
        entries.push_back(a);
        if (current.is_integer()) {
            break;
        }
        // a - current lies in (0, 1), so the next value is > 1.
        current = (Fraction(a) - current).reciprocal();
    }
    return CFChain(std::move(entries));
}

CFValue eval_chain(const CFChain& c) {
    // Running value num/den. The step v <- k - 1/v maps num/den to
    // (k*num - den)/num, which stays reduced because gcd(k*num - den, num) = gcd(den, num).
    const auto& k = c.entries();
    BigInt num = k.back();
    BigInt den = 1;
    for (std::size_t i = k.size() - 1; i-- > 0;) {
        if (num.is_zero()) {
            return DivisionByZero{};
        }
        BigInt next = k[i] * num - den;
        den = std::move(num);
        num = std::move(next);
    }
    if (den.sign() < 0) {
        num = -num;
        den = -den;
    }
    return Fraction::from_reduced(std::move(num), std::move(den));
}

bool represents_zero(const CFChain& c) {
    if (c.size() == 1) {
        return c[0].is_zero();
    }
    if (!c.all_positive()) {
        return false;
    }
    // Same recursion as eval_chain, additionally requiring every proper tail
    // [k_i..k_s], i >= 2, to be positive.
    const auto& k = c.entries();
    BigInt num = k.back();
    BigInt den = 1;
    for (std::size_t i = k.size() - 1; i-- > 0;) {
        if (num.sign() * den.sign() <= 0) {
            return false;
        }
        BigInt next = k[i] * num - den;
        den = std::move(num);
        num = std::move(next);
    }
    return num.is_zero();
}

}  // namespace cqs
