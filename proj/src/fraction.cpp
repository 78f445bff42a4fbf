#include "cqs/fraction.hpp"

#include <ostream>
#include <stdexcept>

namespace cqs {

Fraction::Fraction(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) {
        throw std::domain_error("Fraction: zero denominator");
    }
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Fraction Fraction::from_reduced(BigInt numerator, BigInt denominator) {
    Fraction f;
    f.num_ = std::move(numerator);
    f.den_ = std::move(denominator);
    return f;
}

BigInt Fraction::ceil() const {
    // cpp_int division truncates toward zero.
    BigInt q = num_ / den_;
    if (num_.sign() > 0 && q * den_ != num_) {
        ++q;
    }
    return q;
}

Fraction Fraction::reciprocal() const {
    if (num_.is_zero()) {
        throw std::domain_error("Fraction: reciprocal of zero");
    }
    if (num_.sign() < 0) {
        return from_reduced(-den_, -num_);
    }
    return from_reduced(den_, num_);
}

Fraction& Fraction::operator+=(const Fraction& rhs) {
    *this = Fraction(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
    return *this;
}

Fraction& Fraction::operator-=(const Fraction& rhs) {
    *this = Fraction(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
    return *this;
}

Fraction& Fraction::operator*=(const Fraction& rhs) {
    *this = Fraction(num_ * rhs.num_, den_ * rhs.den_);
    return *this;
}

Fraction& Fraction::operator/=(const Fraction& rhs) {
    if (rhs.num_.is_zero()) {
        throw std::domain_error("Fraction: division by zero");
    }
    *this = Fraction(num_ * rhs.den_, den_ * rhs.num_);
    return *this;
}

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Fraction::to_string() const {
    if (den_ == 1) {
        return num_.str();
    }
    return num_.str() + "/" + den_.str();
}

std::ostream& operator<<(std::ostream& os, const Fraction& f) {
    return os << f.to_string();
}

}  // namespace cqs
