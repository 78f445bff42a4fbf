#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cqs {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number, always stored reduced with a positive denominator.
class Fraction {
public:
    Fraction() : num_(0), den_(1) {}
    Fraction(BigInt value) : num_(std::move(value)), den_(1) {}  // NOLINT: implicit from integers
    Fraction(long long value) : num_(value), den_(1) {}         // NOLINT
    Fraction(BigInt numerator, BigInt denominator);

    // Skips the gcd step. Caller guarantees gcd(|num|, den) == 1 and den > 0.
    static Fraction from_reduced(BigInt numerator, BigInt denominator);

    const BigInt& numerator() const noexcept { return num_; }
    const BigInt& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return num_.sign(); }

    // Smallest integer >= this value.
    BigInt ceil() const;

    Fraction reciprocal() const;

    Fraction operator-() const { return from_reduced(-num_, den_); }
    Fraction& operator+=(const Fraction& rhs);
    Fraction& operator-=(const Fraction& rhs);
    Fraction& operator*=(const Fraction& rhs);
    Fraction& operator/=(const Fraction& rhs);

    friend Fraction operator+(Fraction lhs, const Fraction& rhs) { return lhs += rhs; }
    friend Fraction operator-(Fraction lhs, const Fraction& rhs) { return lhs -= rhs; }
    friend Fraction operator*(Fraction lhs, const Fraction& rhs) { return lhs *= rhs; }
    friend Fraction operator/(Fraction lhs, const Fraction& rhs) { return lhs /= rhs; }

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

    std::string to_string() const;

private:
    BigInt num_;
    BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Fraction& f);

}  // namespace cqs
