#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "penreg/bigint.hpp"

namespace penreg {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator; zero is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) : Rational(BigInt(n), BigInt(d)) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d); // normalizes; DivisionByZeroError when d = 0

    /// Parses "a" or "a/b" with optional sign on a. Throws ParseError.
    static Rational from_string(std::string_view s);
    std::string to_string() const; // "a" when integral, else "a/b"

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return den_.is_one(); }
    bool is_normalized() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b); // DivisionByZeroError
    Rational inv() const;                                            // DivisionByZeroError on 0

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    BigInt num_, den_;

    struct AlreadyReduced {};
    Rational(BigInt n, BigInt d, AlreadyReduced) : num_(std::move(n)), den_(std::move(d)) {
        assert(is_normalized());
    }
};

} // namespace penreg
