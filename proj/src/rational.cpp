#include "penreg/rational.hpp"

#include <cassert>

#include "penreg/errors.hpp"

namespace penreg {

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero())
        throw DivisionByZeroError();
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    assert(is_normalized());
}

bool Rational::is_normalized() const {
    if (den_.is_zero() || den_.is_negative())
        return false;
    if (num_.is_zero())
        return den_.is_one();
    return BigInt::gcd(num_, den_).is_one();
}

Rational Rational::from_string(std::string_view s) {
    std::size_t slash = s.find('/');
    if (slash == std::string_view::npos)
        return Rational(BigInt::from_string(s));
    BigInt n = BigInt::from_string(s.substr(0, slash));
    std::string_view dpart = s.substr(slash + 1);
    if (!dpart.empty() && (dpart[0] == '+' || dpart[0] == '-'))
        throw ParseError("sign belongs on the numerator: '" + std::string(s) + "'");
    BigInt d = BigInt::from_string(dpart);
    if (d.is_zero())
        throw ParseError("zero denominator: '" + std::string(s) + "'");
    return Rational(std::move(n), std::move(d));
}

std::string Rational::to_string() const {
    if (den_.is_one())
        return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

Rational operator+(const Rational& a, const Rational& b) {
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    // Knuth 4.5.1: reduce by g = gcd(den, den) first to keep operands small.
    BigInt g = BigInt::gcd(a.den_, b.den_);
    if (g.is_one()) {
        BigInt n = a.num_ * b.den_ + b.num_ * a.den_;
        if (n.is_zero())
            return Rational();
        return Rational(std::move(n), a.den_ * b.den_, Rational::AlreadyReduced{});
    }
    BigInt da = a.den_ / g;
    BigInt db = b.den_ / g;
    BigInt n = a.num_ * db + b.num_ * da;
    if (n.is_zero())
        return Rational();
    BigInt h = BigInt::gcd(n, g);
    if (!h.is_one()) {
        n = n / h;
        g = g / h;
    }
    return Rational(std::move(n), da * (std::move(g) * db), Rational::AlreadyReduced{});
}

Rational operator-(const Rational& a) {
    return Rational(-a.num_, a.den_, Rational::AlreadyReduced{});
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero())
        return Rational();
    // Cross-reduce before multiplying.
    BigInt g1 = BigInt::gcd(a.num_, b.den_);
    BigInt g2 = BigInt::gcd(b.num_, a.den_);
    BigInt n = (g1.is_one() ? a.num_ : a.num_ / g1) * (g2.is_one() ? b.num_ : b.num_ / g2);
    BigInt d = (g2.is_one() ? a.den_ : a.den_ / g2) * (g1.is_one() ? b.den_ : b.den_ / g1);
    return Rational(std::move(n), std::move(d), Rational::AlreadyReduced{});
}

Rational Rational::inv() const {
    if (is_zero())
        throw DivisionByZeroError();
    if (num_.is_negative())
        return Rational(-den_, -num_, AlreadyReduced{});
    return Rational(den_, num_, AlreadyReduced{});
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inv(); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
}

} // namespace penreg
