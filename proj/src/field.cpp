#include "penreg/field.hpp"

#include <utility>

#include "penreg/errors.hpp"

namespace penreg {

namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2)
        return false;
    if (p % 2 == 0)
        return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2) {
        if (p % d == 0)
            return false;
    }
    return true;
}

// Inverse of a mod p by the extended Euclidean algorithm.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0)
        t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

} // namespace

FieldSpec FieldSpec::gf(std::uint64_t p) {
    if (p < 2 || p > (1ULL << 31))
        throw UsageError("prime field modulus out of range: " + std::to_string(p));
    if (!is_prime(p))
        throw UsageError("prime field modulus is not prime: " + std::to_string(p));
    return FieldSpec(Kind::PrimeField, static_cast<std::uint32_t>(p));
}

std::string FieldSpec::to_string() const {
    return is_rational() ? "rational" : "gf" + std::to_string(modulus_);
}

void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (!(a.field() == b.field()))
        throw UsageError("mixed-field operands: " + a.field().to_string() + " vs " +
                         b.field().to_string());
}

FieldElement FieldElement::zero(const FieldSpec& fs) {
    return fs.is_rational() ? FieldElement(Rational()) : FieldElement(fs, 0);
}

FieldElement FieldElement::one(const FieldSpec& fs) {
    return fs.is_rational() ? FieldElement(Rational(1)) : FieldElement(fs, 1);
}

FieldElement FieldElement::from_int(const FieldSpec& fs, std::int64_t v) {
    if (fs.is_rational())
        return FieldElement(Rational(v));
    std::int64_t p = fs.modulus();
    std::int64_t r = v % p;
    if (r < 0)
        r += p;
    return FieldElement(fs, static_cast<std::uint64_t>(r));
}

FieldElement FieldElement::from_rational(Rational r) { return FieldElement(std::move(r)); }

FieldElement FieldElement::from_string(const FieldSpec& fs, std::string_view s) {
    if (fs.is_rational())
        return FieldElement(Rational::from_string(s));
    BigInt v = BigInt::from_string(s);
    BigInt rem = v % BigInt(static_cast<std::int64_t>(fs.modulus()));
    std::int64_t r = rem.is_zero() ? 0 : rem.to_int64();
    if (r < 0)
        r += fs.modulus();
    return FieldElement(fs, static_cast<std::uint64_t>(r));
}

bool FieldElement::is_zero() const {
    return field_.is_rational() ? rat_.is_zero() : res_ == 0;
}

bool FieldElement::is_one() const {
    return field_.is_rational() ? rat_.is_one() : res_ == 1;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    if (a.field_.is_rational())
        return FieldElement(a.rat_ + b.rat_);
    std::uint64_t s = a.res_ + b.res_;
    std::uint64_t p = a.field_.modulus();
    return FieldElement(a.field_, s >= p ? s - p : s);
}

FieldElement operator-(const FieldElement& a) {
    if (a.field_.is_rational())
        return FieldElement(-a.rat_);
    return FieldElement(a.field_, a.res_ == 0 ? 0 : a.field_.modulus() - a.res_);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    if (a.field_.is_rational())
        return FieldElement(a.rat_ * b.rat_);
    return FieldElement(a.field_, a.res_ * b.res_ % a.field_.modulus());
}

FieldElement FieldElement::inv() const {
    if (is_zero())
        throw DivisionByZeroError();
    if (field_.is_rational())
        return FieldElement(rat_.inv());
    return FieldElement(field_, mod_inverse(res_, field_.modulus()));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return a * b.inv();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (!(a.field_ == b.field_))
        return false;
    return a.field_.is_rational() ? a.rat_ == b.rat_ : a.res_ == b.res_;
}

std::string FieldElement::str() const {
    return field_.is_rational() ? rat_.to_string() : std::to_string(res_);
}

const Rational& FieldElement::rational_value() const {
    if (!field_.is_rational())
        throw InternalError("rational_value() on a prime-field element");
    return rat_;
}

std::uint64_t FieldElement::residue() const {
    if (field_.is_rational())
        throw InternalError("residue() on a rational element");
    return res_;
}

} // namespace penreg
