#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "penreg/rational.hpp"

namespace penreg {

/// Identifies the coefficient field: the rationals, or a prime field GF(p)
/// with a word-size modulus.
class FieldSpec {
public:
    enum class Kind { Rational, PrimeField };

    static FieldSpec rational() { return FieldSpec(Kind::Rational, 0); }
    /// Throws UsageError unless 2 <= p <= 2^31 and p is prime (trial
    /// division; moduli are small enough for that to be instant).
    static FieldSpec gf(std::uint64_t p);

    Kind kind() const { return kind_; }
    bool is_rational() const { return kind_ == Kind::Rational; }
    std::uint32_t modulus() const { return modulus_; }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) = default;

    std::string to_string() const; // "rational" or "gf<p>", e.g. "gf5"

private:
    FieldSpec(Kind k, std::uint32_t p) : kind_(k), modulus_(p) {}

    Kind kind_;
    std::uint32_t modulus_;
};

/// An element of the field named by its FieldSpec. Immutable value type;
/// all operations are exact and throw UsageError when the operands come
/// from different fields.
class FieldElement {
public:
    static FieldElement zero(const FieldSpec& fs);
    static FieldElement one(const FieldSpec& fs);
    /// Integer embedded into the field (reduced mod p for prime fields).
    static FieldElement from_int(const FieldSpec& fs, std::int64_t v);
    static FieldElement from_rational(Rational r);
    /// Parses the text encoding: "a/b" or "a" over the rationals, a decimal
    /// residue over GF(p). Throws ParseError.
    static FieldElement from_string(const FieldSpec& fs, std::string_view s);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    FieldElement inv() const; // DivisionByZeroError on 0
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);

    friend bool operator==(const FieldElement& a, const FieldElement& b);

    std::string str() const;

    const Rational& rational_value() const; // InternalError on GF(p) elements
    std::uint64_t residue() const;          // InternalError on rational elements

private:
    explicit FieldElement(Rational r)
        : field_(FieldSpec::rational()), rat_(std::move(r)), res_(0) {}
    FieldElement(const FieldSpec& fs, std::uint64_t residue)
        : field_(fs), rat_(), res_(residue) {}

    FieldSpec field_;
    Rational rat_;      // rational fields only
    std::uint64_t res_; // prime fields only, in [0, p)
};

/// Same-field check shared by all binary operations.
void require_same_field(const FieldElement& a, const FieldElement& b);

} // namespace penreg
