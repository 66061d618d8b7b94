#pragma once

#include <string>
#include <vector>

#include "penreg/field.hpp"

namespace penreg {

/// Dense univariate polynomial over a field; coefficient i belongs to x^i
/// and the leading coefficient is nonzero (the zero polynomial has no
/// coefficients at all).
class Poly {
public:
    explicit Poly(const FieldSpec& fs) : field_(fs) {} // zero polynomial
    Poly(const FieldSpec& fs, std::vector<FieldElement> coeffs);

    static Poly constant(FieldElement c);
    static Poly x_minus(const FieldElement& c); // x - c
    static Poly one(const FieldSpec& fs) { return constant(FieldElement::one(fs)); }

    const FieldSpec& field() const { return field_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return degree() == 0 && c_[0].is_one(); }
    const FieldElement& leading() const;
    FieldElement coeff(int i) const; // zero beyond the degree
    const std::vector<FieldElement>& coeffs() const { return c_; }

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);

    struct DivMod;
    /// Euclidean division; DivisionByZeroError when b is zero.
    static DivMod divmod(const Poly& a, const Poly& b);
    /// True when b divides a exactly.
    static bool divides(const Poly& b, const Poly& a);

    Poly monic() const; // UsageError on the zero polynomial
    static Poly gcd(const Poly& a, const Poly& b); // monic (or zero)

    friend bool operator==(const Poly& a, const Poly& b);

    std::string to_string() const; // for diagnostics, e.g. "x^2 - 3x + 2"

private:
    FieldSpec field_;
    std::vector<FieldElement> c_;

    void trim();
};

struct Poly::DivMod {
    Poly quot, rem;
};

} // namespace penreg
