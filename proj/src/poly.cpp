#include "penreg/poly.hpp"

#include "penreg/errors.hpp"

namespace penreg {

Poly::Poly(const FieldSpec& fs, std::vector<FieldElement> coeffs)
    : field_(fs), c_(std::move(coeffs)) {
    for (const FieldElement& x : c_)
        if (!(x.field() == fs))
            throw UsageError("polynomial coefficient from the wrong field");
    trim();
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

Poly Poly::constant(FieldElement c) {
    Poly p(c.field());
    if (!c.is_zero())
        p.c_.push_back(std::move(c));
    return p;
}

Poly Poly::x_minus(const FieldElement& c) {
    Poly p(c.field());
    p.c_ = {-c, FieldElement::one(c.field())};
    return p;
}

const FieldElement& Poly::leading() const {
    if (is_zero())
        throw UsageError("leading coefficient of the zero polynomial");
    return c_.back();
}

FieldElement Poly::coeff(int i) const {
    if (i < 0 || i > degree())
        return FieldElement::zero(field_);
    return c_[i];
}

Poly operator+(const Poly& a, const Poly& b) {
    if (!(a.field_ == b.field_))
        throw UsageError("polynomial sum over mixed fields");
    Poly r(a.field_);
    std::size_t n = std::max(a.c_.size(), b.c_.size());
    r.c_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        FieldElement x = i < a.c_.size() ? a.c_[i] : FieldElement::zero(a.field_);
        if (i < b.c_.size())
            x = x + b.c_[i];
        r.c_.push_back(std::move(x));
    }
    r.trim();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly neg_b = b;
    for (FieldElement& x : neg_b.c_)
        x = -x;
    return a + neg_b;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (!(a.field_ == b.field_))
        throw UsageError("polynomial product over mixed fields");
    if (a.is_zero() || b.is_zero())
        return Poly(a.field_);
    Poly r(a.field_);
    r.c_.assign(a.c_.size() + b.c_.size() - 1, FieldElement::zero(a.field_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero())
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

Poly::DivMod Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero())
        throw DivisionByZeroError();
    if (!(a.field_ == b.field_))
        throw UsageError("polynomial division over mixed fields");
    DivMod out{Poly(a.field_), a};
    if (a.degree() < b.degree())
        return out;
    out.quot.c_.assign(a.degree() - b.degree() + 1, FieldElement::zero(a.field_));
    FieldElement lead_inv = b.leading().inv();
    while (!out.rem.is_zero() && out.rem.degree() >= b.degree()) {
        int shift = out.rem.degree() - b.degree();
        FieldElement f = out.rem.leading() * lead_inv;
        out.quot.c_[shift] = f;
        // rem -= f x^shift b
        for (int i = 0; i <= b.degree(); ++i)
            out.rem.c_[shift + i] = out.rem.c_[shift + i] - f * b.c_[i];
        out.rem.trim();
    }
    out.quot.trim();
    return out;
}

bool Poly::divides(const Poly& b, const Poly& a) {
    if (b.is_zero())
        return a.is_zero();
    return divmod(a, b).rem.is_zero();
}

Poly Poly::monic() const {
    if (is_zero())
        throw UsageError("monic form of the zero polynomial");
    if (leading().is_one())
        return *this;
    Poly r = *this;
    FieldElement inv = leading().inv();
    for (FieldElement& x : r.c_)
        x = x * inv;
    return r;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).rem;
        x = std::move(y);
        y = std::move(r);
    }
    return x.is_zero() ? x : x.monic();
}

bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
}

std::string Poly::to_string() const {
    if (is_zero())
        return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i].is_zero())
            continue;
        if (!out.empty())
            out += " + ";
        if (i == 0 || !c_[i].is_one())
            out += c_[i].str();
        if (i > 0) {
            if (!c_[i].is_one())
                out += "*";
            out += i == 1 ? "x" : "x^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace penreg
