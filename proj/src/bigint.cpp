#include "penreg/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstring>
#include <numeric>
#include <vector>

#include "penreg/errors.hpp"

namespace penreg {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

int cmp_mag(const u64* a, std::uint32_t an, const u64* b, std::uint32_t bn) {
    if (an != bn)
        return an < bn ? -1 : 1;
    for (std::uint32_t i = an; i-- > 0;) {
        if (a[i] != b[i])
            return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

// r := a + b; r must have max(an,bn)+1 limbs; r may alias a.
std::uint32_t add_into(u64* r, const u64* a, std::uint32_t an, const u64* b, std::uint32_t bn) {
    if (an < bn) {
        std::swap(a, b);
        std::swap(an, bn);
    }
    u64 carry = 0;
    std::uint32_t i = 0;
    for (; i < bn; ++i) {
        u128 s = static_cast<u128>(a[i]) + b[i] + carry;
        r[i] = static_cast<u64>(s);
        carry = static_cast<u64>(s >> 64);
    }
    for (; i < an; ++i) {
        u128 s = static_cast<u128>(a[i]) + carry;
        r[i] = static_cast<u64>(s);
        carry = static_cast<u64>(s >> 64);
    }
    r[i] = carry;
    return an + (carry ? 1 : 0);
}

// r := a - b with a >= b; r may alias a. Returns the untrimmed limb count.
std::uint32_t sub_into(u64* r, const u64* a, std::uint32_t an, const u64* b, std::uint32_t bn) {
    u64 borrow = 0;
    std::uint32_t i = 0;
    for (; i < bn; ++i) {
        u64 bi = b[i];
        u64 t = a[i] - bi;
        u64 borrow2 = a[i] < bi;
        u64 t2 = t - borrow;
        borrow = borrow2 | (t < borrow);
        r[i] = t2;
    }
    for (; i < an; ++i) {
        u64 t = a[i] - borrow;
        borrow = a[i] < borrow;
        r[i] = t;
    }
    assert(borrow == 0);
    return an;
}

// r := a * b (schoolbook); r must have an+bn limbs and not alias the inputs.
std::uint32_t mul_into(u64* r, const u64* a, std::uint32_t an, const u64* b, std::uint32_t bn) {
    std::memset(r, 0, sizeof(u64) * (an + bn));
    for (std::uint32_t i = 0; i < an; ++i) {
        u64 carry = 0;
        u64 ai = a[i];
        for (std::uint32_t j = 0; j < bn; ++j) {
            u128 t = static_cast<u128>(ai) * b[j] + r[i + j] + carry;
            r[i + j] = static_cast<u64>(t);
            carry = static_cast<u64>(t >> 64);
        }
        r[i + bn] = carry;
    }
    return an + bn;
}

std::uint32_t trim_size(const u64* p, std::uint32_t n) {
    while (n > 0 && p[n - 1] == 0)
        --n;
    return n;
}

unsigned trailing_zero_bits(const u64* p, std::uint32_t n) {
    for (std::uint32_t i = 0; i < n; ++i) {
        if (p[i])
            return i * 64 + static_cast<unsigned>(std::countr_zero(p[i]));
    }
    return n * 64;
}

// In-place right shift by k bits (k may exceed 64).
std::uint32_t shr_bits(u64* p, std::uint32_t n, unsigned k) {
    std::uint32_t limb = k / 64;
    unsigned bits = k % 64;
    if (limb >= n)
        return 0;
    if (limb) {
        std::memmove(p, p + limb, sizeof(u64) * (n - limb));
        n -= limb;
    }
    if (bits) {
        for (std::uint32_t i = 0; i < n; ++i) {
            u64 hi = (i + 1 < n) ? p[i + 1] : 0;
            p[i] = (p[i] >> bits) | (hi << (64 - bits));
        }
    }
    return trim_size(p, n);
}

} // namespace

BigInt::BigInt(std::int64_t v) : sign_(0), size_(0), cap_(0) {
    if (v == 0)
        return;
    sign_ = v < 0 ? -1 : 1;
    u64 m = v < 0 ? ~static_cast<u64>(v) + 1 : static_cast<u64>(v);
    inline_[0] = m;
    size_ = 1;
}

BigInt::BigInt(const BigInt& o) : sign_(o.sign_), size_(o.size_), cap_(0) {
    if (size_ <= kInlineLimbs) {
        std::memcpy(inline_, o.limbs(), sizeof(u64) * size_);
    } else {
        heap_ = new u64[size_];
        cap_ = size_;
        std::memcpy(heap_, o.limbs(), sizeof(u64) * size_);
    }
}

BigInt::BigInt(BigInt&& o) noexcept : sign_(o.sign_), size_(o.size_), cap_(o.cap_) {
    if (cap_)
        heap_ = o.heap_;
    else
        std::memcpy(inline_, o.inline_, sizeof(inline_));
    o.sign_ = 0;
    o.size_ = 0;
    o.cap_ = 0;
}

BigInt& BigInt::operator=(const BigInt& o) {
    if (this != &o) {
        BigInt tmp(o);
        *this = std::move(tmp);
    }
    return *this;
}

BigInt& BigInt::operator=(BigInt&& o) noexcept {
    if (this != &o) {
        if (cap_)
            delete[] heap_;
        sign_ = o.sign_;
        size_ = o.size_;
        cap_ = o.cap_;
        if (cap_)
            heap_ = o.heap_;
        else
            std::memcpy(inline_, o.inline_, sizeof(inline_));
        o.sign_ = 0;
        o.size_ = 0;
        o.cap_ = 0;
    }
    return *this;
}

BigInt::~BigInt() {
    if (cap_)
        delete[] heap_;
}

void BigInt::reserve(std::uint32_t n) {
    if (n <= kInlineLimbs || n <= cap_)
        return;
    u64* p = new u64[n];
    std::memcpy(p, limbs(), sizeof(u64) * size_);
    if (cap_)
        delete[] heap_;
    heap_ = p;
    cap_ = n;
}

void BigInt::trim() noexcept {
    size_ = trim_size(limbs(), size_);
    if (size_ == 0)
        sign_ = 0;
}

void BigInt::set_zero() noexcept {
    sign_ = 0;
    size_ = 0;
}

BigInt BigInt::from_magnitude(const u64* m, std::uint32_t n, int sign) {
    BigInt r;
    n = trim_size(m, n);
    if (n == 0)
        return r;
    r.reserve(n);
    std::memcpy(r.limbs_mut(), m, sizeof(u64) * n);
    r.size_ = n;
    r.sign_ = sign;
    return r;
}

bool BigInt::fits_int64() const noexcept {
    if (size_ == 0)
        return true;
    if (size_ > 1)
        return false;
    u64 m = limbs()[0];
    return sign_ > 0 ? m <= 0x7fffffffffffffffULL : m <= 0x8000000000000000ULL;
}

std::int64_t BigInt::to_int64() const {
    assert(fits_int64());
    if (size_ == 0)
        return 0;
    u64 m = limbs()[0];
    return sign_ > 0 ? static_cast<std::int64_t>(m) : -static_cast<std::int64_t>(m - 1) - 1;
}

BigInt BigInt::abs() const {
    BigInt r(*this);
    if (r.sign_ < 0)
        r.sign_ = 1;
    return r;
}

std::size_t BigInt::bit_length() const noexcept {
    if (size_ == 0)
        return 0;
    return static_cast<std::size_t>(size_ - 1) * 64 +
           (64 - static_cast<std::size_t>(std::countl_zero(limbs()[size_ - 1])));
}

BigInt BigInt::add_mag(const BigInt& a, const BigInt& b, int sign) {
    BigInt r;
    std::uint32_t n = std::max(a.size_, b.size_) + 1;
    r.reserve(n);
    r.size_ = add_into(r.limbs_mut(), a.limbs(), a.size_, b.limbs(), b.size_);
    r.sign_ = sign;
    r.trim();
    return r;
}

BigInt BigInt::sub_mag_ordered(const BigInt& big, const BigInt& small, int sign) {
    BigInt r;
    r.reserve(big.size_);
    r.size_ = sub_into(r.limbs_mut(), big.limbs(), big.size_, small.limbs(), small.size_);
    r.sign_ = sign;
    r.trim();
    return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    if (a.sign_ == b.sign_)
        return BigInt::add_mag(a, b, a.sign_);
    int c = cmp_mag(a.limbs(), a.size_, b.limbs(), b.size_);
    if (c == 0)
        return BigInt();
    return c > 0 ? BigInt::sub_mag_ordered(a, b, a.sign_) : BigInt::sub_mag_ordered(b, a, b.sign_);
}

BigInt operator-(const BigInt& a) {
    BigInt r(a);
    r.sign_ = -r.sign_;
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero())
        return BigInt();
    int sign = a.sign_ * b.sign_;
    if (a.size_ == 1 && b.size_ == 1) {
        u128 t = static_cast<u128>(a.limbs()[0]) * b.limbs()[0];
        u64 m[2] = {static_cast<u64>(t), static_cast<u64>(t >> 64)};
        return BigInt::from_magnitude(m, 2, sign);
    }
    BigInt r;
    r.reserve(a.size_ + b.size_);
    r.size_ = mul_into(r.limbs_mut(), a.limbs(), a.size_, b.limbs(), b.size_);
    r.sign_ = sign;
    r.trim();
    return r;
}

BigInt::DivMod BigInt::divmod_small(const BigInt& a, u64 d, int sa, int sb) {
    BigInt q;
    q.reserve(a.size_);
    u64 rem = 0;
    const u64* al = a.limbs();
    u64* ql = q.limbs_mut();
    for (std::uint32_t i = a.size_; i-- > 0;) {
        u128 cur = (static_cast<u128>(rem) << 64) | al[i];
        ql[i] = static_cast<u64>(cur / d);
        rem = static_cast<u64>(cur % d);
    }
    q.size_ = a.size_;
    q.sign_ = sa * sb;
    q.trim();
    DivMod out;
    out.quot = std::move(q);
    out.rem = BigInt::from_magnitude(&rem, 1, sa);
    return out;
}

BigInt::DivMod BigInt::divmod(const BigInt& a, const BigInt& b) {
    if (b.is_zero())
        throw DivisionByZeroError();
    DivMod out;
    if (a.is_zero())
        return out;
    int c = cmp_mag(a.limbs(), a.size_, b.limbs(), b.size_);
    if (c < 0) {
        out.rem = a;
        return out;
    }
    if (b.size_ == 1)
        return divmod_small(a, b.limbs()[0], a.sign_, b.sign_);

    // Bitwise long division on magnitudes.
    std::vector<u64> rem(b.size_ + 1, 0);
    std::vector<u64> quot(a.size_, 0);
    const u64* al = a.limbs();
    const u64* bl = b.limbs();
    std::uint32_t rn = 0;
    for (std::size_t i = a.bit_length(); i-- > 0;) {
        // rem = (rem << 1) | bit i of a
        u64 carry = (al[i / 64] >> (i % 64)) & 1;
        for (std::uint32_t j = 0; j <= rn; ++j) {
            u64 nxt = rem[j] >> 63;
            rem[j] = (rem[j] << 1) | carry;
            carry = nxt;
        }
        rn = trim_size(rem.data(), std::min<std::uint32_t>(rn + 1, b.size_ + 1));
        if (cmp_mag(rem.data(), rn, bl, b.size_) >= 0) {
            rn = trim_size(rem.data(), sub_into(rem.data(), rem.data(), rn, bl, b.size_));
            quot[i / 64] |= u64(1) << (i % 64);
        }
    }
    out.quot = from_magnitude(quot.data(), static_cast<std::uint32_t>(quot.size()), a.sign_ * b.sign_);
    out.rem = from_magnitude(rem.data(), rn, a.sign_);
    return out;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    if (a.is_zero())
        return b.abs();
    if (b.is_zero())
        return a.abs();
    if (a.size_ == 1 && b.size_ == 1) {
        u64 g = std::gcd(a.limbs()[0], b.limbs()[0]);
        return from_magnitude(&g, 1, 1);
    }

    // Stein's binary gcd on magnitude copies.
    std::vector<u64> x(a.limbs(), a.limbs() + a.size_);
    std::vector<u64> y(b.limbs(), b.limbs() + b.size_);
    std::uint32_t xn = a.size_, yn = b.size_;
    unsigned za = trailing_zero_bits(x.data(), xn);
    unsigned zb = trailing_zero_bits(y.data(), yn);
    unsigned shift = std::min(za, zb);
    xn = shr_bits(x.data(), xn, za);
    while (true) {
        yn = shr_bits(y.data(), yn, trailing_zero_bits(y.data(), yn));
        int c = cmp_mag(x.data(), xn, y.data(), yn);
        if (c > 0) {
            x.swap(y);
            std::swap(xn, yn);
        } else if (c == 0) {
            break;
        }
        yn = trim_size(y.data(), sub_into(y.data(), y.data(), yn, x.data(), xn));
        if (yn == 0)
            break;
    }

    // Result is x << shift.
    std::uint32_t extra = shift / 64 + 1;
    std::vector<u64> r(xn + extra, 0);
    std::uint32_t limb = shift / 64;
    unsigned bits = shift % 64;
    for (std::uint32_t i = 0; i < xn; ++i) {
        r[i + limb] |= x[i] << bits;
        if (bits)
            r[i + limb + 1] |= x[i] >> (64 - bits);
    }
    return from_magnitude(r.data(), static_cast<std::uint32_t>(r.size()), 1);
}

bool operator==(const BigInt& a, const BigInt& b) noexcept {
    return a.sign_ == b.sign_ && a.size_ == b.size_ &&
           std::memcmp(a.limbs(), b.limbs(), sizeof(u64) * a.size_) == 0;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) noexcept {
    if (a.sign_ != b.sign_)
        return a.sign_ <=> b.sign_;
    int c = cmp_mag(a.limbs(), a.size_, b.limbs(), b.size_);
    if (a.sign_ < 0)
        c = -c;
    return c <=> 0;
}

BigInt BigInt::from_string(std::string_view s) {
    std::string_view digits = s;
    int sign = 1;
    if (!digits.empty() && (digits[0] == '+' || digits[0] == '-')) {
        sign = digits[0] == '-' ? -1 : 1;
        digits.remove_prefix(1);
    }
    if (digits.empty())
        throw ParseError("empty integer literal: '" + std::string(s) + "'");
    BigInt r;
    constexpr u64 kChunkBase = 1000000000000000000ULL; // 10^18
    std::size_t pos = 0;
    while (pos < digits.size()) {
        std::size_t take = std::min<std::size_t>(18, digits.size() - pos);
        u64 chunk = 0;
        u64 base = 1;
        for (std::size_t i = 0; i < take; ++i) {
            char ch = digits[pos + i];
            if (ch < '0' || ch > '9')
                throw ParseError("bad digit in integer literal: '" + std::string(s) + "'");
            chunk = chunk * 10 + static_cast<u64>(ch - '0');
            base *= 10;
        }
        r = r * BigInt(static_cast<std::int64_t>(take == 18 ? kChunkBase : base)) +
            BigInt(static_cast<std::int64_t>(chunk));
        pos += take;
    }
    if (!r.is_zero())
        r.sign_ = sign;
    return r;
}

std::string BigInt::to_string() const {
    if (is_zero())
        return "0";
    std::vector<u64> groups;
    BigInt cur = abs();
    const BigInt chunk(1000000000000000000LL);
    while (!cur.is_zero()) {
        DivMod dm = divmod(cur, chunk);
        groups.push_back(dm.rem.is_zero() ? 0 : dm.rem.limbs()[0]);
        cur = std::move(dm.quot);
    }
    std::string out;
    if (sign_ < 0)
        out.push_back('-');
    out += std::to_string(groups.back());
    for (std::size_t i = groups.size() - 1; i-- > 0;) {
        std::string part = std::to_string(groups[i]);
        out.append(18 - part.size(), '0');
        out += part;
    }
    return out;
}

} // namespace penreg
