#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace penreg {

/// Signed arbitrary-precision integer.
///
/// The magnitude is a little-endian sequence of 64-bit limbs; values of up
/// to two limbs are stored inline, larger ones on the heap. All operations
/// are exact. Division truncates toward zero and the remainder carries the
/// dividend's sign.
class BigInt {
public:
    BigInt() noexcept : sign_(0), size_(0), cap_(0) {}
    BigInt(std::int64_t v);
    BigInt(const BigInt& o);
    BigInt(BigInt&& o) noexcept;
    BigInt& operator=(const BigInt& o);
    BigInt& operator=(BigInt&& o) noexcept;
    ~BigInt();

    /// Parses an optionally signed decimal string. Throws ParseError.
    static BigInt from_string(std::string_view s);
    std::string to_string() const;

    bool is_zero() const noexcept { return sign_ == 0; }
    bool is_one() const noexcept { return sign_ > 0 && size_ == 1 && limbs()[0] == 1; }
    bool is_negative() const noexcept { return sign_ < 0; }
    int sign() const noexcept { return sign_; }

    bool fits_int64() const noexcept;
    std::int64_t to_int64() const; // valid only when fits_int64()

    BigInt abs() const;
    std::size_t bit_length() const noexcept;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a);
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    struct DivMod;
    /// Throws DivisionByZeroError when b is zero.
    static DivMod divmod(const BigInt& a, const BigInt& b);
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    /// Greatest common divisor of the magnitudes; gcd(0,0) = 0.
    static BigInt gcd(const BigInt& a, const BigInt& b);

    friend bool operator==(const BigInt& a, const BigInt& b) noexcept;
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) noexcept;

    int limb_count() const noexcept { return static_cast<int>(size_); }

private:
    static constexpr std::uint32_t kInlineLimbs = 2;

    std::int32_t sign_;  // -1, 0, +1; zero iff size_ == 0
    std::uint32_t size_; // limb count, highest limb nonzero
    std::uint32_t cap_;  // heap capacity; 0 while inline
    union {
        std::uint64_t inline_[kInlineLimbs];
        std::uint64_t* heap_;
    };

    const std::uint64_t* limbs() const noexcept { return cap_ ? heap_ : inline_; }
    std::uint64_t* limbs_mut() noexcept { return cap_ ? heap_ : inline_; }

    void reserve(std::uint32_t n);
    void trim() noexcept; // strip leading zero limbs, fix sign of zero
    void set_zero() noexcept;

    static BigInt from_magnitude(const std::uint64_t* m, std::uint32_t n, int sign);
    static BigInt add_mag(const BigInt& a, const BigInt& b, int sign);
    static BigInt sub_mag_ordered(const BigInt& big, const BigInt& small, int sign);
    static DivMod divmod_small(const BigInt& a, std::uint64_t d, int sa, int sb);

    friend class BigIntTestPeer;
};

struct BigInt::DivMod {
    BigInt quot, rem;
};

inline BigInt operator/(const BigInt& a, const BigInt& b) { return BigInt::divmod(a, b).quot; }
inline BigInt operator%(const BigInt& a, const BigInt& b) { return BigInt::divmod(a, b).rem; }

} // namespace penreg
