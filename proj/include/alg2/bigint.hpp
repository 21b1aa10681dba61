#ifndef ALG2_BIGINT_HPP
#define ALG2_BIGINT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace alg2 {

/// Arbitrary-precision signed integer, sign-magnitude with 32-bit limbs.
///
/// Only the operations needed by exact rational arithmetic are provided:
/// ring operations, divmod (truncated toward zero), gcd, integer square
/// root and decimal I/O.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    explicit BigInt(std::string_view decimal);

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }
    int sign() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    /// Quotient truncated toward zero.
    BigInt operator/(const BigInt& o) const;
    /// Remainder with the sign of the dividend (C semantics).
    BigInt operator%(const BigInt& o) const;

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    bool operator==(const BigInt& o) const;
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;
    bool operator>(const BigInt& o) const { return o < *this; }
    bool operator<=(const BigInt& o) const { return !(o < *this); }
    bool operator>=(const BigInt& o) const { return !(*this < o); }

    static BigInt gcd(BigInt a, BigInt b);
    /// Floor of the square root; requires *this >= 0.
    BigInt isqrt() const;
    /// True iff *this is a perfect square; root returned through `root`.
    bool perfect_square(BigInt& root) const;

    bool fits_longlong() const;
    long long to_longlong() const;  // requires fits_longlong()
    double to_double() const;
    std::string to_string() const;

    /// Number of significant bits of |*this| (0 for zero).
    std::size_t bit_length() const;

private:
    // little-endian limbs, no trailing zero limb; empty == 0
    std::vector<std::uint32_t> limbs_;
    bool negative_ = false;

    void trim();
    static int cmp_mag(const BigInt& a, const BigInt& b);
    static BigInt add_mag(const BigInt& a, const BigInt& b);
    static BigInt sub_mag(const BigInt& a, const BigInt& b);  // |a| >= |b|
    static void divmod_mag(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
};

}  // namespace alg2

#endif
