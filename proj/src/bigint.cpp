#include "alg2/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace alg2 {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
    negative_ = v < 0;
    unsigned long long m = negative_ ? -static_cast<unsigned long long>(v)
                                     : static_cast<unsigned long long>(v);
    while (m != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(m & 0xffffffffull));
        m >>= 32;
    }
}

BigInt::BigInt(std::string_view s) {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
    BigInt acc;
    const BigInt ten(10);
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
        acc = acc * ten + BigInt(s[i] - '0');
    }
    *this = acc;
    if (!is_zero()) negative_ = neg;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

BigInt BigInt::add_mag(const BigInt& a, const BigInt& b) {
    BigInt r;
    const auto& x = a.limbs_.size() >= b.limbs_.size() ? a.limbs_ : b.limbs_;
    const auto& y = a.limbs_.size() >= b.limbs_.size() ? b.limbs_ : a.limbs_;
    r.limbs_.resize(x.size());
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::uint64_t s = carry + x[i] + (i < y.size() ? y[i] : 0u);
        r.limbs_[i] = static_cast<std::uint32_t>(s);
        carry = s >> 32;
    }
    if (carry) r.limbs_.push_back(static_cast<std::uint32_t>(carry));
    return r;
}

BigInt BigInt::sub_mag(const BigInt& a, const BigInt& b) {
    BigInt r;
    r.limbs_.resize(a.limbs_.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a.limbs_[i]) - borrow -
                         (i < b.limbs_.size() ? static_cast<std::int64_t>(b.limbs_[i]) : 0);
        if (d < 0) {
            d += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r.limbs_[i] = static_cast<std::uint32_t>(d);
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.is_zero()) r.negative_ = !r.negative_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.negative_ = false;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (negative_ == o.negative_) {
        BigInt r = add_mag(*this, o);
        r.negative_ = negative_ && !r.is_zero();
        return r;
    }
    int c = cmp_mag(*this, o);
    if (c == 0) return BigInt();
    BigInt r = c > 0 ? sub_mag(*this, o) : sub_mag(o, *this);
    r.negative_ = (c > 0 ? negative_ : o.negative_) && !r.is_zero();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    if (is_zero() || o.is_zero()) return BigInt();
    BigInt r;
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
            std::uint64_t cur = r.limbs_[i + j] +
                                static_cast<std::uint64_t>(limbs_[i]) * o.limbs_[j] + carry;
            r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        std::size_t k = i + o.limbs_.size();
        while (carry) {
            std::uint64_t cur = r.limbs_[k] + carry;
            r.limbs_[k] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    r.trim();
    r.negative_ = negative_ != o.negative_;
    return r;
}

void BigInt::divmod_mag(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    // |a| / |b| with |b| != 0; Knuth algorithm D
    if (cmp_mag(a, b) < 0) {
        q = BigInt();
        r = a.abs();
        return;
    }
    if (b.limbs_.size() == 1) {
        std::uint64_t d = b.limbs_[0];
        q.limbs_.assign(a.limbs_.size(), 0);
        q.negative_ = false;
        std::uint64_t rem = 0;
        for (std::size_t i = a.limbs_.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | a.limbs_[i];
            q.limbs_[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        q.trim();
        r = BigInt(static_cast<long long>(rem));
        return;
    }

    const int shift = std::countl_zero(b.limbs_.back());
    const std::size_t n = b.limbs_.size();
    // normalized copies: u has one extra high limb
    std::vector<std::uint32_t> u(a.limbs_.size() + 1, 0), v(n, 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        std::uint64_t x = static_cast<std::uint64_t>(a.limbs_[i]) << shift;
        u[i] |= static_cast<std::uint32_t>(x);
        u[i + 1] |= static_cast<std::uint32_t>(x >> 32);
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t x = static_cast<std::uint64_t>(b.limbs_[i]) << shift;
        v[i] |= static_cast<std::uint32_t>(x);
        if (i + 1 < n) v[i + 1] |= static_cast<std::uint32_t>(x >> 32);
    }
    const std::size_t m = u.size() - 1 - n;
    q.limbs_.assign(m + 1, 0);
    q.negative_ = false;

    for (std::size_t j = m + 1; j-- > 0;) {
        std::uint64_t num = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
        std::uint64_t qhat = num / v[n - 1];
        std::uint64_t rhat = num % v[n - 1];
        while (qhat >= kBase ||
               qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += v[n - 1];
            if (rhat >= kBase) break;
        }
        // multiply-subtract
        std::int64_t borrow = 0;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t p = qhat * v[i] + carry;
            carry = p >> 32;
            std::int64_t t = static_cast<std::int64_t>(u[i + j]) -
                             static_cast<std::int64_t>(p & 0xffffffffull) - borrow;
            if (t < 0) {
                t += static_cast<std::int64_t>(kBase);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = static_cast<std::uint32_t>(t);
        }
        std::int64_t t = static_cast<std::int64_t>(u[j + n]) -
                         static_cast<std::int64_t>(carry) - borrow;
        if (t < 0) {
            // qhat one too large: add v back
            t += static_cast<std::int64_t>(kBase);
            --qhat;
            std::uint64_t c2 = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t s = static_cast<std::uint64_t>(u[i + j]) + v[i] + c2;
                u[i + j] = static_cast<std::uint32_t>(s);
                c2 = s >> 32;
            }
            t += static_cast<std::int64_t>(c2);
            t &= static_cast<std::int64_t>(kBase) - 1;
        }
        u[j + n] = static_cast<std::uint32_t>(t);
        q.limbs_[j] = static_cast<std::uint32_t>(qhat);
    }
    q.trim();
    // denormalize remainder
    r.limbs_.assign(n, 0);
    r.negative_ = false;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t x = u[i];
        if (i + 1 < u.size()) x |= static_cast<std::uint64_t>(u[i + 1]) << 32;
        r.limbs_[i] = static_cast<std::uint32_t>(x >> shift);
    }
    r.trim();
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
    divmod_mag(a, b, q, r);
    if (!q.is_zero()) q.negative_ = a.negative_ != b.negative_;
    if (!r.is_zero()) r.negative_ = a.negative_;
}

BigInt BigInt::operator/(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return r;
}

bool BigInt::operator==(const BigInt& o) const {
    return negative_ == o.negative_ && limbs_ == o.limbs_;
}

bool BigInt::operator<(const BigInt& o) const {
    if (negative_ != o.negative_) return negative_;
    int c = cmp_mag(*this, o);
    return negative_ ? c > 0 : c < 0;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.negative_ = false;
    b.negative_ = false;
    while (!b.is_zero()) {
        BigInt q, r;
        divmod_mag(a, b, q, r);
        a = b;
        b = r;
    }
    return a;
}

std::size_t BigInt::bit_length() const {
    if (limbs_.empty()) return 0;
    return 32 * (limbs_.size() - 1) + (32 - std::countl_zero(limbs_.back()));
}

BigInt BigInt::isqrt() const {
    if (negative_) throw std::domain_error("BigInt: isqrt of negative");
    if (is_zero()) return BigInt();
    // Newton iteration from a power-of-two overestimate
    BigInt x(1);
    std::size_t half = (bit_length() + 1) / 2;
    for (std::size_t i = 0; i < half; ++i) x = x + x;
    while (true) {
        BigInt y = (x + *this / x) / BigInt(2);
        if (!(y < x)) break;
        x = y;
    }
    return x;
}

bool BigInt::perfect_square(BigInt& root) const {
    if (negative_) return false;
    BigInt s = isqrt();
    if (s * s == *this) {
        root = s;
        return true;
    }
    return false;
}

bool BigInt::fits_longlong() const {
    if (limbs_.size() > 2) return false;
    unsigned long long m = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) m = (m << 32) | limbs_[i];
    if (negative_) return m <= 0x8000000000000000ull;
    return m <= 0x7fffffffffffffffull;
}

long long BigInt::to_longlong() const {
    unsigned long long m = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) m = (m << 32) | limbs_[i];
    return negative_ ? -static_cast<long long>(m) : static_cast<long long>(m);
}

double BigInt::to_double() const {
    double r = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) r = r * 4294967296.0 + limbs_[i];
    return negative_ ? -r : r;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    BigInt t = abs();
    const BigInt chunk(1000000000);
    std::vector<std::uint32_t> parts;
    while (!t.is_zero()) {
        BigInt q, r;
        divmod_mag(t, chunk, q, r);
        parts.push_back(r.is_zero() ? 0u : r.limbs_[0]);
        t = q;
    }
    std::string s = negative_ ? "-" : "";
    s += std::to_string(parts.back());
    for (std::size_t i = parts.size() - 1; i-- > 0;) {
        std::string p = std::to_string(parts[i]);
        s += std::string(9 - p.size(), '0') + p;
    }
    return s;
}

}  // namespace alg2
