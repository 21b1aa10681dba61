#ifndef ALG2_SCALAR_HPP
#define ALG2_SCALAR_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <utility>

#include "alg2/errors.hpp"
#include "alg2/rational.hpp"

namespace alg2 {

/// Complex field element with an attached zero tolerance. Tolerances
/// propagate as the max of the operands so derived quantities keep a
/// meaningful comparison threshold.
class Numeric {
public:
    Numeric() : v_(0.0), eps_(kDefaultEps) {}
    template <class T, std::enable_if_t<std::is_arithmetic_v<T>, int> = 0>
    Numeric(T re) : v_(static_cast<double>(re)), eps_(kDefaultEps) {}
    Numeric(std::complex<double> v, double eps = kDefaultEps) : v_(v), eps_(eps) {}
    Numeric(double re, double im, double eps = kDefaultEps) : v_(re, im), eps_(eps) {}

    static constexpr double kDefaultEps = 1e-9;

    std::complex<double> value() const { return v_; }
    double re() const { return v_.real(); }
    double im() const { return v_.imag(); }
    double eps() const { return eps_; }

    bool is_zero() const { return std::abs(v_) <= eps_; }
    bool is_one() const { return std::abs(v_ - 1.0) <= eps_; }

    Numeric operator-() const { return {-v_, eps_}; }
    Numeric operator+(const Numeric& o) const { return {v_ + o.v_, std::max(eps_, o.eps_)}; }
    Numeric operator-(const Numeric& o) const { return {v_ - o.v_, std::max(eps_, o.eps_)}; }
    Numeric operator*(const Numeric& o) const { return {v_ * o.v_, std::max(eps_, o.eps_)}; }
    Numeric operator/(const Numeric& o) const {
        if (o.is_zero()) throw std::domain_error("Numeric: division by zero");
        return {v_ / o.v_, std::max(eps_, o.eps_)};
    }
    Numeric& operator+=(const Numeric& o) { return *this = *this + o; }
    Numeric& operator-=(const Numeric& o) { return *this = *this - o; }
    Numeric& operator*=(const Numeric& o) { return *this = *this * o; }
    Numeric& operator/=(const Numeric& o) { return *this = *this / o; }

    Numeric inv() const { return Numeric(1.0, eps_) / *this; }

    bool operator==(const Numeric& o) const { return (*this - o).is_zero(); }
    bool operator!=(const Numeric& o) const { return !(*this == o); }

    std::string to_string() const {
        if (std::abs(v_.imag()) <= eps_) return std::to_string(v_.real());
        return std::to_string(v_.real()) + (v_.imag() < 0 ? "" : "+") +
               std::to_string(v_.imag()) + "i";
    }

private:
    std::complex<double> v_;
    double eps_;
};

// ---------------------------------------------------------------------------
// Total order keys. Exact scalars order as rationals; numeric scalars order
// lexicographically on (Re, Im).
// ---------------------------------------------------------------------------

inline bool total_less(const Rational& a, const Rational& b) { return a < b; }

inline bool total_less(const Numeric& a, const Numeric& b) {
    if (a.re() != b.re()) return a.re() < b.re();
    return a.im() < b.im();
}

template <class K>
bool pair_less(const std::pair<K, K>& a, const std::pair<K, K>& b) {
    if (a.first != b.first) return total_less(a.first, b.first);
    if (a.second != b.second) return total_less(a.second, b.second);
    return false;
}

// ---------------------------------------------------------------------------
// Representatives for the quotient sets used by the classification.
// ---------------------------------------------------------------------------

/// Representative of the orbit {a, -a}: the "nonnegative" element.
inline Rational sign_representative(const Rational& a) { return a.abs(); }

/// Re > 0, or Re = 0 and Im >= 0.
inline Numeric sign_representative(const Numeric& a) {
    if (a.re() > a.eps()) return a;
    if (a.re() < -a.eps()) return -a;
    return a.im() >= -a.eps() ? Numeric(0.0, std::abs(a.im()), a.eps())
                              : Numeric(0.0, -a.im(), a.eps());
}

/// Representative of the orbit {a, 1/a}, a not in {0,1}: |a| > 1, plus -1.
inline Rational inverse_representative(const Rational& a) {
    if (a.is_zero() || a.is_one()) throw InvalidInput("inverse_representative: 0 and 1 excluded");
    if (a == Rational(-1)) return a;
    return a.abs() > Rational(1) ? a : a.inv();
}

/// |a| > 1, or |a| = 1 with 0 < arg <= pi.
inline Numeric inverse_representative(const Numeric& a) {
    if (a.is_zero() || a.is_one()) throw InvalidInput("inverse_representative: 0 and 1 excluded");
    double m = std::abs(a.value());
    if (m > 1 + a.eps()) return a;
    if (m < 1 - a.eps()) return a.inv();
    double arg = std::arg(a.value());
    return (arg > a.eps() || std::abs(arg - M_PI) <= a.eps()) ? a : a.inv();
}

/// Representative of the U-orbit {(a,b), (1-a+b, b)}: the element whose
/// first coordinate is total-order smaller; fixed points map to themselves.
template <class K>
std::pair<K, K> u_representative(const std::pair<K, K>& p) {
    K other = K(1) - p.first + p.second;
    if (total_less(other, p.first)) return {other, p.second};
    return p;
}

template <class K>
using PairTriple = std::array<std::pair<K, K>, 3>;

/// Representative of the S3-orbit of a pair triple: sort by the pair order,
/// then if exactly two entries coincide rotate them into positions 1 and 2
/// (so that C1 != C2 implies C3 differs from both).
template <class K>
PairTriple<K> v_representative(PairTriple<K> t) {
    std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return pair_less(a, b); });
    if (t[0] != t[1] && t[1] == t[2]) t = {t[1], t[2], t[0]};
    return t;
}

/// Pluggable chooser bundle for the quotient-set conventions. The defaults
/// are the rules above; a different convention relabels parametrized
/// families by the corresponding group action but keeps orbits intact.
template <class K>
struct RepresentativeConvention {
    std::function<K(const K&)> sign_rep = [](const K& a) { return sign_representative(a); };
    std::function<K(const K&)> inverse_rep = [](const K& a) { return inverse_representative(a); };
    std::function<std::pair<K, K>(const std::pair<K, K>&)> u_rep =
        [](const std::pair<K, K>& p) { return u_representative(p); };
    std::function<PairTriple<K>(const PairTriple<K>&)> v_rep =
        [](const PairTriple<K>& t) { return v_representative(t); };
};

// Field constant helpers usable from templated code.
template <class K>
K half() { return K(1) / K(2); }

}  // namespace alg2

#endif
