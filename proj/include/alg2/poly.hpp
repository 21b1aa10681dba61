#ifndef ALG2_POLY_HPP
#define ALG2_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "alg2/rational.hpp"

namespace alg2 {

/// Dense univariate polynomial over the exact rationals (variable "t").
class Poly {
public:
    Poly() = default;
    Poly(Rational c) {
        if (!c.is_zero()) c_.push_back(std::move(c));
    }
    Poly(long long c) : Poly(Rational(c)) {}
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly t(int power = 1) {
        std::vector<Rational> c(power + 1);
        c[power] = Rational(1);
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const Rational& leading() const { return c_.back(); }
    Rational coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rational(0);
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    Poly operator+(const Poly& o) const {
        std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(int(i)) + o.coeff(int(i));
        return Poly(std::move(r));
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return Poly(std::move(r));
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Euclidean division; requires o != 0.
    static void divmod(const Poly& a, const Poly& o, Poly& q, Poly& r) {
        q = Poly();
        r = a;
        if (o.is_zero()) throw std::domain_error("Poly: division by zero");
        while (!r.is_zero() && r.degree() >= o.degree()) {
            int d = r.degree() - o.degree();
            Rational c = r.leading() / o.leading();
            std::vector<Rational> mono(d + 1);
            mono[d] = c;
            Poly m(std::move(mono));
            q += m;
            r -= m * o;
        }
    }
    Poly operator/(const Poly& o) const {
        Poly q, r;
        divmod(*this, o, q, r);
        return q;
    }
    Poly operator%(const Poly& o) const {
        Poly q, r;
        divmod(*this, o, q, r);
        return r;
    }

    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        if (!a.is_zero()) {
            Rational lead = a.leading();
            for (auto& x : a.c_) x /= lead;  // monic normalization
        }
        return a;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<Rational> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational((long long)i);
        return Poly(std::move(r));
    }

    Rational eval(const Rational& x) const {
        Rational r(0);
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    /// Lowest index with a nonzero coefficient (order of vanishing at 0).
    int valuation() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return static_cast<int>(i);
        return -1;
    }

    std::string to_string(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            if (i == 0 || !c_[i].is_one()) s += c_[i].to_string();
            if (i > 0) {
                if (!c_[i].is_one()) s += "*";
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    std::vector<Rational> c_;  // c_[k] multiplies t^k; no trailing zeros

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

/// Field of rational functions Q(t), reduced with monic denominator.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    RationalFunction(Rational c) : num_(std::move(c)), den_(Rational(1)) {}
    RationalFunction(long long c) : num_(Rational(c)), den_(Rational(1)) {}
    RationalFunction(Poly num) : num_(std::move(num)), den_(Rational(1)) {}
    RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        reduce();
    }

    static RationalFunction t() { return RationalFunction(Poly::t()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_polynomial() const { return den_.degree() == 0; }

    /// The polynomial it equals; requires is_polynomial() (denominator is a
    /// nonzero constant after reduction, so divide it out).
    Poly as_polynomial() const {
        if (!is_polynomial()) throw std::domain_error("RationalFunction: not a polynomial");
        return num_ * Poly(Rational(1) / den_.coeff(0));
    }

    RationalFunction operator-() const { return raw(-num_, den_); }
    RationalFunction operator+(const RationalFunction& o) const {
        return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RationalFunction operator-(const RationalFunction& o) const {
        return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RationalFunction operator*(const RationalFunction& o) const {
        return RationalFunction(num_ * o.num_, den_ * o.den_);
    }
    RationalFunction operator/(const RationalFunction& o) const {
        if (o.is_zero()) throw std::domain_error("RationalFunction: division by zero");
        return RationalFunction(num_ * o.den_, den_ * o.num_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction inv() const { return RationalFunction(den_, num_); }

    bool operator==(const RationalFunction& o) const {
        return (num_ * o.den_) == (o.num_ * den_);
    }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    std::string to_string() const {
        if (is_polynomial()) return as_polynomial().to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

private:
    Poly num_, den_;

    static RationalFunction raw(Poly n, Poly d) {
        RationalFunction r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        return r;
    }

    void reduce() {
        if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
        if (num_.is_zero()) {
            den_ = Poly(Rational(1));
            return;
        }
        Poly g = Poly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        Rational lead = den_.leading();
        if (!lead.is_one()) {
            Poly scale(Rational(1) / lead);
            num_ = num_ * scale;
            den_ = den_ * scale;
        }
    }
};

}  // namespace alg2

#endif
