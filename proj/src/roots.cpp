#include "alg2/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "alg2/poly.hpp"

namespace alg2 {

namespace {

int sign_of(const BigInt& v) { return v.sign(); }

// Horner evaluation of an integer polynomial (low -> high) at an integer.
BigInt eval_int(const std::vector<BigInt>& c, const BigInt& x) {
    BigInt r(0);
    for (std::size_t i = c.size(); i-- > 0;) r = r * x + c[i];
    return r;
}

// Largest n in [lo, hi] with pred(n) true, where pred is monotone
// (true on a down-closed set). Requires pred(lo).
template <class Pred>
BigInt largest_true(BigInt lo, BigInt hi, Pred pred) {
    while (lo < hi) {
        BigInt mid = (lo + hi + BigInt(1)) / BigInt(2);
        // floor-adjust for negatives: BigInt division truncates toward zero
        if ((lo + hi + BigInt(1)).is_negative() && !((mid * BigInt(2)) == lo + hi + BigInt(1)))
            mid = mid - BigInt(1);
        if (pred(mid))
            lo = mid;
        else
            hi = mid - BigInt(1);
    }
    return lo;
}

// Smallest n in [lo, hi] with pred(n) true, where pred is monotone
// (true on an up-closed set). Requires pred(hi).
template <class Pred>
BigInt smallest_true(BigInt lo, BigInt hi, Pred pred) {
    while (lo < hi) {
        BigInt mid = (lo + hi) / BigInt(2);
        if ((lo + hi).is_negative() && !((mid * BigInt(2)) == lo + hi)) mid = mid - BigInt(1);
        if (pred(mid))
            hi = mid;
        else
            lo = mid + BigInt(1);
    }
    return lo;
}

// Integer roots of Q inside [lo, hi], assuming Q is monotone there.
void roots_in_monotone_segment(const std::vector<BigInt>& q, const BigInt& lo, const BigInt& hi,
                               std::vector<BigInt>& out) {
    if (hi < lo) return;
    BigInt flo = eval_int(q, lo);
    if (flo.is_zero()) out.push_back(lo);
    if (hi == lo) return;
    BigInt fhi = eval_int(q, hi);
    if (fhi.is_zero()) out.push_back(hi);
    if (sign_of(flo) * sign_of(fhi) >= 0) return;
    BigInt a = lo, b = hi;
    int sa = sign_of(flo);
    while (BigInt(1) < b - a) {
        BigInt mid = a + (b - a) / BigInt(2);
        BigInt fm = eval_int(q, mid);
        if (fm.is_zero()) {
            out.push_back(mid);
            return;
        }
        if (sign_of(fm) == sa)
            a = mid;
        else
            b = mid;
    }
}

// One rational root of an integer cubic with nonzero constant term, if any.
// A rational root of the cubic corresponds to an integer root of its
// monicization Q(s) = s^3 + B s^2 + C s + D with s = A3 t.
std::optional<Rational> rational_root_of_cubic(const BigInt& A3, const BigInt& A2,
                                               const BigInt& A1, const BigInt& A0) {
    const BigInt B = A2, C = A1 * A3, D = A0 * A3 * A3;
    const std::vector<BigInt> q = {D, C, B, BigInt(1)};

    // Cauchy-style bound covering the roots of Q and of Q'
    BigInt M = BigInt(2);
    for (const BigInt* x : {&B, &C, &D})
        if (M < x->abs()) M = x->abs();
    const BigInt E = B * B - BigInt(3) * C;  // (3s + B)^2 = E at critical points
    BigInt sq(0);
    if (!E.is_negative()) sq = E.isqrt();
    M = M + sq + B.abs() + BigInt(2);

    std::vector<BigInt> found;
    if (E.sign() <= 0) {
        // Q' >= 0 everywhere: monotone on the whole line
        roots_in_monotone_segment(q, -M, M, found);
    } else {
        auto at_most_rminus = [&](const BigInt& n) {
            BigInt v = BigInt(3) * n + B;
            return !v.is_negative() ? false : v * v >= E;
        };
        auto at_least_rplus = [&](const BigInt& n) {
            BigInt v = BigInt(3) * n + B;
            return v.is_negative() ? false : v * v >= E;
        };
        // segment 1: n <= r-  (Q increasing)
        if (at_most_rminus(-M)) {
            BigInt hi1 = largest_true(-M, M, at_most_rminus);
            roots_in_monotone_segment(q, -M, hi1, found);
        }
        // segment 2: r- <= n <= r+  (Q decreasing); integer n there iff (3n+B)^2 <= E
        auto inside = [&](const BigInt& n) {
            BigInt v = BigInt(3) * n + B;
            return v * v <= E;
        };
        auto ge_lo2 = [&](const BigInt& n) {
            BigInt v = BigInt(3) * n + B;
            return v.sign() > 0 || v * v <= E;  // n >= r-
        };
        auto le_hi2 = [&](const BigInt& n) {
            BigInt v = BigInt(3) * n + B;
            return v.sign() < 0 || v * v <= E;  // n <= r+
        };
        BigInt lo2 = smallest_true(-M, M, ge_lo2);
        BigInt hi2 = largest_true(-M, M, le_hi2);
        if (inside(lo2) && inside(hi2)) roots_in_monotone_segment(q, lo2, hi2, found);
        // segment 3: n >= r+  (Q increasing)
        if (at_least_rplus(M)) {
            BigInt lo3 = smallest_true(-M, M, at_least_rplus);
            roots_in_monotone_segment(q, lo3, M, found);
        }
    }
    if (found.empty()) return std::nullopt;
    return Rational(found.front(), A3);
}

// Divide p by (t - r); remainder returned separately.
std::vector<Rational> deflate(const std::vector<Rational>& p, const Rational& r,
                              Rational& remainder) {
    std::vector<Rational> q(p.size() - 1);
    Rational carry(0);
    for (std::size_t i = p.size(); i-- > 1;) {
        carry = p[i] + carry * r;
        q[i - 1] = carry;
    }
    remainder = p[0] + carry * r;
    return q;
}

std::string poly_to_string(const std::vector<Rational>& p) {
    std::vector<Rational> c(p.begin(), p.end());
    return Poly(std::move(c)).to_string();
}

}  // namespace

ExactRoots cubic_roots(const Rational& a3, const Rational& a2, const Rational& a1,
                       const Rational& a0) {
    std::vector<Rational> p = {a0, a1, a2, a3};
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    if (p.empty()) throw AllZero();

    ExactRoots out;
    while (p.size() >= 2) {
        if (p[0].is_zero()) {
            out.roots.emplace_back(0);
            p.erase(p.begin());
            continue;
        }
        if (p.size() == 2) {
            out.roots.push_back(-p[0] / p[1]);
            break;
        }
        std::optional<Rational> root;
        if (p.size() == 3) {
            Rational disc = p[1] * p[1] - Rational(4) * p[2] * p[0];
            if (auto s = field_sqrt(disc)) {
                out.roots.push_back((-p[1] + *s) / (Rational(2) * p[2]));
                out.roots.push_back((-p[1] - *s) / (Rational(2) * p[2]));
            } else {
                out.irrational_factor = poly_to_string(p);
            }
            break;
        }
        // cubic with nonzero constant term: integerize, then search
        BigInt l = p[0].den();
        for (int i = 1; i < 4; ++i) l = l / BigInt::gcd(l, p[i].den()) * p[i].den();
        BigInt A[4];
        for (int i = 0; i < 4; ++i) {
            Rational scaled = p[i] * Rational(l);
            A[i] = scaled.num();  // integral by construction
        }
        root = rational_root_of_cubic(A[3], A[2], A[1], A[0]);
        if (!root) {
            out.irrational_factor = poly_to_string(p);
            break;
        }
        Rational rem(0);
        while (true) {
            std::vector<Rational> q = deflate(p, *root, rem);
            if (!rem.is_zero()) break;
            out.roots.push_back(*root);
            p = std::move(q);
            if (p.size() < 2) break;
        }
    }
    return out;
}

std::vector<Numeric> cubic_roots(const Numeric& a3, const Numeric& a2, const Numeric& a1,
                                 const Numeric& a0) {
    using C = std::complex<double>;
    const double eps = std::max(std::max(a3.eps(), a2.eps()), std::max(a1.eps(), a0.eps()));
    std::vector<C> c = {a0.value(), a1.value(), a2.value(), a3.value()};
    while (!c.empty() && std::abs(c.back()) <= eps) c.pop_back();
    if (c.empty()) throw AllZero();
    const int deg = static_cast<int>(c.size()) - 1;
    if (deg == 0) return {};
    for (int i = 0; i < deg; ++i) c[i] /= c[deg];
    c[deg] = 1.0;

    // Durand-Kerner iteration on the monic polynomial
    std::vector<C> z(deg);
    C w(0.4, 0.9);
    C acc = w;
    for (int i = 0; i < deg; ++i, acc *= w) z[i] = acc;
    auto eval = [&](C x) {
        C r = 0.0;
        for (int i = deg; i >= 0; --i) r = r * x + c[i];
        return r;
    };
    for (int iter = 0; iter < 500; ++iter) {
        double worst = 0;
        for (int i = 0; i < deg; ++i) {
            C d = 1.0;
            for (int j = 0; j < deg; ++j)
                if (j != i) d *= z[i] - z[j];
            C delta = eval(z[i]) / d;
            z[i] -= delta;
            worst = std::max(worst, std::abs(delta) / (1.0 + std::abs(z[i])));
        }
        if (worst < 1e-14) break;
    }
    std::vector<Numeric> out;
    out.reserve(deg);
    for (auto& r : z) out.emplace_back(r, eps);
    return out;
}

std::optional<Rational> field_sqrt(const Rational& v) {
    if (v.is_negative()) return std::nullopt;
    BigInt rn, rd;
    if (!v.num().perfect_square(rn) || !v.den().perfect_square(rd)) return std::nullopt;
    return Rational(rn, rd);
}

std::optional<Numeric> field_sqrt(const Numeric& v) {
    return Numeric(std::sqrt(v.value()), v.eps());
}

}  // namespace alg2
