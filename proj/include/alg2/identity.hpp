#ifndef ALG2_IDENTITY_HPP
#define ALG2_IDENTITY_HPP

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "alg2/errors.hpp"
#include "alg2/tensor.hpp"

namespace alg2 {

/// A non-associative term in the variables x, y, z (or the zero term).
struct Term {
    enum Kind { Var, Mul, Zero } kind = Zero;
    int var = 0;  // 0=x, 1=y, 2=z
    std::shared_ptr<Term> lhs, rhs;

    static Term variable(int v) { return {Var, v, nullptr, nullptr}; }
    static Term zero() { return {Zero, 0, nullptr, nullptr}; }
    static Term mul(Term a, Term b) {
        Term t;
        t.kind = Mul;
        t.lhs = std::make_shared<Term>(std::move(a));
        t.rhs = std::make_shared<Term>(std::move(b));
        return t;
    }

    int max_var() const {
        switch (kind) {
            case Var: return var;
            case Mul: return std::max(lhs->max_var(), rhs->max_var());
            default: return -1;
        }
    }
};

/// A formal equality of two terms, e.g. (xy)x = x(yx).
struct TermIdentity {
    Term lhs, rhs;
    std::string source;  // the text it was parsed from
};

/// Parses "lhs = rhs" where terms use variables x,y,z, products written by
/// juxtaposition or '*', parentheses, and the literal 0.
TermIdentity parse_identity(const std::string& text);

namespace detail {

// Sparse polynomial in the six formal coordinates (x1,x2,y1,y2,z1,z2).
template <class K>
struct FormalPoly {
    using Mono = std::array<unsigned char, 6>;
    std::map<Mono, K> terms;

    static FormalPoly coordinate(int idx) {
        FormalPoly p;
        Mono m{};
        m[idx] = 1;
        p.terms[m] = K(1);
        return p;
    }

    void add(const Mono& m, const K& c) {
        auto it = terms.find(m);
        if (it == terms.end()) {
            if (!c.is_zero()) terms[m] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    FormalPoly operator+(const FormalPoly& o) const {
        FormalPoly r = *this;
        for (const auto& [m, c] : o.terms) r.add(m, c);
        return r;
    }
    FormalPoly operator-(const FormalPoly& o) const {
        FormalPoly r = *this;
        for (const auto& [m, c] : o.terms) r.add(m, K(0) - c);
        return r;
    }
    FormalPoly operator*(const FormalPoly& o) const {
        FormalPoly r;
        for (const auto& [m1, c1] : terms)
            for (const auto& [m2, c2] : o.terms) {
                Mono m{};
                for (int i = 0; i < 6; ++i) m[i] = m1[i] + m2[i];
                r.add(m, c1 * c2);
            }
        return r;
    }
    FormalPoly operator*(const K& s) const {
        FormalPoly r;
        for (const auto& [m, c] : terms) r.add(m, c * s);
        return r;
    }
    bool is_zero() const { return terms.empty(); }
};

template <class K>
using FormalVec = std::array<FormalPoly<K>, 2>;

template <class K>
FormalVec<K> eval_term(const Term& t, const Tensor<K>& mu) {
    switch (t.kind) {
        case Term::Zero: return {FormalPoly<K>{}, FormalPoly<K>{}};
        case Term::Var:
            return {FormalPoly<K>::coordinate(2 * t.var), FormalPoly<K>::coordinate(2 * t.var + 1)};
        case Term::Mul: {
            FormalVec<K> u = eval_term(*t.lhs, mu);
            FormalVec<K> v = eval_term(*t.rhs, mu);
            FormalVec<K> r;
            for (int k = 0; k < 2; ++k) {
                FormalPoly<K> acc;
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) acc = acc + (u[i] * v[j]) * mu.c[i][j][k];
                r[k] = acc;
            }
            return r;
        }
    }
    return {};
}

}  // namespace detail

/// Substitutes generic vectors with formal coordinates, expands both sides
/// and compares all coefficients.
template <class K>
bool satisfies_identity(const Tensor<K>& mu, const TermIdentity& id) {
    auto l = detail::eval_term(id.lhs, mu);
    auto r = detail::eval_term(id.rhs, mu);
    return (l[0] - r[0]).is_zero() && (l[1] - r[1]).is_zero();
}

template <class K>
bool satisfies_identities(const Tensor<K>& mu, const std::vector<TermIdentity>& ids) {
    for (const auto& id : ids)
        if (!satisfies_identity(mu, id)) return false;
    return true;
}

}  // namespace alg2

#endif
