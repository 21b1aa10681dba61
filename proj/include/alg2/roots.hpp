#ifndef ALG2_ROOTS_HPP
#define ALG2_ROOTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "alg2/errors.hpp"
#include "alg2/scalar.hpp"

namespace alg2 {

/// Result of exact root finding: the rational roots (with multiplicity) and,
/// when the polynomial has further roots outside Q, the offending factor.
struct ExactRoots {
    std::vector<Rational> roots;
    std::string irrational_factor;  // empty when all roots are rational
    bool complete() const { return irrational_factor.empty(); }
};

/// All rational roots of a3 t^3 + a2 t^2 + a1 t + a0, with multiplicity.
/// Throws AllZero when every coefficient vanishes.
ExactRoots cubic_roots(const Rational& a3, const Rational& a2, const Rational& a1,
                       const Rational& a0);

/// All complex roots (degree many, with multiplicity) on the numeric backend.
std::vector<Numeric> cubic_roots(const Numeric& a3, const Numeric& a2, const Numeric& a1,
                                 const Numeric& a0);

/// Square root in the backend field. Exact: nullopt when irrational or
/// negative. Numeric: principal square root, always present.
std::optional<Rational> field_sqrt(const Rational& v);
std::optional<Numeric> field_sqrt(const Numeric& v);

/// Backend-uniform wrappers used by the classifier: the exact instantiation
/// throws NotRepresentable where the numeric one always produces values.
template <class K>
std::vector<K> cubic_roots_or_throw(const K& a3, const K& a2, const K& a1, const K& a0);

template <>
inline std::vector<Rational> cubic_roots_or_throw(const Rational& a3, const Rational& a2,
                                                  const Rational& a1, const Rational& a0) {
    ExactRoots r = cubic_roots(a3, a2, a1, a0);
    if (!r.complete()) throw NotRepresentable(r.irrational_factor);
    return r.roots;
}

template <>
inline std::vector<Numeric> cubic_roots_or_throw(const Numeric& a3, const Numeric& a2,
                                                 const Numeric& a1, const Numeric& a0) {
    return cubic_roots(a3, a2, a1, a0);
}

template <class K>
K sqrt_or_throw(const K& v, const std::string& context) {
    auto r = field_sqrt(v);
    if (!r) throw NotRepresentable("x^2 - (" + v.to_string() + ")  [" + context + "]");
    return *r;
}

}  // namespace alg2

#endif
