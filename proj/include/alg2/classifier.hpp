#ifndef ALG2_CLASSIFIER_HPP
#define ALG2_CLASSIFIER_HPP

#include <algorithm>
#include <array>
#include <utility>
#include <vector>

#include "alg2/families.hpp"
#include "alg2/invariants.hpp"
#include "alg2/roots.hpp"
#include "alg2/scalar.hpp"
#include "alg2/tensor.hpp"

namespace alg2 {

enum class ClassTag { A, B, C, D, E, Trivial };

inline const char* class_tag_name(ClassTag t) {
    switch (t) {
        case ClassTag::A: return "A";
        case ClassTag::B: return "B";
        case ClassTag::C: return "C";
        case ClassTag::D: return "D";
        case ClassTag::E: return "E";
        case ClassTag::Trivial: return "TRIVIAL";
    }
    return "?";
}

template <class K>
struct Classification {
    CanonicalLabel<K> label;
    Mat2<K> witness;  // act(witness, input) reproduces the canonical tensor
};

namespace detail {

template <class K>
void require(bool cond, const char* what) {
    if (!cond) throw Error(std::string("classifier inconsistency: ") + what);
}

template <class K>
bool vec_less(const Vec2<K>& a, const Vec2<K>& b) {
    if (a.x != b.x) return total_less(a.x, b.x);
    if (a.y != b.y) return total_less(a.y, b.y);
    return false;
}

/// The total-order-least standard basis vector independent of v.
template <class K>
Vec2<K> independent_standard(const Vec2<K>& v) {
    Vec2<K> e2{K(0), K(1)};
    if (!det2(e2, v).is_zero()) return e2;
    return {K(1), K(0)};
}

template <class K>
struct ClassifyState {
    Tensor<K> current;
    Mat2<K> basis = Mat2<K>::identity();  // columns in original coordinates

    explicit ClassifyState(const Tensor<K>& t) : current(t) {}

    void change(const Mat2<K>& next) {
        basis = basis * next;
        current = in_basis(current, next);
    }
    void change_columns(const Vec2<K>& c0, const Vec2<K>& c1) {
        change(Mat2<K>::from_columns(c0, c1));
    }
    K c(int i, int j, int k) const { return current.c[i - 1][j - 1][k - 1]; }
};

}  // namespace detail

/// The disjoint class of Corollary "classes", decided by the idempotent and
/// 2-nil structure.
template <class K>
ClassTag class_of(const Tensor<K>& t) {
    if (t.is_zero()) return ClassTag::Trivial;
    auto a = analyze_dependence(t);
    std::size_t idem = a.idempotents.line ? 2 : a.idempotents.points.size();
    if (idem == 0)
        return a.two_nil.kind == TwoNilLines<K>::One ? ClassTag::A : ClassTag::B;
    if (idem == 1)
        return a.two_nil.kind == TwoNilLines<K>::Empty ? ClassTag::C : ClassTag::D;
    return ClassTag::E;
}

template <class K>
Classification<K> classify(const Tensor<K>& input,
                           const RepresentativeConvention<K>& conv = {}) {
    using detail::require;
    const K zero(0), one(1);

    if (input.is_zero())
        return {CanonicalLabel<K>{Family::Trivial, {}}, Mat2<K>::identity()};

    auto analysis = analyze_dependence(input);
    detail::ClassifyState<K> st(input);
    CanonicalLabel<K> label;

    auto sorted = [&](std::vector<Vec2<K>> v) {
        std::sort(v.begin(), v.end(), detail::vec_less<K>);
        return v;
    };

    const bool idem_line = analysis.idempotents.line;
    const auto idem_pts = sorted(analysis.idempotents.points);
    const auto nil_dirs = sorted(analysis.two_nil.dirs);
    const std::size_t idem_count = idem_line ? 2 : idem_pts.size();

    if (idem_count >= 2) {
        // ---- class E: basis of two independent idempotents
        Vec2<K> u1, u2;
        if (idem_line) {
            u1 = analysis.idempotents.line_point;
            u2 = u1 + analysis.idempotents.line_dir;
        } else {
            u1 = idem_pts[0];
            u2 = idem_pts[1];
        }
        st.change_columns(u1, u2);
        require<K>(st.c(1, 1, 1).is_one() && st.c(1, 1, 2).is_zero() &&
                       st.c(2, 2, 1).is_zero() && st.c(2, 2, 2).is_one(),
                   "E pre-normalization did not yield two basis idempotents");
        K a = st.c(1, 2, 1), b = st.c(1, 2, 2), g = st.c(2, 1, 1), d = st.c(2, 1, 2);
        auto gi = gamma_invariants(a, b, g, d);
        const bool t1 = in_T(gi.C1), t2 = in_T(gi.C2);

        if (t1 && t2 && gi.C1 == gi.C2) {
            label = {Family::E5, {b}};
        } else if (t1 && t2) {
            // two distinct idempotent-line invariants: lands on E4 via the
            // a,b from the Eclass line case
            K ca = a / (a - d);
            K cb = (one - a) / (d - a);
            st.change_columns({ca, one - ca}, {cb, one - cb});
            label = {Family::E4, {}};
        } else if (t1 && !t2) {
            st.change(Mat2<K>::swap_basis());
            label = {Family::E2, {st.c(2, 1, 1), st.c(1, 2, 2), st.c(2, 1, 2)}};
        } else if (!t1 && t2) {
            label = {Family::E2, {st.c(2, 1, 1), st.c(1, 2, 2), st.c(2, 1, 2)}};
        } else if (gi.D.is_zero()) {
            K tau = a + g;
            require<K>(!tau.is_zero() && !tau.is_one(), "E3 scale must avoid {0,1}");
            bool use_swap = conv.inverse_rep(tau) != tau;
            if (!use_swap && (tau + one).is_zero()) {
                // both scales are the representative -1: order the pair
                use_swap = total_less(b * (a + g), g * (b + d));
            }
            if (use_swap) {
                st.change(Mat2<K>::swap_basis());
                label = {Family::E3, {b * (a + g), g * (b + d), b + d}};
            } else {
                label = {Family::E3, {g * (b + d), b * (a + g), tau}};
            }
        } else {
            // generic E1: realize the S3 permutation that lands in V~
            PairTriple<K> triple{gi.C1, gi.C2, *gi.C3};
            PairTriple<K> rep = conv.v_rep(triple);
            const Vec2<K> e3{(a + g - one) / gi.D, (b + d - one) / gi.D};
            const std::array<Vec2<K>, 3> pts{Vec2<K>{one, zero}, Vec2<K>{zero, one}, e3};
            static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                            {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
            bool done = false;
            for (const auto& p : perms) {
                PairTriple<K> permuted{triple[p[0]], triple[p[1]], triple[p[2]]};
                if (permuted == rep) {
                    st.change_columns(pts[p[0]], pts[p[1]]);
                    done = true;
                    break;
                }
            }
            require<K>(done, "no permutation reaches the V~ representative");
            label = {Family::E1,
                     {st.c(1, 2, 1), st.c(1, 2, 2), st.c(2, 1, 1), st.c(2, 1, 2)}};
        }
    } else if (idem_count == 1) {
        if (analysis.two_nil.kind == TwoNilLines<K>::Empty) {
            // ---- class C: unique idempotent as e2, no 2-nil elements
            st.change_columns(detail::independent_standard(idem_pts[0]), idem_pts[0]);
            require<K>((st.c(1, 2, 1) + st.c(2, 1, 1)).is_one() &&
                           st.c(1, 1, 1) == st.c(1, 2, 2) + st.c(2, 1, 2) &&
                           !st.c(1, 1, 2).is_zero(),
                       "class C normalization conditions failed");
            K sq = sqrt_or_throw(one / st.c(1, 1, 2), "class C scale");
            K q = st.c(1, 2, 2) - st.c(1, 1, 1) * st.c(2, 1, 1);
            if (conv.sign_rep(sq * q) != sq * q) sq = zero - sq;
            st.change_columns({sq, zero - sq * st.c(1, 1, 1)}, {zero, one});
            label = {Family::C, {st.c(2, 1, 1), st.c(1, 2, 2)}};
        } else {
            // ---- class D: unique idempotent as e1, a 2-nil as e2
            st.change_columns(idem_pts[0], nil_dirs[0]);
            K s = st.c(1, 2, 1) + st.c(2, 1, 1);
            if (!s.is_zero()) {
                require<K>((st.c(1, 2, 2) + st.c(2, 1, 2)).is_zero(),
                           "class D1 case needs c12^2 + c21^2 = 0");
                std::pair<K, K> p1{st.c(2, 1, 1) / s, st.c(1, 2, 2)};
                if (conv.u_rep(p1) == p1)
                    st.change_columns({one, zero}, {zero, one / s});
                else
                    st.change_columns({one, zero}, {one, zero - one / s});
                label = {Family::D1, {st.c(2, 1, 1), st.c(1, 2, 2)}};
            } else if (!st.c(1, 2, 1).is_zero()) {
                st.change_columns({one, zero}, {zero, one / st.c(1, 2, 1)});
                label = {Family::D3, {st.c(1, 2, 2), st.c(2, 1, 2)}};
            } else {
                label = {Family::D2, {st.c(1, 2, 2), st.c(2, 1, 2)}};
            }
        }
    } else if (analysis.two_nil.kind == TwoNilLines<K>::One) {
        // ---- class A: the unique 2-nil line as e2
        st.change_columns(detail::independent_standard(nil_dirs[0]), nil_dirs[0]);
        require<K>((st.c(1, 2, 1) + st.c(2, 1, 1)).is_zero() &&
                       st.c(1, 1, 1) == st.c(1, 2, 2) + st.c(2, 1, 2) &&
                       !st.c(1, 1, 2).is_zero(),
                   "class A normalization conditions failed");
        if (st.c(1, 2, 1).is_zero()) {
            K c111 = st.c(1, 1, 1), c112 = st.c(1, 1, 2), c122 = st.c(1, 2, 2);
            if (!c111.is_zero()) {
                st.change_columns({one / c111, zero}, {zero, c112 / (c111 * c111)});
                label = {Family::A1, {st.c(1, 2, 2)}};
            } else if (!c122.is_zero()) {
                st.change_columns({one / c122, zero}, {zero, c112 / (c122 * c122)});
                label = {Family::A2, {}};
            } else {
                st.change_columns({one, zero}, {zero, c112});
                label = {Family::A3, {}};
            }
        } else {
            K sq = sqrt_or_throw(one / (st.c(1, 1, 2) * st.c(1, 2, 1)), "class A4 scale");
            if (conv.sign_rep(st.c(1, 1, 1) * sq) != st.c(1, 1, 1) * sq) sq = zero - sq;
            st.change_columns({sq, zero - sq * st.c(2, 1, 2) / st.c(1, 2, 1)},
                              {zero, one / st.c(1, 2, 1)});
            label = {Family::A4, {st.c(1, 1, 1)}};
        }
    } else {
        // ---- class B: two independent 2-nil elements (or anticommutative)
        if (analysis.two_nil.kind == TwoNilLines<K>::All) {
            Vec2<K> v = input.product(0, 1);
            require<K>(!v.is_zero(), "nonzero anticommutative algebra has e1e2 != 0");
            Vec2<K> w = detail::independent_standard(v);
            st.change_columns(w * (one / det2(w, v)), v);
            label = {Family::B3, {}};
        } else {
            require<K>(nil_dirs.size() >= 2, "class B needs two 2-nil lines");
            st.change_columns(nil_dirs[0], nil_dirs[1]);
            if (!(st.c(1, 2, 2) + st.c(2, 1, 2)).is_zero())
                st.change(Mat2<K>::swap_basis());
            require<K>((st.c(1, 2, 2) + st.c(2, 1, 2)).is_zero(),
                       "class B normalization: c12^2 + c21^2 = 0 after swap");
            K t0 = st.c(1, 2, 1) + st.c(2, 1, 1);
            require<K>(!t0.is_zero(), "non-anticommutative class B has c12^1 + c21^1 != 0");
            if (!st.c(1, 2, 2).is_zero()) {
                st.change_columns({one / st.c(1, 2, 2), zero}, {zero, one / t0});
                label = {Family::B1, {st.c(2, 1, 1)}};
            } else {
                st.change_columns({one, zero}, {zero, one / t0});
                label = {Family::B2, {st.c(2, 1, 1)}};
            }
        }
    }

    if (auto issue = label_domain_violation(label, conv))
        throw Error("classifier produced an out-of-domain label " + label.to_string() + ": " +
                    issue->why);
    if (!(st.current == canonical_tensor(label)))
        throw Error("classifier witness does not reproduce the canonical tensor for " +
                    label.to_string());
    return {label, st.basis.inverse()};
}

template <class K>
bool is_isomorphic(const Tensor<K>& x, const Tensor<K>& y,
                   const RepresentativeConvention<K>& conv = {}) {
    return classify(x, conv).label == classify(y, conv).label;
}

/// Re-classifies the label's own canonical tensor; fixes labels whose
/// parameters were given in a non-representative form.
template <class K>
CanonicalLabel<K> normalize_label(const CanonicalLabel<K>& raw,
                                  const RepresentativeConvention<K>& conv = {}) {
    return classify(canonical_tensor(raw), conv).label;
}

}  // namespace alg2

#endif
