#ifndef ALG2_INVARIANTS_HPP
#define ALG2_INVARIANTS_HPP

#include <algorithm>
#include <vector>

#include "alg2/roots.hpp"
#include "alg2/tensor.hpp"

namespace alg2 {

/// Coefficients of the dependence cubic p(t) = det(x_t^2, x_t) for
/// x_t = e1 + t e2, highest degree first:
///   c22^1 t^3 + (c12^1+c21^1-c22^2) t^2 + (c11^1-c12^2-c21^2) t - c11^2.
template <class K>
std::array<K, 4> dependence_cubic(const Tensor<K>& t) {
    auto c = [&](int i, int j, int k) { return t.c[i - 1][j - 1][k - 1]; };
    return {c(2, 2, 1), c(1, 2, 1) + c(2, 1, 1) - c(2, 2, 2),
            c(1, 1, 1) - c(1, 2, 2) - c(2, 1, 2), K(0) - c(1, 1, 2)};
}

/// True iff x and x^2 are linearly dependent for every x (equivalently the
/// dependence cubic vanishes identically and e2 is a dependent direction).
template <class K>
bool all_directions_dependent(const Tensor<K>& t) {
    auto p = dependence_cubic(t);
    return p[0].is_zero() && p[1].is_zero() && p[2].is_zero() && p[3].is_zero();
}

/// The directions <v> with v and v^2 linearly dependent: at most three
/// lines, or every line (`all`). Direction vectors are normalized to
/// (1, t) or (0, 1).
template <class K>
struct DependentDirections {
    bool all = false;
    std::vector<Vec2<K>> dirs;  // empty when all == true
};

template <class K>
DependentDirections<K> dependent_directions(const Tensor<K>& t) {
    DependentDirections<K> out;
    if (all_directions_dependent(t)) {
        out.all = true;
        return out;
    }
    auto p = dependence_cubic(t);
    if (p[0].is_zero()) out.dirs.push_back({K(0), K(1)});
    bool nonconst = !p[0].is_zero() || !p[1].is_zero() || !p[2].is_zero();
    if (nonconst || !p[3].is_zero()) {
        if (nonconst) {
            auto roots = cubic_roots_or_throw<K>(p[0], p[1], p[2], p[3]);
            for (const auto& r : roots) {
                Vec2<K> v{K(1), r};
                bool seen = false;
                for (const auto& w : out.dirs) seen = seen || det2(v, w).is_zero();
                if (!seen) out.dirs.push_back(v);
            }
        }
    }
    return out;
}

/// Nonzero idempotents: finitely many points, or an affine line of them.
template <class K>
struct IdempotentSet {
    bool line = false;
    std::vector<Vec2<K>> points;  // the finite case (at most 3)
    Vec2<K> line_point{}, line_dir{};  // the line case: { line_point + s * line_dir }
};

/// 2-nil lines, reported by kind and (in the finite cases) spanning vectors.
template <class K>
struct TwoNilLines {
    enum Kind { Empty, One, Two, All } kind = Empty;
    std::vector<Vec2<K>> dirs;
};

template <class K>
struct DependenceAnalysis {
    IdempotentSet<K> idempotents;
    TwoNilLines<K> two_nil;
};

/// Splits the dependent directions into idempotent carriers and 2-nil lines:
/// on a dependent line, v^2 = s v; s = 0 gives a 2-nil line and s != 0 gives
/// the idempotent v/s.
template <class K>
DependenceAnalysis<K> analyze_dependence(const Tensor<K>& t) {
    DependenceAnalysis<K> out;
    if (all_directions_dependent(t)) {
        // v^2 = L(v) v for the linear form L = (c11^1, c22^2)
        K u = t.c[0][0][0];
        K v = t.c[1][1][1];
        if (u.is_zero() && v.is_zero()) {
            out.two_nil.kind = TwoNilLines<K>::All;
            return out;
        }
        out.idempotents.line = true;
        if (!u.is_zero()) {
            out.idempotents.line_point = {K(1) / u, K(0)};
        } else {
            out.idempotents.line_point = {K(0), K(1) / v};
        }
        out.idempotents.line_dir = {v, K(0) - u};
        out.two_nil.kind = TwoNilLines<K>::One;
        out.two_nil.dirs.push_back({v, K(0) - u});
        return out;
    }
    auto dd = dependent_directions(t);
    for (const auto& dir : dd.dirs) {
        Vec2<K> w = multiply(t, dir, dir);
        K s = !dir.x.is_zero() ? w.x / dir.x : w.y / dir.y;
        if (s.is_zero()) {
            out.two_nil.dirs.push_back(dir);
        } else {
            out.idempotents.points.push_back(dir * (K(1) / s));
        }
    }
    switch (out.two_nil.dirs.size()) {
        case 0: out.two_nil.kind = TwoNilLines<K>::Empty; break;
        case 1: out.two_nil.kind = TwoNilLines<K>::One; break;
        default: out.two_nil.kind = TwoNilLines<K>::Two; break;
    }
    return out;
}

template <class K>
IdempotentSet<K> idempotents(const Tensor<K>& t) {
    return analyze_dependence(t).idempotents;
}

template <class K>
TwoNilLines<K> two_nil_lines(const Tensor<K>& t) {
    return analyze_dependence(t).two_nil;
}

// ---------------------------------------------------------------------------
// Exact / numeric rank and the linear-algebra invariants built on it.
// ---------------------------------------------------------------------------

template <class K>
double pivot_weight(const K&) {
    return 1.0;  // exact backends: any nonzero pivot serves
}
inline double pivot_weight(const Numeric& v) { return std::abs(v.value()); }

/// Rank by fraction-free (Bareiss) elimination; the numeric instantiation
/// picks the largest-modulus pivot and relies on the entries' tolerances
/// for the zero tests.
template <class K>
int rank(std::vector<std::vector<K>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    K prev = K(1);
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = rows;
        double best = 0;
        for (std::size_t i = r; i < rows; ++i) {
            if (m[i][col].is_zero()) continue;
            double w = pivot_weight(m[i][col]);
            if (piv == rows || w > best) {
                piv = i;
                best = w;
            }
        }
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = cols; j-- > col;)
                m[i][j] = (m[r][col] * m[i][j] - m[i][col] * m[r][j]) / prev;
        }
        prev = m[r][col];
        ++r;
    }
    return static_cast<int>(r);
}

/// dim Der(A): solution-space dimension of D(e_i e_j) = D(e_i) e_j + e_i D(e_j),
/// eight linear equations in the four matrix entries d_lk (D e_k = sum_l d_lk e_l).
template <class K>
int derivation_dimension(const Tensor<K>& t) {
    std::vector<std::vector<K>> m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int l = 0; l < 2; ++l) {
                // coefficient of d_{row, col}: unknown index 2*row + col
                std::vector<K> eq(4, K(0));
                for (int k = 0; k < 2; ++k) {
                    eq[2 * l + k] += t.c[i][j][k];            // lhs: sum_k c_ij^k d_lk
                    eq[2 * k + i] -= t.c[k][j][l];            // rhs: d_ki c_kj^l
                    eq[2 * k + j] -= t.c[i][k][l];            // rhs: d_kj c_ik^l
                }
                m.push_back(std::move(eq));
            }
    return 4 - rank(std::move(m));
}

/// dim A^2 = dim span{ e_i e_j }.
template <class K>
int square_dimension(const Tensor<K>& t) {
    std::vector<std::vector<K>> m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m.push_back({t.c[i][j][0], t.c[i][j][1]});
    return rank(std::move(m));
}

/// dim { x : xA = Ax = 0 }.
template <class K>
int annihilator_dimension(const Tensor<K>& t) {
    std::vector<std::vector<K>> m;
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
            m.push_back({t.c[0][j][k], t.c[1][j][k]});  // (x e_j)_k = 0
            m.push_back({t.c[j][0][k], t.c[j][1][k]});  // (e_j x)_k = 0
        }
    return 2 - rank(std::move(m));
}

}  // namespace alg2

#endif
