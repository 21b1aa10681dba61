#ifndef ALG2_TENSOR_HPP
#define ALG2_TENSOR_HPP

#include <array>
#include <string>

#include "alg2/errors.hpp"

namespace alg2 {

template <class K>
struct Vec2 {
    K x{}, y{};

    bool is_zero() const { return x.is_zero() && y.is_zero(); }
    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(const K& s) const { return {x * s, y * s}; }
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Vec2& o) const { return !(*this == o); }
};

template <class K>
K det2(const Vec2<K>& a, const Vec2<K>& b) {
    return a.x * b.y - a.y * b.x;
}

/// 2x2 matrix; column i holds the image of basis vector e_i.
template <class K>
struct Mat2 {
    K m[2][2];  // m[row][col]

    static Mat2 identity() { return {{{K(1), K(0)}, {K(0), K(1)}}}; }
    static Mat2 from_columns(const Vec2<K>& c0, const Vec2<K>& c1) {
        return {{{c0.x, c1.x}, {c0.y, c1.y}}};
    }
    static Mat2 diag(const K& a, const K& b) { return {{{a, K(0)}, {K(0), b}}}; }
    static Mat2 swap_basis() { return {{{K(0), K(1)}, {K(1), K(0)}}}; }

    Vec2<K> column(int i) const { return {m[0][i], m[1][i]}; }
    K det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

    Mat2 inverse() const {
        K d = det();
        if (d.is_zero()) throw SingularMatrix();
        return {{{m[1][1] / d, K(0) - m[0][1] / d}, {K(0) - m[1][0] / d, m[0][0] / d}}};
    }

    Mat2 operator*(const Mat2& o) const {
        Mat2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j];
        return r;
    }

    Vec2<K> operator*(const Vec2<K>& v) const {
        return {m[0][0] * v.x + m[0][1] * v.y, m[1][0] * v.x + m[1][1] * v.y};
    }

    bool operator==(const Mat2& o) const {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (m[i][j] != o.m[i][j]) return false;
        return true;
    }
};

/// The 2x2x2 structure-constant tensor: e_i e_j = c[i][j][0] e1 + c[i][j][1] e2.
template <class K>
struct Tensor {
    K c[2][2][2];

    static Tensor zero() {
        Tensor t;
        for (auto& plane : t.c)
            for (auto& row : plane)
                for (auto& v : row) v = K(0);
        return t;
    }

    bool is_zero() const {
        for (auto& plane : c)
            for (auto& row : plane)
                for (auto& v : row)
                    if (!v.is_zero()) return false;
        return true;
    }

    bool operator==(const Tensor& o) const {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    if (c[i][j][k] != o.c[i][j][k]) return false;
        return true;
    }
    bool operator!=(const Tensor& o) const { return !(*this == o); }

    Vec2<K> product(int i, int j) const { return {c[i][j][0], c[i][j][1]}; }

    std::string to_string() const {
        std::string s;
        const char* names[2][2] = {{"e1e1", "e1e2"}, {"e2e1", "e2e2"}};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                if (!s.empty()) s += ", ";
                s += std::string(names[i][j]) + "=(" + c[i][j][0].to_string() + "," +
                     c[i][j][1].to_string() + ")";
            }
        return s;
    }
};

/// Bilinear extension of the multiplication table.
template <class K>
Vec2<K> multiply(const Tensor<K>& t, const Vec2<K>& u, const Vec2<K>& v) {
    Vec2<K> r{K(0), K(0)};
    K uu[2] = {u.x, u.y};
    K vv[2] = {v.x, v.y};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            K s = uu[i] * vv[j];
            r.x += s * t.c[i][j][0];
            r.y += s * t.c[i][j][1];
        }
    return r;
}

/// The GL(V) action (g * mu)(x, y) = g mu(g^-1 x, g^-1 y).
template <class K>
Tensor<K> act(const Mat2<K>& g, const Tensor<K>& t) {
    Mat2<K> h = g.inverse();
    Tensor<K> r = Tensor<K>::zero();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Vec2<K> w = multiply(t, h.column(i), h.column(j));
            Vec2<K> gw = g * w;
            r.c[i][j][0] = gw.x;
            r.c[i][j][1] = gw.y;
        }
    return r;
}

/// Structure constants of t in the basis given by the columns of m.
template <class K>
Tensor<K> in_basis(const Tensor<K>& t, const Mat2<K>& m) {
    return act(m.inverse(), t);
}

/// Transformation rule (1) of a closed upper invariant set:
/// c~_ij^k = (a_i a_j / a_k) c_ij^k.
template <class K>
Tensor<K> scaling_transform(const Tensor<K>& t, const K& a1, const K& a2) {
    if (a1.is_zero() || a2.is_zero()) throw InvalidInput("scaling_transform: zero scale");
    K a[2] = {a1, a2};
    Tensor<K> r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) r.c[i][j][k] = a[i] * a[j] / a[k] * t.c[i][j][k];
    return r;
}

/// Transformation rule (2), implemented exactly from the displayed formulas.
template <class K>
Tensor<K> shear_transform(const Tensor<K>& t, const K& a) {
    auto c = [&](int i, int j, int k) { return t.c[i - 1][j - 1][k - 1]; };
    Tensor<K> r;
    r.c[0][0][0] = c(1, 1, 1) + a * (c(1, 2, 1) + c(2, 1, 1)) + a * a * c(2, 2, 1);
    r.c[1][0][0] = c(2, 1, 1) + a * c(2, 2, 1);
    r.c[0][1][0] = c(1, 2, 1) + a * c(2, 2, 1);
    r.c[1][1][0] = c(2, 2, 1);
    r.c[0][0][1] = c(1, 1, 2) + a * (c(1, 2, 2) + c(2, 1, 2) - c(1, 1, 1)) +
                   a * a * (c(2, 2, 2) - c(1, 2, 1) - c(2, 1, 1)) - a * a * a * c(2, 2, 1);
    r.c[1][0][1] = c(2, 1, 2) + a * (c(2, 2, 2) - c(2, 1, 1)) - a * a * c(2, 2, 1);
    r.c[0][1][1] = c(1, 2, 2) + a * (c(2, 2, 2) - c(1, 2, 1)) - a * a * c(2, 2, 1);
    r.c[1][1][1] = c(2, 2, 2) - a * c(2, 2, 1);
    return r;
}

}  // namespace alg2

#endif
