#pragma once

#include <utility>

#include "conegeo/linalg.hpp"

namespace conegeo {

/* Symmetric n x n matrix stored as its upper triangle, row-major:
 * (0,0) (0,1) ... (0,n-1) (1,1) ... so dimension n(n+1)/2. The coordinate
 * vector doubles as the flat representation used by Subspace and the
 * polyhedral layer; pair it with sym_weights(n) so that the flat inner
 * product equals the trace pairing A . B = sum_ij A_ij B_ij. */
struct SymMat {
    int n = 0;
    QVec a;

    SymMat() = default;
    explicit SymMat(int size) : n(size), a(size * (size + 1) / 2, Rat(0)) {}
    SymMat(int size, QVec coords) : n(size), a(std::move(coords)) {
        assert((int)a.size() == size * (size + 1) / 2);
    }

    static int coord_dim(int n) { return n * (n + 1) / 2; }

    int index(int i, int j) const {
        if (i > j) std::swap(i, j);
        assert(0 <= i && j < n);
        return i * n - i * (i - 1) / 2 + (j - i);
    }

    const Rat& at(int i, int j) const { return a[index(i, j)]; }
    Rat& at(int i, int j) { return a[index(i, j)]; }

    bool operator==(const SymMat& o) const { return n == o.n && a == o.a; }
    bool operator!=(const SymMat& o) const { return !(*this == o); }

    bool is_zero() const { return conegeo::is_zero(a); }

    const QVec& coords() const { return a; }

    Mat dense() const {
        Mat m(n, qvec_zero(n));
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) m[i][j] = m[j][i] = at(i, j);
        return m;
    }

    static SymMat from_dense(const Mat& m) {
        int n = (int)m.size();
        SymMat s(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                assert(m[i][j] == m[j][i]);
                s.at(i, j) = m[i][j];
            }
        return s;
    }
};

inline QVec sym_weights(int n) {
    QVec w(SymMat::coord_dim(n));
    SymMat probe(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) w[probe.index(i, j)] = (i == j) ? 1 : 2;
    return w;
}

inline Rat sym_inner(const SymMat& x, const SymMat& y) {
    assert(x.n == y.n);
    Rat s(0);
    for (int i = 0; i < x.n; ++i) {
        s += x.at(i, i) * y.at(i, i);
        for (int j = i + 1; j < x.n; ++j) s += 2 * x.at(i, j) * y.at(i, j);
    }
    return s;
}

inline SymMat sym_add(const SymMat& x, const SymMat& y) {
    assert(x.n == y.n);
    return SymMat(x.n, add(x.a, y.a));
}

inline SymMat sym_sub(const SymMat& x, const SymMat& y) {
    assert(x.n == y.n);
    return SymMat(x.n, sub(x.a, y.a));
}

inline SymMat sym_scale(const Rat& c, const SymMat& x) { return SymMat(x.n, scale(c, x.a)); }

inline SymMat sym_identity(int n) {
    SymMat s(n);
    for (int i = 0; i < n; ++i) s.at(i, i) = 1;
    return s;
}

/* E_ii for i == j; the symmetrized unit (e_i e_j^T + e_j e_i^T) has ones in
 * both off-diagonal slots, which here is a single coordinate set to 1. */
inline SymMat sym_unit(int n, int i, int j) {
    SymMat s(n);
    s.at(i, j) = 1;
    return s;
}

/* T^T X T for a general (not necessarily square) T: congruence transport of
 * the quadratic form. T has X.n rows; the result is square of T's column
 * count. */
inline SymMat congruence(const SymMat& x, const Mat& t) {
    assert(!t.empty() && (int)t.size() == x.n);
    int m = (int)t[0].size();
    Mat xt = mat_mul(x.dense(), t);
    Mat res = mat_mul(transpose(t), xt);
    SymMat out(m);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) out.at(i, j) = res[i][j];
    return out;
}

/* Leading principal block of size k. */
inline SymMat leading_block(const SymMat& x, int k) {
    assert(k <= x.n);
    SymMat b(k);
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) b.at(i, j) = x.at(i, j);
    return b;
}

/* Trailing principal block on indices k..n-1. */
inline SymMat trailing_block(const SymMat& x, int k) {
    int m = x.n - k;
    SymMat b(m);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) b.at(i, j) = x.at(k + i, k + j);
    return b;
}

/* Embed a k x k block into the leading corner of an n x n zero matrix. */
inline SymMat embed_leading(const SymMat& b, int n) {
    assert(b.n <= n);
    SymMat x(n);
    for (int i = 0; i < b.n; ++i)
        for (int j = i; j < b.n; ++j) x.at(i, j) = b.at(i, j);
    return x;
}

inline SymMat rank_one(int n, const QVec& v) {
    assert((int)v.size() == n);
    SymMat s(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) s.at(i, j) = v[i] * v[j];
    return s;
}

inline QVec sym_apply(const SymMat& x, const QVec& v) {
    assert((int)v.size() == x.n);
    QVec r = qvec_zero(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j) r[i] += x.at(i, j) * v[j];
    return r;
}

}  // namespace conegeo
