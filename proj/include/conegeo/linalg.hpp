#pragma once

#include <algorithm>
#include <cassert>
#include <numeric>
#include <vector>

#include "conegeo/rational.hpp"

namespace conegeo {

using QVec = std::vector<Rat>;
using Mat = std::vector<QVec>;

inline QVec qvec_zero(int d) { return QVec(d, Rat(0)); }

inline bool is_zero(const QVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return is_zero(x); });
}

inline QVec add(const QVec& a, const QVec& b) {
    assert(a.size() == b.size());
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline QVec sub(const QVec& a, const QVec& b) {
    assert(a.size() == b.size());
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline QVec scale(const Rat& c, const QVec& v) {
    QVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

inline QVec neg(const QVec& v) { return scale(Rat(-1), v); }

inline Rat dot(const QVec& a, const QVec& b) {
    assert(a.size() == b.size());
    Rat s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/* Canonical representative of the open ray through v: integer entries with
 * gcd 1 and a positive first nonzero entry. Zero stays zero. Used wherever
 * two generators or normals must compare equal exactly when they span the
 * same ray. */
inline QVec primitive(const QVec& v) {
    Int lcm_den(1);
    for (const Rat& x : v)
        if (!is_zero(x)) lcm_den = lcm(lcm_den, den(x));
    Int g(0);
    QVec r(v.size());
    std::vector<Int> nums(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        nums[i] = num(v[i]) * (lcm_den / den(v[i]));
        g = gcd(g, nums[i]);
    }
    if (g == 0) return qvec_zero((int)v.size());
    int lead = 0;
    for (size_t i = 0; i < v.size(); ++i)
        if (nums[i] != 0) { lead = sgn(nums[i]); break; }
    if (lead < 0) g = -g;
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(nums[i] / g);
    return r;
}

/* Same normalization without the sign flip; two vectors agree after this
 * exactly when one is a positive multiple of the other. */
inline QVec primitive_directed(const QVec& v) {
    QVec p = primitive(v);
    int lead = 0;
    for (const Rat& x : v)
        if (!is_zero(x)) { lead = sign(x); break; }
    return lead < 0 ? neg(p) : p;
}

inline bool lex_less(const QVec& a, const QVec& b) {
    assert(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return false;
}

inline Mat identity_mat(int n) {
    Mat m(n, qvec_zero(n));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline Mat transpose(const Mat& m) {
    if (m.empty()) return {};
    Mat t(m[0].size(), qvec_zero((int)m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[0].size(); ++j) t[j][i] = m[i][j];
    return t;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.empty() || b.empty()) return {};
    assert(a[0].size() == b.size());
    Mat c(a.size(), qvec_zero((int)b[0].size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k) {
            if (is_zero(a[i][k])) continue;
            for (size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

inline QVec mat_vec(const Mat& a, const QVec& x) {
    QVec r(a.size(), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], x);
    return r;
}

/* Reduced row echelon form in place: unit leading entries, zeros above and
 * below each pivot, zero rows dropped. The result is the unique canonical
 * basis of the row span, so two matrices span the same space iff their RREFs
 * are identical. Returns the rank. */
inline int rref(Mat& m) {
    if (m.empty()) return 0;
    int rows = (int)m.size(), cols = (int)m[0].size();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!is_zero(m[i][c])) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        Rat inv = 1 / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || is_zero(m[i][c])) continue;
            Rat f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    m.resize(r);
    return r;
}

inline Mat rref_of(Mat m) {
    rref(m);
    return m;
}

inline int rank_of(Mat m) { return rref(m); }

inline int rank_of_rows(const std::vector<QVec>& rows) {
    Mat m(rows.begin(), rows.end());
    return rref(m);
}

/* Is v in the row span of the already-reduced matrix rr? */
inline bool in_rowspan_rref(const Mat& rr, QVec v) {
    for (const QVec& row : rr) {
        int lead = -1;
        for (size_t j = 0; j < row.size(); ++j)
            if (!is_zero(row[j])) { lead = (int)j; break; }
        if (lead < 0) continue;
        if (!is_zero(v[lead])) {
            Rat f = v[lead];
            for (size_t j = 0; j < v.size(); ++j) v[j] -= f * row[j];
        }
    }
    return is_zero(v);
}

inline bool in_rowspan(const Mat& rows, const QVec& v) {
    return in_rowspan_rref(rref_of(rows), v);
}

/* Basis of {x : m x = 0}, one kernel vector per free column of the RREF,
 * in canonical primitive form sorted lexicographically. */
inline Mat kernel_basis(const Mat& m, int cols) {
    Mat rr = m;
    int rank = rref(rr);
    std::vector<int> pivot_col(rank);
    std::vector<bool> is_pivot(cols, false);
    for (int i = 0; i < rank; ++i) {
        int lead = 0;
        while (is_zero(rr[i][lead])) ++lead;
        pivot_col[i] = lead;
        is_pivot[lead] = true;
    }
    Mat ker;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        QVec v = qvec_zero(cols);
        v[c] = 1;
        for (int i = 0; i < rank; ++i) v[pivot_col[i]] = -rr[i][c];
        ker.push_back(primitive(v));
    }
    std::sort(ker.begin(), ker.end(), lex_less);
    return ker;
}

/* Solve A x = b for square nonsingular A via Gauss-Jordan on [A | b].
 * Throws if A is singular. */
inline QVec solve(Mat a, QVec b) {
    int n = (int)a.size();
    assert(n > 0 && (int)a[0].size() == n && (int)b.size() == n);
    for (int i = 0; i < n; ++i) a[i].push_back(b[i]);
    int rank = rref(a);
    if (rank != n) throw std::runtime_error("solve: singular matrix");
    QVec x(n);
    for (int i = 0; i < n; ++i) {
        if (is_zero(a[i][i]) || !is_zero(a[i][i] - 1))
            throw std::runtime_error("solve: singular matrix");
        x[i] = a[i][n];
    }
    return x;
}

inline Mat inverse(const Mat& a) {
    int n = (int)a.size();
    assert(n > 0 && (int)a[0].size() == n);
    Mat aug(n, qvec_zero(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = 1;
    }
    rref(aug);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (aug.size() <= (size_t)i || aug[i][j] != Rat(i == j ? 1 : 0))
                throw std::runtime_error("inverse: singular matrix");
    Mat inv(n, qvec_zero(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

inline bool mat_equal(const Mat& a, const Mat& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

}  // namespace conegeo
