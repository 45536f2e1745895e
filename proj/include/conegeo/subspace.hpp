#pragma once

#include <utility>

#include "conegeo/linalg.hpp"

namespace conegeo {

/* Linear subspace of a coordinate space carrying a diagonal inner product
 * <u, v> = sum_i w_i u_i v_i. The weights matter once symmetric matrices are
 * flattened to their upper triangles: the trace pairing doubles off-diagonal
 * products, and orthogonal complements or projections taken with the wrong
 * pairing land in the wrong space. Plain Euclidean space uses weight 1
 * everywhere.
 *
 * The stored basis is the RREF of whatever generators were supplied, which
 * is the unique canonical basis of the span; equality of subspaces is
 * equality of bases. */
struct Subspace {
    int ambient = 0;
    QVec weights;
    Mat basis;

    Subspace() = default;

    Subspace(int ambient_dim, Mat generators, QVec w)
        : ambient(ambient_dim), weights(std::move(w)) {
        assert((int)weights.size() == ambient);
        for (const QVec& g : generators) assert((int)g.size() == ambient);
        basis = std::move(generators);
        rref(basis);
    }

    Subspace(int ambient_dim, Mat generators)
        : Subspace(ambient_dim, std::move(generators), QVec(ambient_dim, Rat(1))) {}

    static Subspace zero(int ambient_dim, QVec w) {
        return Subspace(ambient_dim, Mat{}, std::move(w));
    }

    static Subspace full(int ambient_dim, QVec w) {
        return Subspace(ambient_dim, identity_mat(ambient_dim), std::move(w));
    }

    int dim() const { return (int)basis.size(); }
    bool is_zero_space() const { return basis.empty(); }
    bool is_full() const { return dim() == ambient; }

    bool contains(const QVec& v) const { return in_rowspan_rref(basis, v); }

    bool operator==(const Subspace& o) const {
        return ambient == o.ambient && weights == o.weights && mat_equal(basis, o.basis);
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    Rat inner(const QVec& u, const QVec& v) const {
        assert((int)u.size() == ambient && (int)v.size() == ambient);
        Rat s(0);
        for (int i = 0; i < ambient; ++i) s += weights[i] * u[i] * v[i];
        return s;
    }

    /* {v : <b, v> = 0 for every basis vector b}, w.r.t. the weighted
     * pairing. The weighted row w_i b_i turns the condition into a plain
     * kernel computation. */
    Subspace orth_complement() const {
        Mat rows;
        rows.reserve(basis.size());
        for (const QVec& b : basis) {
            QVec row(ambient);
            for (int i = 0; i < ambient; ++i) row[i] = weights[i] * b[i];
            rows.push_back(std::move(row));
        }
        return Subspace(ambient, kernel_basis(rows, ambient), weights);
    }

    /* Orthogonal projection of v onto this subspace: solve the Gram system
     * G c = (<b_i, v>) and return sum c_i b_i. The Gram matrix of an RREF
     * basis is nonsingular. */
    QVec project(const QVec& v) const {
        if (basis.empty()) return qvec_zero(ambient);
        int k = dim();
        Mat gram(k, qvec_zero(k));
        QVec rhs(k);
        for (int i = 0; i < k; ++i) {
            rhs[i] = inner(basis[i], v);
            for (int j = 0; j < k; ++j) gram[i][j] = inner(basis[i], basis[j]);
        }
        QVec c = solve(gram, rhs);
        QVec p = qvec_zero(ambient);
        for (int i = 0; i < k; ++i) p = add(p, scale(c[i], basis[i]));
        return p;
    }
};

inline Subspace sum(const Subspace& a, const Subspace& b) {
    assert(a.ambient == b.ambient && a.weights == b.weights);
    Mat gens = a.basis;
    gens.insert(gens.end(), b.basis.begin(), b.basis.end());
    return Subspace(a.ambient, std::move(gens), a.weights);
}

inline Subspace intersect(const Subspace& a, const Subspace& b) {
    assert(a.ambient == b.ambient && a.weights == b.weights);
    return sum(a.orth_complement(), b.orth_complement()).orth_complement();
}

inline Subspace span_of(int ambient, const Mat& generators, const QVec& w) {
    return Subspace(ambient, generators, w);
}

}  // namespace conegeo
