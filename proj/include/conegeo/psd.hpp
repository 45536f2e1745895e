#pragma once

#include <vector>

#include "conegeo/symmat.hpp"

namespace conegeo {

inline Rat quad_form(const SymMat& x, const QVec& v) {
    return dot(v, sym_apply(x, v));
}

/* Verdict of the semidefiniteness test, self-certifying in both directions.
 *
 * psd == true:  U is invertible with U^T X U diagonal, value diag[k] > 0 at
 *               column pivots[k] and zero elsewhere, so X = U^{-T} D U^{-1}
 *               is a sum of positive rank-one terms. rank == pivots.size().
 * psd == false: witness satisfies witness^T X witness = witness_value < 0.
 *
 * range_basis is the canonical (RREF) basis of the column space. */
struct PsdResult {
    bool psd = false;
    int rank = 0;
    Mat range_basis;
    std::vector<int> pivots;
    QVec diag;
    Mat congr;
    QVec witness;
    Rat witness_value;
};

/* Symmetric Gaussian elimination by congruence. Pivot choice is the
 * largest-magnitude diagonal among the remaining indices, lowest index on
 * ties; for a PSD input every remaining block is a Schur complement and so
 * PSD itself, which keeps all pivots positive. A negative diagonal or a
 * nonzero off-diagonal entry in an all-zero-diagonal remainder disproves
 * semidefiniteness and yields an explicit negative-value vector. */
inline PsdResult psd_check(const SymMat& x) {
    int n = x.n;
    PsdResult res;
    res.range_basis = rref_of(x.dense());

    Mat cur = x.dense();
    Mat u = identity_mat(n);
    std::vector<bool> remaining(n, true);
    int left = n;

    auto u_column = [&](int c) {
        QVec col(n);
        for (int i = 0; i < n; ++i) col[i] = u[i][c];
        return col;
    };

    while (left > 0) {
        int p = -1;
        for (int i = 0; i < n; ++i) {
            if (!remaining[i]) continue;
            if (p < 0 || abs(cur[i][i]) > abs(cur[p][p])) p = i;
        }
        if (is_zero(cur[p][p])) {
            int bi = -1, bj = -1;
            for (int i = 0; i < n && bi < 0; ++i) {
                if (!remaining[i]) continue;
                for (int j = i + 1; j < n; ++j) {
                    if (!remaining[j]) continue;
                    if (!is_zero(cur[i][j])) { bi = i; bj = j; break; }
                }
            }
            if (bi < 0) break;
            int s = sign(cur[bi][bj]);
            res.psd = false;
            res.witness = primitive(sub(u_column(bi), scale(Rat(s), u_column(bj))));
            res.witness_value = quad_form(x, res.witness);
            assert(sign(res.witness_value) < 0);
            return res;
        }
        if (sign(cur[p][p]) < 0) {
            res.psd = false;
            res.witness = primitive(u_column(p));
            res.witness_value = quad_form(x, res.witness);
            assert(sign(res.witness_value) < 0);
            return res;
        }
        res.pivots.push_back(p);
        res.diag.push_back(cur[p][p]);
        for (int i = 0; i < n; ++i) {
            if (!remaining[i] || i == p || is_zero(cur[p][i])) continue;
            Rat f = cur[p][i] / cur[p][p];
            for (int r = 0; r < n; ++r) {
                cur[r][i] -= f * cur[r][p];
                u[r][i] -= f * u[r][p];
            }
            for (int c = 0; c < n; ++c) cur[i][c] -= f * cur[p][c];
        }
        remaining[p] = false;
        --left;
    }

    res.psd = true;
    res.rank = (int)res.pivots.size();
    res.congr = u;
    assert(res.rank == (int)res.range_basis.size());
    return res;
}

inline bool is_psd(const SymMat& x) { return psd_check(x).psd; }

inline bool is_psd(const SymMat& x, int* rank_out) {
    PsdResult r = psd_check(x);
    if (rank_out && r.psd) *rank_out = r.rank;
    return r.psd;
}

}  // namespace conegeo
