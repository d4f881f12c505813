#pragma once

#include <vector>

#include "isored/graph.hpp"

namespace isored {

// Exact closed-walk and non-returning-walk counts at a vertex.
// closed[k] = (M^k)_aa for k = 0..K; nonreturning[k-1] = w*_k(a) for
// k = 1..K, the weighted count of length-k walks from a to itself that
// avoid a strictly between the endpoints.
struct WalkTable {
    int vertex = 0;
    int K = 0;
    std::vector<Rational> closed;
    std::vector<Rational> nonreturning;
};

std::vector<Rational> closed_walk_counts(const QMatrix& m, int a, int K);

// Matrices w*_1(S)..w*_K(S): w*_1 = M_SS and
// w*_k = M_SS̄ · (M_S̄S̄)^(k−2) · M_S̄S for k ≥ 2, indexed by position in S.
struct NonReturningMatrixSeries {
    VertexSet S;
    int K = 0;
    std::vector<QMatrix> mats;
};

NonReturningMatrixSeries nonreturning_counts(const QMatrix& m, const VertexSet& S, int K);

WalkTable walk_table(const QMatrix& m, int a, int K);

// Checks that the series expansion at infinity of every entry of the
// reduction over S reproduces the first K non-returning walk counts.
bool verify_reduction_series(const QMatrix& m, const VertexSet& S, int K);

// Checks w_ℓ(a) = Σ_{i=1..ℓ} w*_i(a) · w_{ℓ−i}(a) for all ℓ ≤ L, the
// series form of decomposing a closed walk at each return to a.
bool composition_identity_check(const QMatrix& m, int a, int L);

}  // namespace isored
