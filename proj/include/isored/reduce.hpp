#pragma once

#include <string>
#include <vector>

#include "isored/graph.hpp"

namespace isored {

// Result of an isospectral reduction, tied back to the source graph.
// Every entry lies in 𝕎; symmetric sources give symmetric reductions.
struct ReducedMatrix {
    RfMatrix mat;
    VertexSet kept;                   // original indices, sorted
    std::vector<std::string> labels;  // labels of the kept vertices
    int source_size = 0;

    ReducedMatrix() = default;
    ReducedMatrix(RfMatrix m, VertexSet kept_set, std::vector<std::string> lbls, int n);
};

// The isospectral reduction M_SS − M_SS̄ (M_S̄S̄ − λI)^{-1} M_S̄S, computed
// by exact Gaussian elimination over the rational-function field with
// pivots chosen by lowest total polynomial degree.  Entries of m may be
// constants or general 𝕎 functions (so reductions of reductions work).
// S = V acts as the identity.  Raises ImproperSubset for an empty or
// invalid S and SingularComplement when det(M_S̄S̄ − λI) = 0 as a function
// (impossible for constant matrices).
RfMatrix schur_reduce(const RfMatrix& m, const VertexSet& S);
RfMatrix schur_reduce(const QMatrix& m, const VertexSet& S);
ReducedMatrix schur_reduce(const WGraph& g, const VertexSet& S);

// A branch: path (or cycle when endpoints coincide) whose interior vertices
// all avoid S, together with its branch product.
struct Branch {
    std::vector<int> vertices;  // endpoint, interiors..., endpoint
    RationalFunction product;
};

// All branches from i to j with respect to S, in depth-first discovery order.
std::vector<Branch> enumerate_branches(const WGraph& g, const VertexSet& S, int i, int j);

// Graph-side reduction: sums branch products over every vertex pair of S.
// Requires S to be a base set (NotABaseSet otherwise).  Agrees entrywise
// with schur_reduce.
ReducedMatrix branch_reduce(const WGraph& g, const VertexSet& S);

enum class ReduceMethod { Schur, Branch };
ReducedMatrix reduce(const WGraph& g, const VertexSet& S, ReduceMethod method);

// Smash function: the sole entry of the reduction over {a}; equals
// p(M,λ)/p(M\a,λ) + λ.
RationalFunction smash(const RfMatrix& m, int a);

// det(R(λ) − λI) as a rational function in lowest terms.
RationalFunction reduced_charpoly(const RfMatrix& r);
RationalFunction reduced_charpoly(const ReducedMatrix& r);

// Exact spectrum bookkeeping for a constant matrix: numerator·removed =
// charpoly(m), where removed is the monic factor shared with the
// complement block's characteristic polynomial.  The reduction's
// eigenvalues are the numerator's roots with multiplicity.
struct ReducedSpectrum {
    Polynomial numerator;
    Polynomial removed;
};
ReducedSpectrum reduced_spectrum(const QMatrix& m, const VertexSet& S);

// Iterated reduction along a strictly nested chain S1 ⊃ S2 ⊃ … ⊃ Sm of
// proper subsets (original indices); equals schur_reduce(m, Sm) exactly.
// Raises NotNested when the chain is not strictly nested.
RfMatrix sequential_reduce(const RfMatrix& m, const std::vector<VertexSet>& chain);
RfMatrix sequential_reduce(const QMatrix& m, const std::vector<VertexSet>& chain);

}  // namespace isored
