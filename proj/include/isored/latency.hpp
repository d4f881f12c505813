#pragma once

#include <vector>

#include "isored/reduce.hpp"

namespace isored {

// True iff some automorphism of the weighted (di)graph maps a to b, i.e. a
// permutation φ with φ(a) = b and M_ij = M_φ(i)φ(j) for all i, j.
// Backtracking search with loop-weight and weight-multiset pruning.
bool has_swap_automorphism(const RfMatrix& m, int a, int b);
bool has_swap_automorphism(const WGraph& g, int a, int b);
// a and b are original vertex ids of the reduction's source graph.
bool has_swap_automorphism(const ReducedMatrix& r, int a, int b);

// Measure of latency 𝓜 = (n − |T|)/(n − 2) for a cospectral pair {a,b},
// where T is the largest vertex set whose reduction admits an automorphism
// swapping a and b.
struct LatencyReport {
    int a = 0;
    int b = 0;
    int n = 0;
    VertexSet witness;  // maximum-cardinality T, lexicographically smallest
    Rational measure;

    struct Level {
        int size = 0;
        long subsets_examined = 0;
    };
    std::vector<Level> levels;
};

// Searches T ⊇ {a,b} by decreasing cardinality, reducing over each T and
// testing for the swap automorphism; the first level with a hit determines
// the measure.  Raises NotCospectral when the pair is not cospectral and
// NoLatentAutomorphism when the search exhausts (possible only for
// directed graphs).  For undirected cospectral pairs T = {a,b} always
// succeeds, so the search terminates there at the latest.
LatencyReport measure_of_latency(const WGraph& g, int a, int b);

}  // namespace isored
