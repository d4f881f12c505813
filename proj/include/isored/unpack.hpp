#pragma once

#include <array>
#include <vector>

#include "isored/reduce.hpp"

namespace isored {

// Blueprint for one synthesized path of the unpacking: a directed path
// from `from` to `to` with `interiors` new vertices, each carrying a loop
// of weight `loop_weight` (omitted when zero), the first edge weighted
// `designated_weight` and all other edges weighted 1.
struct PathBlueprint {
    int from = 0;
    int to = 0;
    int interiors = 0;         // ℓ_k ≥ 1
    Rational loop_weight;      // r_k
    Rational designated_weight;  // a_k
};

// Partial-fraction decompositions of all four entries plus the derived
// construction: constants become direct edges (loops on the diagonal),
// every non-constant term becomes a path.
struct UnpackPlan {
    std::array<std::array<PartialFractionForm, 2>, 2> forms;
    std::array<std::array<Rational, 2>, 2> direct;  // constant parts
    std::vector<PathBlueprint> paths;

    // 2 + Σ interiors over all paths.
    int total_vertices() const;
};

// Requires a 2×2 matrix with all entries in 𝕎 (NotInW otherwise) whose
// denominators split over the rationals (NonSplittingDenominator
// otherwise).
UnpackPlan make_unpack_plan(const RfMatrix& r);

// Synthesizes a weighted digraph with distinguished vertices 0 and 1 whose
// reduction over {0,1} reproduces r exactly.  The designated coefficient
// weight goes on the first edge of each path.
WGraph unpack_2x2(const RfMatrix& r);

// True iff reducing g over `keep` (default: the first r.rows() vertices)
// reproduces r entrywise.
bool verify_roundtrip(const WGraph& g, const RfMatrix& r);
bool verify_roundtrip(const WGraph& g, const RfMatrix& r, const VertexSet& keep);

}  // namespace isored
