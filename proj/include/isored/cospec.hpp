#pragma once

#include <optional>
#include <vector>

#include "isored/reduce.hpp"

namespace isored {

// Certified cospectrality result.  Both characterizations — equal deletion
// characteristic polynomials and equal diagonal of the {a,b} reduction —
// are always computed; a disagreement raises InternalError rather than
// producing a report.
struct CospectralReport {
    int a = 0;
    int b = 0;
    bool cospectral = false;
    Polynomial charpoly_without_a;  // p(M\a, λ)
    Polynomial charpoly_without_b;  // p(M\b, λ)
    ReducedMatrix reduction;        // 2×2 reduction over {a,b}
    std::optional<bool> strongly;
    std::optional<Polynomial> squarefree_witness;
};

CospectralReport are_cospectral(const QMatrix& m, int a, int b);
CospectralReport are_cospectral(const WGraph& g, int a, int b);

// Swap symmetry of the 2×2 reduction of an undirected graph; equals
// cospectrality of the pair.  Raises DirectedInput for directed graphs.
bool is_latently_automorphic(const WGraph& g, int a, int b);

// Cospectral and the reduction over {a,b} has simple eigenvalues, tested
// as squarefreeness of the numerator of its characteristic function in
// lowest terms.  Directed inputs are allowed.
CospectralReport are_strongly_cospectral(const QMatrix& m, int a, int b);
CospectralReport are_strongly_cospectral(const WGraph& g, int a, int b);

// Floating-point spectral decomposition of a symmetric matrix with
// eigenvalues grouped into eigenspaces and per-eigenspace orthogonal
// projectors.  Σ E_θ = I and E_θ² = E_θ hold within tolerance.
struct NumericSpectral {
    std::vector<double> eigenvalues;       // distinct, increasing
    std::vector<Eigen::MatrixXd> projectors;
    Eigen::MatrixXd eigenvectors;          // orthonormal columns
    double tolerance = 0.0;

    // Smallest gap between distinct eigenvalues (infinity when only one).
    double min_gap() const;
};

NumericSpectral numeric_spectral(const Eigen::MatrixXd& m, double group_tol);

// Checks E_θ e_a = ±E_θ e_b for every eigenspace, within tol.  The
// independent floating-point oracle for strong cospectrality on undirected
// graphs.  Raises NotSymmetric for asymmetric input.
bool numeric_strong_check(const QMatrix& m, int a, int b, double tol = 1e-9);

}  // namespace isored
