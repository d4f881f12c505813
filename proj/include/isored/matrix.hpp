#pragma once

#include <Eigen/Dense>

#include <vector>

#include "isored/rational_function.hpp"

namespace Eigen {

template <>
struct NumTraits<isored::Rational> : GenericNumTraits<isored::Rational> {
    typedef isored::Rational Real;
    typedef isored::Rational NonInteger;
    typedef isored::Rational Nested;
    typedef isored::Rational Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 40,
        MulCost = 40,
    };
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<isored::RationalFunction> : GenericNumTraits<isored::RationalFunction> {
    typedef isored::RationalFunction Real;
    typedef isored::RationalFunction NonInteger;
    typedef isored::RationalFunction Nested;
    typedef isored::RationalFunction Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 16,
        AddCost = 400,
        MulCost = 400,
    };
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace isored {

using QMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RfMatrix = Eigen::Matrix<RationalFunction, Eigen::Dynamic, Eigen::Dynamic>;

inline RfMatrix lift(const QMatrix& m) {
    return m.unaryExpr([](const Rational& r) { return RationalFunction(r); });
}

// Extracts the constant entries of m; raises NonConstantEntries when any
// entry genuinely depends on λ.
QMatrix constant_part(const RfMatrix& m);

Eigen::MatrixXd to_double(const QMatrix& m);

template <typename Mat>
Mat submatrix(const Mat& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    return m(rows, cols);
}

template <typename Mat>
bool is_symmetric(const Mat& m) {
    if (m.rows() != m.cols()) return false;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = i + 1; j < m.cols(); ++j)
            if (!(m(i, j) == m(j, i))) return false;
    return true;
}

inline bool matrix_in_W(const RfMatrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (!m(i, j).in_W()) return false;
    return true;
}

}  // namespace isored
