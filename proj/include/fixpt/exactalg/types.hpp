#ifndef FIXPT_EXACTALG_TYPES_HPP
#define FIXPT_EXACTALG_TYPES_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <string>
#include <vector>

namespace fixpt {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

using Index = Eigen::Index;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using IntVector = Vector<Integer>;

inline Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline int sign_of(const Integer& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

/// Returns the integer value of q, throwing if q has a nontrivial denominator.
Integer to_integer(const Rational& q);

template <typename Scalar>
Matrix<Scalar> identity_matrix(Index n)
{
    Matrix<Scalar> m(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            m(i, j) = Scalar(i == j ? 1 : 0);
    return m;
}

template <typename Scalar>
Matrix<Scalar> zero_matrix(Index rows, Index cols)
{
    Matrix<Scalar> m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j)
            m(i, j) = Scalar(0);
    return m;
}

template <typename Scalar>
bool is_zero_matrix(const Matrix<Scalar>& m)
{
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0)
                return false;
    return true;
}

/// A * B skipping zero entries of A; boundary and chain-map matrices are mostly zero.
template <typename Scalar>
Matrix<Scalar> product(const Matrix<Scalar>& a, const Matrix<Scalar>& b)
{
    Matrix<Scalar> out = zero_matrix<Scalar>(a.rows(), b.cols());
    std::vector<std::vector<Index>> support(b.rows());
    for (Index k = 0; k < b.rows(); ++k)
        for (Index j = 0; j < b.cols(); ++j)
            if (b(k, j) != 0)
                support[k].push_back(j);
    for (Index i = 0; i < a.rows(); ++i)
        for (Index k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (Index j : support[k])
                out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

/// Kronecker product A (x) B.
template <typename Scalar>
Matrix<Scalar> kronecker(const Matrix<Scalar>& a, const Matrix<Scalar>& b)
{
    Matrix<Scalar> out = zero_matrix<Scalar>(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != 0)
                out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

std::string to_string(const Integer& x);
std::string to_string(const Rational& q);

} // namespace fixpt

#endif
