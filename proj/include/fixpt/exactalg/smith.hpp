#ifndef FIXPT_EXACTALG_SMITH_HPP
#define FIXPT_EXACTALG_SMITH_HPP

#include "fixpt/exactalg/types.hpp"

#include <vector>

namespace fixpt {

/**
 * Smith normal form U * A * V = S of an integer matrix.
 *
 * U and V are unimodular; their inverses are tracked alongside so callers can
 * change coordinates in both directions without a separate inversion. S is
 * diagonal with d_1 | d_2 | ... | d_rank, all positive, followed by zeros.
 */
template <typename Scalar>
struct SmithForm {
    Matrix<Scalar> U, S, V;
    Matrix<Scalar> U_inv, V_inv;
    Index rank = 0;

    std::vector<Scalar> invariant_factors() const
    {
        std::vector<Scalar> d;
        for (Index i = 0; i < rank; ++i)
            d.push_back(S(i, i));
        return d;
    }
};

namespace detail {

template <typename Scalar>
Scalar snf_abs(const Scalar& x)
{
    return x < 0 ? Scalar(-x) : x;
}

template <typename Scalar>
struct SmithWorkspace {
    Matrix<Scalar> a, u, u_inv, v, v_inv;

    void swap_rows(Index i, Index j)
    {
        if (i == j)
            return;
        a.row(i).swap(a.row(j));
        u.row(i).swap(u.row(j));
        u_inv.col(i).swap(u_inv.col(j));
    }

    void swap_cols(Index i, Index j)
    {
        if (i == j)
            return;
        a.col(i).swap(a.col(j));
        v.col(i).swap(v.col(j));
        v_inv.row(i).swap(v_inv.row(j));
    }

    // row_i += q * row_t
    void add_row(Index i, Index t, const Scalar& q)
    {
        a.row(i) += q * a.row(t);
        u.row(i) += q * u.row(t);
        u_inv.col(t) -= q * u_inv.col(i);
    }

    // col_j += q * col_t
    void add_col(Index j, Index t, const Scalar& q)
    {
        a.col(j) += q * a.col(t);
        v.col(j) += q * v.col(t);
        v_inv.row(t) -= q * v_inv.row(j);
    }

    void negate_row(Index i)
    {
        a.row(i) = -a.row(i);
        u.row(i) = -u.row(i);
        u_inv.col(i) = -u_inv.col(i);
    }
};

} // namespace detail

/**
 * Computes the Smith normal form by repeated pivoting on the entry of least
 * nonzero absolute value in the active block. Ties go to the lowest row, then
 * the lowest column, so the output is a deterministic function of the input.
 */
template <typename Scalar>
SmithForm<Scalar> smith_normal_form(const Matrix<Scalar>& input)
{
    const Index m = input.rows();
    const Index n = input.cols();
    detail::SmithWorkspace<Scalar> w{input, identity_matrix<Scalar>(m), identity_matrix<Scalar>(m),
                                     identity_matrix<Scalar>(n), identity_matrix<Scalar>(n)};

    Index t = 0;
    while (t < m && t < n) {
        // Pivot search over the active block.
        Index pr = -1, pc = -1;
        Scalar best = 0;
        for (Index i = t; i < m; ++i)
            for (Index j = t; j < n; ++j) {
                if (w.a(i, j) == 0)
                    continue;
                Scalar mag = detail::snf_abs(w.a(i, j));
                if (pr < 0 || mag < best) {
                    best = mag;
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0)
            break;
        w.swap_rows(t, pr);
        w.swap_cols(t, pc);

        bool clean = true;
        for (Index i = t + 1; i < m; ++i) {
            if (w.a(i, t) == 0)
                continue;
            Scalar q = w.a(i, t) / w.a(t, t);
            if (q != 0)
                w.add_row(i, t, Scalar(-q));
            if (w.a(i, t) != 0)
                clean = false;
        }
        for (Index j = t + 1; j < n; ++j) {
            if (w.a(t, j) == 0)
                continue;
            Scalar q = w.a(t, j) / w.a(t, t);
            if (q != 0)
                w.add_col(j, t, Scalar(-q));
            if (w.a(t, j) != 0)
                clean = false;
        }
        if (!clean)
            continue; // a smaller remainder now exists; pick it as the new pivot

        // Divisibility: pull an offending row into the pivot row and retry.
        bool divides = true;
        for (Index i = t + 1; i < m && divides; ++i)
            for (Index j = t + 1; j < n; ++j)
                if (w.a(i, j) % w.a(t, t) != 0) {
                    w.add_row(t, i, Scalar(1));
                    divides = false;
                    break;
                }
        if (!divides)
            continue;

        if (w.a(t, t) < 0)
            w.negate_row(t);
        ++t;
    }

    SmithForm<Scalar> out;
    out.S = std::move(w.a);
    out.U = std::move(w.u);
    out.U_inv = std::move(w.u_inv);
    out.V = std::move(w.v);
    out.V_inv = std::move(w.v_inv);
    out.rank = t;
    return out;
}

template <typename Scalar>
Index matrix_rank(const Matrix<Scalar>& a)
{
    if (a.rows() == 0 || a.cols() == 0)
        return 0;
    return smith_normal_form(a).rank;
}

} // namespace fixpt

#endif
