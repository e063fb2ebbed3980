#include "psl/laplacian.hpp"

#include <Eigen/Cholesky>
#include <Eigen/LU>

namespace psl {

namespace {

// A^T A, exactly symmetric by construction.
Eigen::MatrixXd gram_of_columns(const Eigen::MatrixXd& a) {
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(a.cols(), a.cols());
    g.selfadjointView<Eigen::Lower>().rankUpdate(a.transpose());
    g.triangularView<Eigen::StrictlyUpper>() = g.transpose();
    return g;
}

// A A^T, exactly symmetric by construction.
Eigen::MatrixXd gram_of_rows(const Eigen::MatrixXd& a) {
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(a.rows(), a.rows());
    g.selfadjointView<Eigen::Lower>().rankUpdate(a);
    g.triangularView<Eigen::StrictlyUpper>() = g.transpose();
    return g;
}

}  // namespace

SymMatrix sheaf_laplacian(const ComplexView& view, const SheafSpec& s, int q) {
    if (q < 0)
        throw Error(ErrorCode::InvalidParameter, "Laplacian degree must be >= 0");
    SymMatrix out;
    out.index = view.simplices(q);
    const Eigen::Index n = static_cast<Eigen::Index>(out.index.size());

    IndexedMatrix up = coboundary_matrix(view, s, q);
    out.m = gram_of_columns(up.m);
    if (q > 0) {
        IndexedMatrix down = coboundary_matrix(view, s, q - 1);
        out.m += gram_of_rows(down.m);
    }
    if (out.m.rows() != n)
        throw Error(ErrorCode::InvalidParameter, "laplacian size mismatch");
    return out;
}

SubspaceBasis persistent_basis(const IndexedMatrix& d_full,
                               const std::vector<Simplex>& new_q_simplices,
                               double pivot_tol) {
    const Eigen::Index m = d_full.m.rows();  // (q+1)-cochain dimension
    SubspaceBasis out;

    if (new_q_simplices.empty()) {
        out.basis = Eigen::MatrixXd::Identity(m, m);
        out.gram = Eigen::MatrixXd::Identity(m, m);
        return out;
    }
    if (m == 0) {  // no (q+1)-cochains at all
        out.basis = Eigen::MatrixXd(0, 0);
        out.gram = Eigen::MatrixXd(0, 0);
        return out;
    }

    std::unordered_map<Simplex, int, SimplexHash> col_pos;
    col_pos.reserve(d_full.col_index.size());
    for (std::size_t i = 0; i < d_full.col_index.size(); ++i)
        col_pos.emplace(d_full.col_index[i], static_cast<int>(i));

    Eigen::MatrixXd n_t(static_cast<Eigen::Index>(new_q_simplices.size()), m);
    for (std::size_t i = 0; i < new_q_simplices.size(); ++i) {
        auto it = col_pos.find(new_q_simplices[i]);
        if (it == col_pos.end())
            throw Error(ErrorCode::InvalidParameter,
                        "new simplex " + new_q_simplices[i].to_string() +
                            " is not a column of the coboundary");
        n_t.row(static_cast<Eigen::Index>(i)) = d_full.m.col(it->second).transpose();
    }

    Eigen::FullPivLU<Eigen::MatrixXd> lu(n_t);
    lu.setThreshold(pivot_tol);
    if (lu.dimensionOfKernel() == 0) {
        out.basis = Eigen::MatrixXd(m, 0);
        out.gram = Eigen::MatrixXd(0, 0);
        return out;
    }
    out.basis = lu.kernel();
    out.gram = gram_of_columns(out.basis);
    return out;
}

SymMatrix persistent_sheaf_laplacian_with_basis(const ComplexView& view_t,
                                                const ComplexView& view_tp,
                                                const SheafSpec& s, int q,
                                                const IndexedMatrix& d_full,
                                                const SubspaceBasis& basis) {
    SymMatrix out;
    out.index = view_t.simplices(q);
    const Eigen::Index n_t = static_cast<Eigen::Index>(out.index.size());
    out.m = Eigen::MatrixXd::Zero(n_t, n_t);
    if (n_t == 0) return out;

    const Eigen::Index k = basis.basis.cols();
    if (k > 0) {
        // D* = rows of d_full^T for X_t's q-simplices, times B.
        Eigen::MatrixXd full = d_full.m.transpose() * basis.basis;
        Eigen::MatrixXd d_star(n_t, k);
        for (Eigen::Index i = 0; i < n_t; ++i) {
            int pos = view_tp.position(out.index[static_cast<std::size_t>(i)]);
            if (pos < 0)
                throw Error(ErrorCode::ClosureViolation,
                            "q-simplex of X_t missing from X_{t+p}");
            d_star.row(i) = full.row(pos);
        }
        // D* P^{-1} D*^T via the Cholesky factor: with P = L L^T the up
        // term is W^T W for W = L^{-1} D*^T, symmetric PSD by construction.
        Eigen::LLT<Eigen::MatrixXd> llt(basis.gram);
        if (llt.info() != Eigen::Success)
            throw Error(ErrorCode::InvalidParameter,
                        "subspace Gram matrix is not positive definite");
        Eigen::MatrixXd w = llt.matrixL().solve(d_star.transpose());
        out.m = gram_of_columns(w);
    }

    if (q > 0) {
        IndexedMatrix down = coboundary_matrix(view_t, s, q - 1);
        out.m += gram_of_rows(down.m);
    }
    return out;
}

SymMatrix persistent_sheaf_laplacian(const Filtration& f, const SheafSpec& s,
                                     int q, double t, double p,
                                     double pivot_tol) {
    if (q < 0)
        throw Error(ErrorCode::InvalidParameter, "Laplacian degree must be >= 0");
    if (p < 0.0)
        throw Error(ErrorCode::InvalidParameter, "persistence offset p must be >= 0");

    ComplexView view_t = complex_at(f, t);
    ComplexView view_tp = complex_at(f, t + p);

    IndexedMatrix d_full = coboundary_matrix(view_tp, s, q);
    std::vector<Simplex> new_q;
    for (const Simplex& sig : view_tp.simplices(q))
        if (!view_t.contains(sig)) new_q.push_back(sig);

    SubspaceBasis basis = persistent_basis(d_full, new_q, pivot_tol);
    return persistent_sheaf_laplacian_with_basis(view_t, view_tp, s, q, d_full, basis);
}

}  // namespace psl
