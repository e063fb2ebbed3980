#include "psl/oracle.hpp"

#include <Eigen/SVD>

namespace psl::oracle {

namespace {

int svd_rank(const Eigen::MatrixXd& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return 0;
    double cut = kRankTol * sv(0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cut) ++rank;
    return rank;
}

int nullity(const Eigen::MatrixXd& m) {
    return static_cast<int>(m.cols()) - svd_rank(m);
}

// Boundary matrix of X at level t: rows are (q-1)-simplices, columns are
// q-simplices, entries are the incidence signs.
Eigen::MatrixXd boundary_matrix(const ComplexView& view, int q) {
    const auto& rows = view.simplices(q - 1);
    const auto& cols = view.simplices(q);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows.size()),
                                              static_cast<Eigen::Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (int i = 0; i <= cols[c].dim(); ++i) {
            Simplex face = cols[c].facet(i);
            int r = view.position(face);
            if (r >= 0)
                m(r, static_cast<Eigen::Index>(c)) = (i % 2 == 0) ? 1.0 : -1.0;
        }
    }
    return m;
}

std::vector<int> new_simplex_positions(const ComplexView& view_t,
                                       const ComplexView& view_tp, int q) {
    std::vector<int> out;
    const auto& simplices = view_tp.simplices(q);
    for (std::size_t i = 0; i < simplices.size(); ++i)
        if (!view_t.contains(simplices[i])) out.push_back(static_cast<int>(i));
    return out;
}

}  // namespace

RankReport rank_report(std::string name, const Eigen::MatrixXd& m) {
    RankReport out;
    out.name = std::move(name);
    if (m.rows() == 0 || m.cols() == 0) return out;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    out.singular_values.assign(sv.data(), sv.data() + sv.size());
    double cut = sv.size() ? kRankTol * sv(0) : 0.0;
    for (double s : out.singular_values)
        if (s > cut) ++out.rank;
    return out;
}

int persistent_betti_oracle(const Filtration& f, const SheafSpec& s, int q,
                            double t, double p) {
    ComplexView view_t = complex_at(f, t);
    ComplexView view_tp = complex_at(f, t + p);

    IndexedMatrix d_q = coboundary_matrix(view_tp, s, q);
    std::vector<int> new_cols = new_simplex_positions(view_t, view_tp, q);
    Eigen::MatrixXd d_new(d_q.m.rows(), static_cast<Eigen::Index>(new_cols.size()));
    for (std::size_t i = 0; i < new_cols.size(); ++i)
        d_new.col(static_cast<Eigen::Index>(i)) = d_q.m.col(new_cols[i]);

    int rank_down = 0;
    if (q > 0) {
        IndexedMatrix d_down = coboundary_matrix(view_t, s, q - 1);
        rank_down = svd_rank(d_down.m);
    }
    return nullity(d_q.m) - nullity(d_new) - rank_down;
}

int homology_betti_oracle(const Filtration& f, int q, double t, double p) {
    ComplexView view_t = complex_at(f, t);
    ComplexView view_tp = complex_at(f, t + p);
    const int n_t = view_t.count(q);
    if (n_t == 0) return 0;

    // dim Z_q(X_t)
    int cycles = q == 0 ? n_t : nullity(boundary_matrix(view_t, q));

    // dim(B_q(X_{t+p}) /\ C_q(X_t)) = rank(bnd) + n_t - rank([bnd | E_old]),
    // with E_old the coordinate columns of X_t's q-simplices in C_q(X_{t+p}).
    Eigen::MatrixXd bnd = boundary_matrix(view_tp, q + 1);
    const Eigen::Index n_tp = bnd.rows();
    Eigen::MatrixXd aug(n_tp, bnd.cols() + n_t);
    aug.leftCols(bnd.cols()) = bnd;
    aug.rightCols(n_t).setZero();
    const auto& q_simplices = view_t.simplices(q);
    for (int i = 0; i < n_t; ++i) {
        int pos = view_tp.position(q_simplices[static_cast<std::size_t>(i)]);
        aug(pos, bnd.cols() + i) = 1.0;
    }
    int boundaries_in_old = svd_rank(bnd) + n_t - svd_rank(aug);
    return cycles - boundaries_in_old;
}

double cochain_map_check(const Filtration& f, const SheafSpec& s, int q,
                         double t, double p) {
    ComplexView view_t = complex_at(f, t);
    ComplexView view_tp = complex_at(f, t + p);

    IndexedMatrix d_tp = coboundary_matrix(view_tp, s, q);
    IndexedMatrix d_t = coboundary_matrix(view_t, s, q);

    const Eigen::Index rows_t = d_t.m.rows();
    const Eigen::Index cols_t = d_t.m.cols();

    // pi_{q+1} d^{t+p}: keep the rows of d^{t+p} whose (q+1)-simplex lives
    // in X_t; d^t pi_q: extend d^t's columns by zero over new q-simplices.
    Eigen::MatrixXd lhs(rows_t, d_tp.m.cols());
    for (Eigen::Index r = 0; r < rows_t; ++r) {
        int pos = view_tp.position(d_t.row_index[static_cast<std::size_t>(r)]);
        lhs.row(r) = d_tp.m.row(pos);
    }
    Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(rows_t, d_tp.m.cols());
    for (Eigen::Index c = 0; c < cols_t; ++c) {
        int pos = view_tp.position(d_t.col_index[static_cast<std::size_t>(c)]);
        rhs.col(pos) = d_t.m.col(c);
    }
    if (lhs.size() == 0) return 0.0;
    return (lhs - rhs).cwiseAbs().maxCoeff();
}

}  // namespace psl::oracle
