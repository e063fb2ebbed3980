#pragma once

#include <vector>

#include <Eigen/Dense>

#include "psl/complex.hpp"
#include "psl/sheaf.hpp"

namespace psl {

/// Relative pivot threshold for rank decisions in the persistent-basis
/// elimination. Configurable per call; this is the project-wide default.
inline constexpr double kDefaultPivotTol = 1e-10;

/// A dense symmetric PSD operator on the q-cochains of a fixed complex,
/// rows/columns identified with the ordered q-simplex list.
struct SymMatrix {
    Eigen::MatrixXd m;
    std::vector<Simplex> index;

    Eigen::Index size() const { return m.rows(); }
};

/// Basis B of the subspace of (q+1)-cochains of X_{t+p} whose adjoint
/// coboundary lands in C^q(X_t), together with its Gram matrix P = B^T B.
struct SubspaceBasis {
    Eigen::MatrixXd basis;  // ambient dim x subspace dim
    Eigen::MatrixXd gram;
};

/// Sheaf Laplacian D_q^T D_q + D_{q-1} D_{q-1}^T in the canonical
/// orthonormal stalk basis (down term absent for q = 0).
SymMatrix sheaf_laplacian(const ComplexView& view, const SheafSpec& s, int q);

/// Basis of the null space of N^T, where N collects the columns of d_full
/// (the degree-q coboundary of X_{t+p}) indexed by the q-simplices absent
/// from X_t. An empty new-simplex set yields the identity basis.
SubspaceBasis persistent_basis(const IndexedMatrix& d_full,
                               const std::vector<Simplex>& new_q_simplices,
                               double pivot_tol = kDefaultPivotTol);

/// Assembles the persistent sheaf Laplacian on C^q(X_t) from a given
/// subspace basis: D_{q-1}^t (D_{q-1}^t)^T + D* P^{-1} (D*)^T with
/// D* = (rows of d_full^T for X_t's q-simplices) * B. The result does not
/// depend on the basis choice.
SymMatrix persistent_sheaf_laplacian_with_basis(const ComplexView& view_t,
                                                const ComplexView& view_tp,
                                                const SheafSpec& s, int q,
                                                const IndexedMatrix& d_full,
                                                const SubspaceBasis& basis);

/// Persistent sheaf Laplacian between scales t and t+p. At p = 0 this
/// coincides with sheaf_laplacian at t.
SymMatrix persistent_sheaf_laplacian(const Filtration& f, const SheafSpec& s,
                                     int q, double t, double p,
                                     double pivot_tol = kDefaultPivotTol);

}  // namespace psl
