#pragma once

#include <string>
#include <vector>

#include "psl/complex.hpp"
#include "psl/sheaf.hpp"

// Brute-force verifiers for the test and acceptance suites. Everything here
// works from coboundary/boundary matrices and singular-value ranks alone;
// no Laplacian is ever assembled, keeping these independent of the
// elimination-based pipeline they cross-check.
namespace psl::oracle {

/// Relative singular-value cutoff for rank decisions.
inline constexpr double kRankTol = 1e-10;

struct RankReport {
    std::string name;
    int rank = 0;
    std::vector<double> singular_values;
};

RankReport rank_report(std::string name, const Eigen::MatrixXd& m);

/// Expected nullity of the persistent sheaf Laplacian, computed as
/// dim ker d_q^{t+p} - dim ker(d_q^{t+p} restricted to new q-simplices)
/// - rank d_{q-1}^t.
int persistent_betti_oracle(const Filtration& f, const SheafSpec& s, int q,
                            double t, double p);

/// Ordinary persistent Betti number rank(H_q(X_t) -> H_q(X_{t+p})) over the
/// reals, from boundary-matrix ranks.
int homology_betti_oracle(const Filtration& f, int q, double t, double p);

/// Max-norm residual of pi d_q^{t+p} - d_q^t pi over the canonical bases,
/// where pi zeroes the coordinates of simplices absent from X_t.
double cochain_map_check(const Filtration& f, const SheafSpec& s, int q,
                         double t, double p);

}  // namespace psl::oracle
