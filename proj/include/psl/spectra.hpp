#pragma once

#include <optional>
#include <vector>

#include "psl/laplacian.hpp"

namespace psl {

/// Default relative cutoff separating harmonic (zero) eigenvalues from the
/// nonzero spectrum.
inline constexpr double kDefaultZeroTol = 1e-8;

/// One sample of a persistent-sheaf-Laplacian sweep.
struct PSLRecord {
    int q = 0;
    double t = 0.0;
    double p = 0.0;
    int n = 0;      // matrix size (# q-simplices of X_t)
    int betti = 0;  // multiplicity of the zero eigenvalue
    std::optional<double> lambda_min;  // minimal nonzero eigenvalue
    std::vector<double> spectrum;      // full spectrum, kept only on request
};

/// All eigenvalues of a symmetric matrix, ascending. Rejects matrices whose
/// symmetry defect exceeds 1e-12 relative.
std::vector<double> spectrum(const SymMatrix& l);

struct SpectrumSummary {
    int betti = 0;
    std::optional<double> lambda_min;
};

/// Splits a sorted spectrum at the cut tol_zero * max(1, max|lambda|):
/// betti counts eigenvalues inside the cut, lambda_min is the smallest one
/// above it (absent when the spectrum is entirely harmonic or empty).
SpectrumSummary summarize(const std::vector<double>& eigs, double tol_zero);

/// Evaluates the persistent sheaf Laplacian over the (q, t, p) grid and
/// summarizes each cell. Cells are independent and run on worker threads;
/// records come back sorted by (q, t, p). threads = 0 picks the hardware
/// concurrency.
std::vector<PSLRecord> sweep(const Filtration& f, const SheafSpec& s,
                             const std::vector<int>& qs,
                             const std::vector<double>& t_grid,
                             const std::vector<double>& p_list,
                             double tol_zero = kDefaultZeroTol,
                             bool keep_spectra = false, int threads = 0);

}  // namespace psl
