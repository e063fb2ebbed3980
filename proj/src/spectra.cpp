#include "psl/spectra.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

#include <Eigen/Eigenvalues>

namespace psl {

std::vector<double> spectrum(const SymMatrix& l) {
    const Eigen::Index n = l.m.rows();
    if (n != l.m.cols())
        throw Error(ErrorCode::NonSymmetric, "matrix is not square");
    if (n == 0) return {};

    double scale = l.m.cwiseAbs().maxCoeff();
    double defect = (l.m - l.m.transpose()).cwiseAbs().maxCoeff();
    if (defect > 1e-12 * (1.0 + scale))
        throw Error(ErrorCode::NonSymmetric, "matrix symmetry defect too large");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(l.m, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw Error(ErrorCode::InvalidParameter, "eigendecomposition failed");
    std::vector<double> eigs(es.eigenvalues().data(), es.eigenvalues().data() + n);
    std::sort(eigs.begin(), eigs.end());
    return eigs;
}

SpectrumSummary summarize(const std::vector<double>& eigs, double tol_zero) {
    SpectrumSummary out;
    if (eigs.empty()) return out;
    double max_abs = 0.0;
    for (double e : eigs) max_abs = std::max(max_abs, std::abs(e));
    const double cut = tol_zero * std::max(1.0, max_abs);
    for (double e : eigs) {
        if (std::abs(e) <= cut) {
            ++out.betti;
        } else if (e > cut && (!out.lambda_min || e < *out.lambda_min)) {
            out.lambda_min = e;
        }
    }
    return out;
}

namespace {

// Runs fn(0..n-1) across worker threads; rethrows the first exception.
void parallel_for_index(std::size_t n, int threads,
                        const std::function<void(std::size_t)>& fn) {
    if (n == 0) return;
    unsigned hw = std::thread::hardware_concurrency();
    std::size_t n_workers = threads > 0 ? static_cast<std::size_t>(threads)
                                        : std::max(1u, hw);
    n_workers = std::min(n_workers, n);
    if (n_workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto work = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                next.store(n);  // stop handing out cells
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (std::size_t w = 0; w < n_workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

std::vector<PSLRecord> sweep(const Filtration& f, const SheafSpec& s,
                             const std::vector<int>& qs,
                             const std::vector<double>& t_grid,
                             const std::vector<double>& p_list,
                             double tol_zero, bool keep_spectra, int threads) {
    struct Cell {
        int q;
        double t, p;
    };
    std::vector<Cell> cells;
    cells.reserve(qs.size() * t_grid.size() * p_list.size());
    const double last_birth = f.max_birth();
    for (int q : qs)
        for (double t : t_grid)
            for (double p : p_list) {
                if (p < 0.0)
                    throw Error(ErrorCode::InvalidParameter,
                                "persistence offset p must be >= 0");
                cells.push_back({q, t, p});
            }

    std::vector<PSLRecord> records(cells.size());
    parallel_for_index(cells.size(), threads, [&](std::size_t i) {
        const Cell& c = cells[i];
        // t+p past the last birth is equivalent to the final complex.
        double p_eff = std::min(c.p, std::max(0.0, last_birth - c.t));
        SymMatrix l = persistent_sheaf_laplacian(f, s, c.q, c.t, p_eff);
        std::vector<double> eigs = spectrum(l);
        SpectrumSummary sum = summarize(eigs, tol_zero);
        PSLRecord& r = records[i];
        r.q = c.q;
        r.t = c.t;
        r.p = c.p;
        r.n = static_cast<int>(l.size());
        r.betti = sum.betti;
        r.lambda_min = sum.lambda_min;
        if (keep_spectra) r.spectrum = std::move(eigs);
    });

    std::stable_sort(records.begin(), records.end(),
                     [](const PSLRecord& a, const PSLRecord& b) {
                         if (a.q != b.q) return a.q < b.q;
                         if (a.t != b.t) return a.t < b.t;
                         return a.p < b.p;
                     });
    return records;
}

}  // namespace psl
