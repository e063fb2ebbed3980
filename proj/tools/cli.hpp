#pragma once

#include <optional>
#include <string>
#include <vector>

namespace psl::cli {

/// Everything one invocation needs; the flag parser fills this in and
/// run() does the work, so tests can drive the pipeline without a process.
struct RunConfig {
    std::string input_path;
    std::string format = "auto";  // csv | pqr | filtration | auto (by extension)

    std::string filtration_source = "rips";  // rips | import
    double r_max = 1.0;
    int dim_max = 2;

    std::string sheaf_kind = "labeled";  // constant | labeled
    std::string weight = "default";      // default | sum | one

    std::vector<int> qs = {0, 1};
    std::vector<double> t_grid;
    std::vector<double> p_list = {0.0};
    double tol_zero = 1e-8;

    bool scale_charges = false;
    bool drop_zero_charge = false;
    bool dump_spectra = false;
    bool sign_flip_report = false;

    std::string out_csv;
    std::string out_svg_dir;
    int threads = 0;
};

/// Parses "a,b,c" or "min:max:count" into a grid.
std::vector<double> parse_grid(const std::string& spec);

/// Full pipeline: parse input, build/import the filtration, sweep, write
/// the CSV/SVG artifacts, print a summary table. Returns the process exit
/// status (0 on success); failures print a diagnostic to stderr and map
/// the error category to a distinct nonzero status.
int run(const RunConfig& config);

}  // namespace psl::cli
