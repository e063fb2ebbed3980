#include <CLI11.hpp>

#include "cli.hpp"
#include "psl/errors.hpp"

int main(int argc, char** argv) {
    psl::cli::RunConfig config;
    std::string tgrid_spec, p_spec, q_spec = "0,1";

    CLI::App app{"Persistent sheaf Laplacian spectra for labeled point clouds"};
    app.set_config("--config", "", "Read options from an INI/TOML file; "
                                   "command-line flags take precedence");

    app.add_option("--input", config.input_path, "Input file")->required();
    app.add_option("--format", config.format,
                   "Input format: csv | pqr | filtration | auto")
        ->check(CLI::IsMember({"csv", "pqr", "filtration", "auto"}));
    app.add_option("--filtration", config.filtration_source,
                   "Filtration source: rips (from points) | import (from file)")
        ->check(CLI::IsMember({"rips", "import"}));
    app.add_option("--rmax", config.r_max, "Rips scale cap");
    app.add_option("--dmax", config.dim_max, "Maximum simplex dimension");
    app.add_option("--sheaf", config.sheaf_kind, "Sheaf kind: constant | labeled")
        ->check(CLI::IsMember({"constant", "labeled"}));
    app.add_option("--weight", config.weight,
                   "Cell weight function: default | sum | one")
        ->check(CLI::IsMember({"default", "sum", "one"}));
    app.add_option("--q", q_spec, "Cohomology degrees, e.g. 0,1");
    app.add_option("--tgrid", tgrid_spec,
                   "Scale grid: explicit list a,b,c or min:max:count")
        ->required();
    app.add_option("--p", p_spec, "Persistence offsets, e.g. 0,0.2");
    app.add_option("--tol", config.tol_zero, "Relative zero-eigenvalue cutoff");
    app.add_flag("--scale-charges", config.scale_charges,
                 "Rescale labels by mean(label)/max pairwise distance");
    app.add_flag("--drop-zero-charge", config.drop_zero_charge,
                 "Silently skip zero-charge PQR atoms");
    app.add_option("--out-csv", config.out_csv, "Write the record table here");
    app.add_option("--out-svg", config.out_svg_dir,
                   "Directory for per-(channel,q) SVG plots");
    app.add_flag("--dump-spectra", config.dump_spectra,
                 "Also write full spectra next to the CSV");
    app.add_flag("--sign-flip-report", config.sign_flip_report,
                 "Report spectral deviation under single label sign flips");
    app.add_option("--threads", config.threads,
                   "Worker threads for the sweep (0 = hardware)");

    CLI11_PARSE(app, argc, argv);

    try {
        config.t_grid = psl::cli::parse_grid(tgrid_spec);
        if (!p_spec.empty()) config.p_list = psl::cli::parse_grid(p_spec);
        config.qs.clear();
        for (double q : psl::cli::parse_grid(q_spec))
            config.qs.push_back(static_cast<int>(q));
    } catch (const psl::Error& e) {
        std::fprintf(stderr, "error [%s]: %s\n",
                     psl::error_code_name(e.code()), e.what());
        return static_cast<int>(e.code());
    }

    return psl::cli::run(config);
}
