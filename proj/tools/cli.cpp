#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>
#include <sstream>

#include "psl/complex.hpp"
#include "psl/errors.hpp"
#include "psl/io.hpp"
#include "psl/sheaf.hpp"
#include "psl/spectra.hpp"

namespace psl::cli {

namespace {

std::string infer_format(const std::string& path) {
    auto ext = std::filesystem::path(path).extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (ext == ".pqr") return "pqr";
    if (ext == ".flt" || ext == ".filtration") return "filtration";
    return "csv";
}

std::string fmt_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void print_summary(const std::vector<PSLRecord>& records) {
    std::printf("%4s %12s %12s %6s %6s %s\n", "q", "t", "p", "n", "betti",
                "lambda_min");
    for (const auto& r : records) {
        std::printf("%4d %12.6g %12.6g %6d %6d %s\n", r.q, r.t, r.p, r.n,
                    r.betti,
                    r.lambda_min ? fmt_real(*r.lambda_min).c_str() : "-");
    }
}

std::string spectra_dump(const std::vector<PSLRecord>& records) {
    std::string out = "q,t,p,idx,eigenvalue\n";
    for (const auto& r : records) {
        for (std::size_t i = 0; i < r.spectrum.size(); ++i) {
            out += std::to_string(r.q) + ',' + fmt_real(r.t) + ',' +
                   fmt_real(r.p) + ',' + std::to_string(i) + ',' +
                   fmt_real(r.spectrum[i]) + '\n';
        }
    }
    return out;
}

// Flips one label's sign at a time and reports how far any eigenvalue
// moves. Exploratory output only; nothing is asserted.
void sign_flip_report(const Filtration& f, const LabeledPointCloud& cloud,
                      WeightChoice weight, const RunConfig& config,
                      const std::vector<PSLRecord>& baseline) {
    std::printf("\nsign-flip report (max |eigenvalue shift| per flipped vertex):\n");
    double overall = 0.0;
    for (std::size_t v = 0; v < cloud.size(); ++v) {
        LabeledPointCloud flipped = cloud;
        flipped.labels[v] = -flipped.labels[v];
        SheafSpec s = SheafSpec::labeled(flipped, weight);
        auto records = sweep(f, s, config.qs, config.t_grid, config.p_list,
                             config.tol_zero, /*keep_spectra=*/true,
                             config.threads);
        double dev = 0.0;
        for (std::size_t i = 0; i < records.size(); ++i) {
            const auto& a = baseline[i].spectrum;
            const auto& b = records[i].spectrum;
            for (std::size_t j = 0; j < a.size() && j < b.size(); ++j)
                dev = std::max(dev, std::abs(a[j] - b[j]));
        }
        std::printf("  vertex %zu: %.3e\n", v, dev);
        overall = std::max(overall, dev);
    }
    std::printf("  overall: %.3e\n", overall);
}

}  // namespace

std::vector<double> parse_grid(const std::string& spec) {
    std::vector<double> out;
    if (spec.find(':') != std::string::npos) {
        double lo, hi;
        int count;
        if (std::sscanf(spec.c_str(), "%lf:%lf:%d", &lo, &hi, &count) != 3 ||
            count < 1)
            throw Error(ErrorCode::InvalidParameter,
                        "grid spec must be min:max:count");
        if (count == 1) {
            out.push_back(lo);
        } else {
            double step = (hi - lo) / (count - 1);
            for (int i = 0; i < count; ++i) out.push_back(lo + i * step);
        }
        return out;
    }
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw Error(ErrorCode::InvalidParameter, "bad grid value: " + tok);
        }
    }
    return out;
}

int run(const RunConfig& config) {
    try {
        if (config.t_grid.empty())
            throw Error(ErrorCode::InvalidParameter,
                        "t grid is empty (use --tgrid)");
        if (!std::is_sorted(config.t_grid.begin(), config.t_grid.end()))
            throw Error(ErrorCode::InvalidParameter, "t grid must be sorted");
        for (int q : config.qs)
            if (q < 0)
                throw Error(ErrorCode::InvalidParameter, "q must be >= 0");

        std::string format = config.format == "auto"
                                 ? infer_format(config.input_path)
                                 : config.format;
        std::string text = read_file(config.input_path);

        Filtration filtration;
        std::shared_ptr<const LabeledPointCloud> cloud;
        double scale_factor = 1.0;

        if (format == "filtration") {
            filtration = parse_filtration_file(text);
        } else {
            LabeledPointCloud parsed =
                format == "pqr" ? parse_pqr(text, config.drop_zero_charge)
                                : parse_points_csv(text);
            if (config.scale_charges) {
                ScaledCloud scaled = scale_charges(parsed);
                parsed = std::move(scaled.cloud);
                scale_factor = scaled.factor;
            }
            if (config.filtration_source != "rips")
                throw Error(ErrorCode::InvalidParameter,
                            "point-cloud input requires --filtration rips");
            cloud = std::make_shared<LabeledPointCloud>(std::move(parsed));
            filtration = build_rips(cloud, config.r_max, config.dim_max);
        }

        SheafSpec sheaf = [&] {
            if (config.sheaf_kind == "constant") return SheafSpec::constant();
            if (config.sheaf_kind != "labeled")
                throw Error(ErrorCode::InvalidParameter,
                            "sheaf kind must be constant or labeled");
            if (!cloud)
                throw Error(ErrorCode::InvalidParameter,
                            "labeled sheaf needs point-cloud input (imported "
                            "filtrations carry no labels; use --sheaf constant)");
            return SheafSpec::labeled(cloud, parse_weight_choice(config.weight));
        }();

        bool want_spectra = config.dump_spectra || config.sign_flip_report;
        auto records = sweep(filtration, sheaf, config.qs, config.t_grid,
                             config.p_list, config.tol_zero, want_spectra,
                             config.threads);

        std::printf("input: %s (%s)\n", config.input_path.c_str(), format.c_str());
        if (cloud) std::printf("points: %zu\n", cloud->size());
        if (config.scale_charges)
            std::printf("charge scale factor: %s\n", fmt_real(scale_factor).c_str());
        std::printf("filtration: %zu simplices, max birth %s\n",
                    filtration.entries().size(),
                    fmt_real(filtration.max_birth()).c_str());
        print_summary(records);

        if (!config.out_csv.empty())
            write_file(config.out_csv, write_records_csv(records));
        if (config.dump_spectra && !config.out_csv.empty())
            write_file(config.out_csv + ".spectra.csv", spectra_dump(records));
        if (!config.out_svg_dir.empty()) {
            std::filesystem::create_directories(config.out_svg_dir);
            for (int q : config.qs) {
                auto dir = std::filesystem::path(config.out_svg_dir);
                write_file((dir / ("betti_q" + std::to_string(q) + ".svg")).string(),
                           emit_svg(records, PlotChannel::Betti, q));
                bool any_lambda = std::any_of(
                    records.begin(), records.end(), [&](const PSLRecord& r) {
                        return r.q == q && r.lambda_min.has_value();
                    });
                if (any_lambda)
                    write_file((dir / ("lambda_q" + std::to_string(q) + ".svg")).string(),
                               emit_svg(records, PlotChannel::Lambda, q));
            }
        }

        if (config.sign_flip_report) {
            if (!cloud || sheaf.kind() != SheafKind::Labeled)
                throw Error(ErrorCode::InvalidParameter,
                            "--sign-flip-report needs a labeled sheaf");
            sign_flip_report(filtration, *cloud, parse_weight_choice(config.weight),
                             config, records);
        }
        return 0;
    } catch (const Error& e) {
        std::fprintf(stderr, "error [%s]: %s\n", error_code_name(e.code()),
                     e.what());
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}

}  // namespace psl::cli
