#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "psl/complex.hpp"
#include "psl/point_cloud.hpp"
#include "psl/spectra.hpp"

namespace psl {

/// Parses "x,y[,z],q" rows (optional header line starting with a
/// non-numeric token). The coordinate dimension is inferred from the
/// column count and must be consistent across rows.
LabeledPointCloud parse_points_csv(std::string_view text);

/// Parses PQR ATOM/HETATM records: the last five whitespace-separated
/// fields of a record are x, y, z, charge, radius. Zero-charge atoms are
/// rejected unless drop_zero_charge is set, in which case they are skipped.
LabeledPointCloud parse_pqr(std::string_view text, bool drop_zero_charge = false);

struct ScaledCloud {
    LabeledPointCloud cloud;
    double factor = 1.0;  // mean(labels) / max pairwise distance
};

/// Multiplies every label by mean(labels) / max pairwise distance.
ScaledCloud scale_charges(const LabeledPointCloud& cloud);

/// Parses a filtration file: one "birth v0 v1 ... vk" line per simplex,
/// '#' comments allowed, lines in any order. The result is validated
/// (closure under faces, no duplicates) and normalized to (birth, dim,
/// lex) order.
Filtration parse_filtration_file(std::string_view text);

/// Inverse of parse_filtration_file on normalized filtrations.
std::string write_filtration_file(const Filtration& f);

/// "q,t,p,n,betti,lambda_min" rows in (q,t,p) order; reals carry 17
/// significant digits so a round-trip is bit-stable; lambda_min is empty
/// when absent.
std::string write_records_csv(std::vector<PSLRecord> records);

std::vector<PSLRecord> parse_records_csv(std::string_view text);

enum class PlotChannel { Betti, Lambda };

/// Standalone SVG plot of the chosen channel against t, one series per p:
/// a step plot for Betti counts, a line plot for lambda_min.
std::string emit_svg(const std::vector<PSLRecord>& records, PlotChannel channel, int q);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace psl
