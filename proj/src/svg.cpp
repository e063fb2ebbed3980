#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "psl/io.hpp"

namespace psl {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 400.0;
constexpr double kMarginLeft = 64.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 28.0;
constexpr double kMarginBottom = 48.0;

const char* kSeriesColors[] = {"#1f77b4", "#d62728", "#2ca02c",
                               "#9467bd", "#ff7f0e", "#8c564b"};

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

std::string fmt_full(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

struct Series {
    double p;
    std::vector<std::pair<double, double>> pts;  // (t, value)
};

}  // namespace

std::string emit_svg(const std::vector<PSLRecord>& records, PlotChannel channel, int q) {
    std::map<double, Series> by_p;
    for (const auto& r : records) {
        if (r.q != q) continue;
        double value;
        if (channel == PlotChannel::Betti) {
            value = static_cast<double>(r.betti);
        } else {
            if (!r.lambda_min) continue;
            value = *r.lambda_min;
        }
        auto& s = by_p[r.p];
        s.p = r.p;
        s.pts.emplace_back(r.t, value);
    }
    if (by_p.empty())
        throw Error(ErrorCode::NoData,
                    "no records for the requested channel and q");

    double t_min = std::numeric_limits<double>::infinity(), t_max = -t_min;
    double v_max = 0.0;
    for (auto& [p, s] : by_p) {
        std::sort(s.pts.begin(), s.pts.end());
        for (auto& [t, v] : s.pts) {
            t_min = std::min(t_min, t);
            t_max = std::max(t_max, t);
            v_max = std::max(v_max, v);
        }
    }
    if (t_max == t_min) t_max = t_min + 1.0;
    if (v_max <= 0.0) v_max = 1.0;

    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    auto sx = [&](double t) { return kMarginLeft + (t - t_min) / (t_max - t_min) * plot_w; };
    auto sy = [&](double v) { return kHeight - kMarginBottom - v / v_max * plot_h; };

    const bool betti = channel == PlotChannel::Betti;
    const std::string y_name = (betti ? "beta_" : "lambda_") + std::to_string(q);

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           fmt(kWidth) + "\" height=\"" + fmt(kHeight) + "\" viewBox=\"0 0 " +
           fmt(kWidth) + " " + fmt(kHeight) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + fmt(kWidth / 2) + "\" y=\"18\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"14\">" + y_name + " vs t</text>\n";

    // Axes
    svg += "<line x1=\"" + fmt(kMarginLeft) + "\" y1=\"" + fmt(kHeight - kMarginBottom) +
           "\" x2=\"" + fmt(kWidth - kMarginRight) + "\" y2=\"" +
           fmt(kHeight - kMarginBottom) + "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + fmt(kMarginLeft) + "\" y1=\"" + fmt(kMarginTop) +
           "\" x2=\"" + fmt(kMarginLeft) + "\" y2=\"" +
           fmt(kHeight - kMarginBottom) + "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        double t = t_min + (t_max - t_min) * i / 5.0;
        double v = v_max * i / 5.0;
        svg += "<text x=\"" + fmt(sx(t)) + "\" y=\"" + fmt(kHeight - kMarginBottom + 18) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
               fmt(t) + "</text>\n";
        svg += "<text x=\"" + fmt(kMarginLeft - 6) + "\" y=\"" + fmt(sy(v) + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
               fmt(v) + "</text>\n";
        svg += "<line x1=\"" + fmt(kMarginLeft) + "\" y1=\"" + fmt(sy(v)) + "\" x2=\"" +
               fmt(kWidth - kMarginRight) + "\" y2=\"" + fmt(sy(v)) +
               "\" stroke=\"#dddddd\"/>\n";
    }
    svg += "<text x=\"" + fmt(kWidth / 2) + "\" y=\"" + fmt(kHeight - 10) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">t</text>\n";

    int color_idx = 0;
    double legend_y = kMarginTop + 6.0;
    for (const auto& [p, s] : by_p) {
        const char* color = kSeriesColors[color_idx % 6];
        ++color_idx;

        // Raw data, for inspection and structural tests.
        svg += "<!-- series q=" + std::to_string(q) + " p=" + fmt_full(p) + ":";
        for (const auto& [t, v] : s.pts)
            svg += " (" + fmt_full(t) + "," + fmt_full(v) + ")";
        svg += " -->\n";

        std::string pts;
        for (std::size_t i = 0; i < s.pts.size(); ++i) {
            const auto& [t, v] = s.pts[i];
            if (betti && i > 0)  // horizontal-then-vertical step
                pts += fmt(sx(t)) + "," + fmt(sy(s.pts[i - 1].second)) + " ";
            pts += fmt(sx(t)) + "," + fmt(sy(v)) + " ";
        }
        if (!pts.empty()) pts.pop_back();
        svg += "<polyline fill=\"none\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";

        svg += "<text x=\"" + fmt(kWidth - kMarginRight - 6) + "\" y=\"" +
               fmt(legend_y) + "\" text-anchor=\"end\" font-family=\"sans-serif\" "
               "font-size=\"11\" fill=\"";
        svg += color;
        svg += "\">p=" + fmt(p) + "</text>\n";
        legend_y += 14.0;
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace psl
