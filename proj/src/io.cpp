#include "psl/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

namespace psl {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            if (start < text.size()) lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        std::size_t end = s.find(sep, start);
        if (end == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, end - start));
        start = end + 1;
    }
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t start = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
}

std::optional<double> parse_double(std::string_view token) {
    token = trim(token);
    if (token.empty()) return std::nullopt;
    double value = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) return std::nullopt;
    return value;
}

std::optional<long> parse_int(std::string_view token) {
    token = trim(token);
    if (token.empty()) return std::nullopt;
    long value = 0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) return std::nullopt;
    return value;
}

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

LabeledPointCloud parse_points_csv(std::string_view text) {
    LabeledPointCloud cloud;
    int n_cols = 0;
    bool first_content = true;
    auto lines = split_lines(text);
    for (std::size_t li = 0; li < lines.size(); ++li) {
        std::string_view line = trim(lines[li]);
        if (line.empty()) continue;
        auto fields = split(line, ',');
        bool is_header = first_content && !parse_double(fields[0]);
        first_content = false;
        if (is_header) continue;
        if (fields.size() < 3 || fields.size() > 4)
            parse_fail(li + 1, "expected x,y[,z],q");
        if (n_cols == 0) {
            n_cols = static_cast<int>(fields.size());
        } else if (static_cast<int>(fields.size()) != n_cols) {
            throw Error(ErrorCode::MixedDimensions,
                        "line " + std::to_string(li + 1) +
                            ": inconsistent column count");
        }
        std::array<double, 3> xyz{0.0, 0.0, 0.0};
        for (std::size_t c = 0; c + 1 < fields.size(); ++c) {
            auto v = parse_double(fields[c]);
            if (!v) parse_fail(li + 1, "bad coordinate");
            xyz[c] = *v;
        }
        auto q = parse_double(fields.back());
        if (!q) parse_fail(li + 1, "bad label");
        if (*q == 0.0)
            throw Error(ErrorCode::ZeroLabel,
                        "line " + std::to_string(li + 1) + ": zero label");
        cloud.coords.push_back(xyz);
        cloud.labels.push_back(*q);
    }
    if (cloud.coords.empty())
        throw Error(ErrorCode::ParseError, "no points in input");
    cloud.dim = n_cols - 1;
    return cloud;
}

LabeledPointCloud parse_pqr(std::string_view text, bool drop_zero_charge) {
    LabeledPointCloud cloud;
    cloud.dim = 3;
    auto lines = split_lines(text);
    for (std::size_t li = 0; li < lines.size(); ++li) {
        std::string_view line = lines[li];
        if (!(line.starts_with("ATOM") || line.starts_with("HETATM"))) continue;
        auto fields = split_ws(line);
        // Record tail is x y z charge radius; field counts vary upstream
        // (chain ids come and go), so index from the end.
        if (fields.size() < 8)
            parse_fail(li + 1, "too few fields in ATOM/HETATM record");
        const std::size_t n = fields.size();
        std::array<double, 3> xyz;
        for (int c = 0; c < 3; ++c) {
            auto v = parse_double(fields[n - 5 + c]);
            if (!v) parse_fail(li + 1, "bad coordinate field");
            xyz[c] = *v;
        }
        auto charge = parse_double(fields[n - 2]);
        auto radius = parse_double(fields[n - 1]);
        if (!charge || !radius) parse_fail(li + 1, "bad charge/radius field");
        if (*charge == 0.0) {
            if (drop_zero_charge) continue;
            throw Error(ErrorCode::ZeroLabel,
                        "line " + std::to_string(li + 1) +
                            ": zero charge (use --drop-zero-charge to skip)");
        }
        cloud.coords.push_back(xyz);
        cloud.labels.push_back(*charge);
        cloud.names.emplace_back(fields.size() > 2 ? fields[2] : std::string_view{});
    }
    if (cloud.coords.empty())
        throw Error(ErrorCode::ParseError, "no ATOM/HETATM records in input");
    return cloud;
}

ScaledCloud scale_charges(const LabeledPointCloud& cloud) {
    if (cloud.size() < 2)
        throw Error(ErrorCode::InvalidParameter,
                    "charge scaling needs at least two points");
    double mean = 0.0;
    for (double q : cloud.labels) mean += q;
    mean /= static_cast<double>(cloud.labels.size());
    if (mean == 0.0)
        throw Error(ErrorCode::DegenerateScale,
                    "mean charge is zero; scaling would zero all labels");
    double max_dist = cloud.max_pairwise_distance();
    if (max_dist == 0.0)
        throw Error(ErrorCode::DegenerateScale, "all points coincide");

    ScaledCloud out;
    out.factor = mean / max_dist;
    out.cloud = cloud;
    for (double& q : out.cloud.labels) q *= out.factor;
    return out;
}

Filtration parse_filtration_file(std::string_view text) {
    std::vector<FiltrationEntry> entries;
    auto lines = split_lines(text);
    for (std::size_t li = 0; li < lines.size(); ++li) {
        std::string_view line = lines[li];
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto fields = split_ws(line);
        if (fields.size() < 2)
            parse_fail(li + 1, "expected 'birth v0 [v1 ...]'");
        auto birth = parse_double(fields[0]);
        if (!birth) parse_fail(li + 1, "bad birth value");
        std::vector<Vertex> verts;
        verts.reserve(fields.size() - 1);
        for (std::size_t i = 1; i < fields.size(); ++i) {
            auto v = parse_int(fields[i]);
            if (!v || *v < 0) parse_fail(li + 1, "bad vertex index");
            verts.push_back(static_cast<Vertex>(*v));
        }
        std::sort(verts.begin(), verts.end());
        if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
            parse_fail(li + 1, "repeated vertex in simplex");
        entries.push_back({Simplex(std::move(verts)), *birth});
    }
    // Filtration's constructor re-sorts and checks closure/duplicates.
    return Filtration(std::move(entries));
}

std::string write_filtration_file(const Filtration& f) {
    std::string out;
    for (const auto& e : f.entries()) {
        out += format_real(e.birth);
        for (Vertex v : e.simplex.vertices()) {
            out += ' ';
            out += std::to_string(v);
        }
        out += '\n';
    }
    return out;
}

std::string write_records_csv(std::vector<PSLRecord> records) {
    std::stable_sort(records.begin(), records.end(),
                     [](const PSLRecord& a, const PSLRecord& b) {
                         if (a.q != b.q) return a.q < b.q;
                         if (a.t != b.t) return a.t < b.t;
                         return a.p < b.p;
                     });
    std::string out = "q,t,p,n,betti,lambda_min\n";
    for (const auto& r : records) {
        out += std::to_string(r.q);
        out += ',';
        out += format_real(r.t);
        out += ',';
        out += format_real(r.p);
        out += ',';
        out += std::to_string(r.n);
        out += ',';
        out += std::to_string(r.betti);
        out += ',';
        if (r.lambda_min) out += format_real(*r.lambda_min);
        out += '\n';
    }
    return out;
}

std::vector<PSLRecord> parse_records_csv(std::string_view text) {
    std::vector<PSLRecord> records;
    auto lines = split_lines(text);
    for (std::size_t li = 0; li < lines.size(); ++li) {
        std::string_view line = trim(lines[li]);
        if (line.empty()) continue;
        if (li == 0 && line.starts_with("q,")) continue;
        auto fields = split(line, ',');
        if (fields.size() != 6) parse_fail(li + 1, "expected 6 columns");
        PSLRecord r;
        auto q = parse_int(fields[0]);
        auto t = parse_double(fields[1]);
        auto p = parse_double(fields[2]);
        auto n = parse_int(fields[3]);
        auto betti = parse_int(fields[4]);
        if (!q || !t || !p || !n || !betti)
            parse_fail(li + 1, "bad record field");
        r.q = static_cast<int>(*q);
        r.t = *t;
        r.p = *p;
        r.n = static_cast<int>(*n);
        r.betti = static_cast<int>(*betti);
        if (!trim(fields[5]).empty()) {
            auto lm = parse_double(fields[5]);
            if (!lm) parse_fail(li + 1, "bad lambda_min field");
            r.lambda_min = *lm;
        }
        records.push_back(std::move(r));
    }
    return records;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::IoError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error(ErrorCode::IoError, "cannot write " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out)
        throw Error(ErrorCode::IoError, "write failed for " + path);
}

}  // namespace psl
