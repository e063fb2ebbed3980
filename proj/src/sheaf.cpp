#include "psl/sheaf.hpp"

#include <cmath>
#include <string>

namespace psl {

WeightChoice parse_weight_choice(const std::string& name) {
    if (name == "default") return WeightChoice::Default;
    if (name == "sum") return WeightChoice::Sum;
    if (name == "one") return WeightChoice::One;
    throw Error(ErrorCode::InvalidParameter, "unknown weight choice: " + name);
}

double stalk_weight(WeightChoice f, const Simplex& s, const LabeledPointCloud& points) {
    if (f == WeightChoice::One) return 1.0;
    const int d = s.dim();
    if (d == 0) return 1.0;
    if (d > 2)
        throw Error(ErrorCode::UnsupportedDim,
                    "weight function is only defined up to 2-cells");
    const auto& v = s.vertices();
    auto edge_len = [&](Vertex a, Vertex b) {
        double len = points.distance(a, b);
        if (len == 0.0)
            throw Error(ErrorCode::ZeroWeight,
                        "zero-length edge between vertices " +
                            std::to_string(a) + " and " + std::to_string(b));
        return len;
    };
    if (d == 1) return edge_len(v[0], v[1]);
    // 2-cell: product (Default) or sum (Sum) of the three edge lengths.
    double a = edge_len(v[0], v[1]);
    double b = edge_len(v[0], v[2]);
    double c = edge_len(v[1], v[2]);
    return f == WeightChoice::Sum ? a + b + c : a * b * c;
}

SheafSpec SheafSpec::constant() {
    return SheafSpec(SheafKind::Constant, WeightChoice::One, nullptr);
}

SheafSpec SheafSpec::labeled(std::shared_ptr<const LabeledPointCloud> points,
                             WeightChoice f) {
    if (!points) throw Error(ErrorCode::InvalidParameter, "null point cloud");
    points->validate();
    return SheafSpec(SheafKind::Labeled, f, std::move(points));
}

SheafSpec SheafSpec::labeled(const LabeledPointCloud& points, WeightChoice f) {
    return labeled(std::make_shared<LabeledPointCloud>(points), f);
}

const LabeledPointCloud& SheafSpec::points() const {
    if (!points_)
        throw Error(ErrorCode::InvalidParameter,
                    "constant sheaf has no point cloud");
    return *points_;
}

double SheafSpec::label(Vertex v) const {
    const auto& pc = points();
    if (v < 0 || static_cast<std::size_t>(v) >= pc.labels.size())
        throw Error(ErrorCode::InvalidParameter,
                    "vertex " + std::to_string(v) + " has no label");
    return pc.labels[v];
}

double restriction_scalar(const SheafSpec& s, const Simplex& face, const Simplex& coface) {
    if (face == coface) return 1.0;
    if (!coface.has_face(face))
        throw Error(ErrorCode::NotAFace,
                    face.to_string() + " is not a face of " + coface.to_string());
    if (s.kind() == SheafKind::Constant) return 1.0;

    // F(face) * prod of labels over coface vertices not in face / F(coface).
    double num = stalk_weight(s.weight(), face, s.points());
    for (Vertex v : coface.vertices())
        if (!face.contains(v)) num *= s.label(v);
    return num / stalk_weight(s.weight(), coface, s.points());
}

IndexedMatrix coboundary_matrix(const ComplexView& view, const SheafSpec& s, int q) {
    if (q < 0)
        throw Error(ErrorCode::InvalidParameter, "coboundary degree must be >= 0");
    IndexedMatrix out;
    out.row_index = view.simplices(q + 1);
    out.col_index = view.simplices(q);
    out.m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(out.row_index.size()),
                                  static_cast<Eigen::Index>(out.col_index.size()));
    for (std::size_t r = 0; r < out.row_index.size(); ++r) {
        const Simplex& tau = out.row_index[r];
        for (int i = 0; i <= tau.dim(); ++i) {
            Simplex sigma = tau.facet(i);
            int c = view.position(sigma);
            if (c < 0)
                throw Error(ErrorCode::ClosureViolation,
                            "face " + sigma.to_string() + " missing from view");
            int sign = (i % 2 == 0) ? 1 : -1;
            out.m(static_cast<Eigen::Index>(r), c) =
                sign * restriction_scalar(s, sigma, tau);
        }
    }
    return out;
}

Eigen::MatrixXi coboundary_signs(const ComplexView& view, int q) {
    if (q < 0)
        throw Error(ErrorCode::InvalidParameter, "coboundary degree must be >= 0");
    const auto& rows = view.simplices(q + 1);
    const auto& cols = view.simplices(q);
    Eigen::MatrixXi m = Eigen::MatrixXi::Zero(static_cast<Eigen::Index>(rows.size()),
                                              static_cast<Eigen::Index>(cols.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (int i = 0; i <= rows[r].dim(); ++i) {
            Simplex sigma = rows[r].facet(i);
            int c = view.position(sigma);
            if (c < 0)
                throw Error(ErrorCode::ClosureViolation,
                            "face " + sigma.to_string() + " missing from view");
            m(static_cast<Eigen::Index>(r), c) = (i % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

}  // namespace psl
