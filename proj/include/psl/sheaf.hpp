#pragma once

#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "psl/complex.hpp"
#include "psl/point_cloud.hpp"

namespace psl {

enum class SheafKind { Constant, Labeled };

/// Cell-weight function F used by the labeled sheaf. All choices are
/// nowhere zero on the complexes they support.
enum class WeightChoice {
    Default,  // vertex -> 1, edge -> length, 2-cell -> product of edge lengths
    Sum,      // like Default, but 2-cell -> sum of edge lengths
    One,      // every cell -> 1 (any dimension)
};

WeightChoice parse_weight_choice(const std::string& name);

/// F(sigma) for the given weight choice; needs point coordinates for
/// length-based weights.
double stalk_weight(WeightChoice f, const Simplex& s, const LabeledPointCloud& points);

/// Sheaf data on a labeled complex: all stalks are R, a restriction map is
/// multiplication by a scalar built from the vertex labels and F.
class SheafSpec {
public:
    static SheafSpec constant();
    static SheafSpec labeled(std::shared_ptr<const LabeledPointCloud> points,
                             WeightChoice f = WeightChoice::Default);
    static SheafSpec labeled(const LabeledPointCloud& points,
                             WeightChoice f = WeightChoice::Default);

    SheafKind kind() const { return kind_; }
    WeightChoice weight() const { return weight_; }
    const LabeledPointCloud& points() const;
    double label(Vertex v) const;

private:
    SheafSpec(SheafKind k, WeightChoice w,
              std::shared_ptr<const LabeledPointCloud> pts)
        : kind_(k), weight_(w), points_(std::move(pts)) {}

    SheafKind kind_;
    WeightChoice weight_;
    std::shared_ptr<const LabeledPointCloud> points_;
};

/// Scalar of the restriction map S_{face <= coface} (any codimension).
/// Constant sheaf: 1. Labeled sheaf: F(face) * prod of labels of the
/// coface vertices absent from the face, divided by F(coface).
double restriction_scalar(const SheafSpec& s, const Simplex& face, const Simplex& coface);

/// A real matrix whose rows and columns are identified with simplices.
struct IndexedMatrix {
    Eigen::MatrixXd m;
    std::vector<Simplex> row_index;
    std::vector<Simplex> col_index;
};

/// Degree-q coboundary matrix: rows are the (q+1)-simplices of the view,
/// columns its q-simplices, entry (tau, sigma) = [sigma:tau] * restriction
/// scalar. Empty dimensions give 0 x n / m x 0 matrices.
IndexedMatrix coboundary_matrix(const ComplexView& view, const SheafSpec& s, int q);

/// Exact integer coboundary of the constant sheaf (entries in {-1,0,1});
/// used for exact regression checks.
Eigen::MatrixXi coboundary_signs(const ComplexView& view, int q);

}  // namespace psl
