#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "psl/sheaf.hpp"
#include "support/generators.hpp"

using namespace psl;
using testsupport::random_cloud;

namespace {

// Equilateral-ish triangle with prescribed labels; edge lengths r01, r02,
// r12 are read back from the coordinates.
LabeledPointCloud triangle_cloud(std::array<double, 3> labels,
                                 bool unit = true) {
    LabeledPointCloud c;
    c.dim = 2;
    if (unit) {
        c.coords = {{0, 0, 0}, {1, 0, 0}, {0.5, std::sqrt(3.0) / 2.0, 0}};
    } else {
        c.coords = {{0, 0, 0}, {1.3, 0, 0}, {0.2, 0.9, 0}};
    }
    c.labels = {labels[0], labels[1], labels[2]};
    return c;
}

Filtration triangle_filtration(const LabeledPointCloud& c) {
    return build_rips(c, 10.0, 2);
}

}  // namespace

TEST_CASE("stalk weights") {
    auto c = triangle_cloud({1, 1, 1});
    CHECK(stalk_weight(WeightChoice::Default, Simplex({0}), c) == 1.0);
    CHECK(stalk_weight(WeightChoice::Default, Simplex({0, 1}), c) == 1.0);
    CHECK(stalk_weight(WeightChoice::Default, Simplex({0, 1, 2}), c) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(stalk_weight(WeightChoice::Sum, Simplex({0, 1, 2}), c) ==
          doctest::Approx(3.0).epsilon(1e-12));
    CHECK(stalk_weight(WeightChoice::One, Simplex({0, 1, 2}), c) == 1.0);

    LabeledPointCloud diag;
    diag.dim = 2;
    diag.coords = {{0, 0, 0}, {1, 1, 0}};
    diag.labels = {1, 1};
    CHECK(stalk_weight(WeightChoice::Default, Simplex({0, 1}), diag) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

    // default F undefined above 2-cells; zero-length edges rejected
    CHECK_THROWS_AS(stalk_weight(WeightChoice::Default, Simplex({0, 1, 2, 3}), c),
                    Error);
    LabeledPointCloud degenerate;
    degenerate.dim = 2;
    degenerate.coords = {{0, 0, 0}, {0, 0, 0}};
    degenerate.labels = {1, 1};
    CHECK_THROWS_AS(stalk_weight(WeightChoice::Default, Simplex({0, 1}), degenerate),
                    Error);
    CHECK(stalk_weight(WeightChoice::One, Simplex({0, 1, 2, 3}), c) == 1.0);
}

TEST_CASE("restriction scalars") {
    auto cloud = triangle_cloud({2.0, -0.5, 1.5}, /*unit=*/false);
    SheafSpec labeled = SheafSpec::labeled(cloud);
    SheafSpec constant = SheafSpec::constant();

    double r01 = cloud.distance(0, 1);
    double r02 = cloud.distance(0, 2);
    double r12 = cloud.distance(1, 2);

    // vertex -> edge is q_other / edge length
    CHECK(restriction_scalar(labeled, Simplex({0}), Simplex({0, 1})) ==
          doctest::Approx(cloud.labels[1] / r01).epsilon(1e-14));
    CHECK(restriction_scalar(labeled, Simplex({1}), Simplex({0, 1})) ==
          doctest::Approx(cloud.labels[0] / r01).epsilon(1e-14));

    // identity on equal simplices; constant sheaf is always 1
    CHECK(restriction_scalar(labeled, Simplex({0, 1}), Simplex({0, 1})) == 1.0);
    CHECK(restriction_scalar(constant, Simplex({0}), Simplex({0, 1, 2})) == 1.0);

    // vertex -> triangle composes through either intermediate edge
    double direct = restriction_scalar(labeled, Simplex({0}), Simplex({0, 1, 2}));
    CHECK(direct == doctest::Approx(cloud.labels[1] * cloud.labels[2] /
                                    (r01 * r02 * r12))
                        .epsilon(1e-13));
    double via01 = restriction_scalar(labeled, Simplex({0}), Simplex({0, 1})) *
                   restriction_scalar(labeled, Simplex({0, 1}), Simplex({0, 1, 2}));
    CHECK(direct == doctest::Approx(via01).epsilon(1e-12));

    CHECK_THROWS_AS(restriction_scalar(labeled, Simplex({3}), Simplex({0, 1})),
                    Error);
}

TEST_CASE("restriction scalars compose over random chains") {
    std::mt19937 rng(8001);
    for (int trial = 0; trial < 25; ++trial) {
        auto cloud = random_cloud(rng, 4, 10);
        Filtration f = testsupport::random_rips(rng, cloud);
        SheafSpec s = SheafSpec::labeled(cloud);
        ComplexView view = complex_at(f, f.max_birth());
        for (const Simplex& tau : view.simplices(2)) {
            for (int i = 0; i <= 2; ++i) {
                Simplex sigma = tau.facet(i);
                for (int j = 0; j <= 1; ++j) {
                    Simplex rho = sigma.facet(j);
                    double direct = restriction_scalar(s, rho, tau);
                    double composed = restriction_scalar(s, sigma, tau) *
                                      restriction_scalar(s, rho, sigma);
                    CHECK(std::abs(direct - composed) <=
                          1e-12 * std::abs(direct));
                }
            }
        }
    }
}

TEST_CASE("pullback consistency across scales") {
    // Coboundary entries for the face relations shared by X_t and X_t'
    // must be identical: the smaller sheaf is the pullback of the larger.
    std::mt19937 rng(8002);
    for (int trial = 0; trial < 10; ++trial) {
        auto cloud = random_cloud(rng, 5, 9);
        Filtration f = build_rips(cloud, 1.5, 2);
        SheafSpec s = SheafSpec::labeled(cloud);
        ComplexView small = complex_at(f, 0.5 * f.max_birth());
        ComplexView big = complex_at(f, f.max_birth());
        for (int q = 0; q + 1 <= small.max_dim(); ++q) {
            IndexedMatrix d_small = coboundary_matrix(small, s, q);
            IndexedMatrix d_big = coboundary_matrix(big, s, q);
            for (std::size_t r = 0; r < d_small.row_index.size(); ++r) {
                int rb = big.position(d_small.row_index[r]);
                REQUIRE(rb >= 0);
                for (std::size_t c = 0; c < d_small.col_index.size(); ++c) {
                    int cb = big.position(d_small.col_index[c]);
                    REQUIRE(cb >= 0);
                    CHECK(d_small.m(static_cast<Eigen::Index>(r),
                                    static_cast<Eigen::Index>(c)) ==
                          d_big.m(rb, cb));
                }
            }
        }
    }
}

TEST_CASE("constant-sheaf coboundaries of the full 2-simplex") {
    auto cloud = triangle_cloud({1, 1, 1});
    Filtration f = triangle_filtration(cloud);
    ComplexView view = complex_at(f, f.max_birth());
    SheafSpec s = SheafSpec::constant();

    IndexedMatrix d0 = coboundary_matrix(view, s, 0);
    REQUIRE(d0.m.rows() == 3);
    REQUIRE(d0.m.cols() == 3);
    // rows 01, 02, 12 over columns 0, 1, 2
    Eigen::MatrixXd expected0(3, 3);
    expected0 << -1, 1, 0, -1, 0, 1, 0, -1, 1;
    CHECK((d0.m - expected0).cwiseAbs().maxCoeff() == 0.0);

    IndexedMatrix d1 = coboundary_matrix(view, s, 1);
    REQUIRE(d1.m.rows() == 1);
    Eigen::MatrixXd expected1(1, 3);
    expected1 << 1, -1, 1;
    CHECK((d1.m - expected1).cwiseAbs().maxCoeff() == 0.0);

    // exact integer route agrees
    Eigen::MatrixXi s0 = coboundary_signs(view, 0);
    Eigen::MatrixXi s1 = coboundary_signs(view, 1);
    CHECK((s0.cast<double>() - expected0).cwiseAbs().maxCoeff() == 0.0);
    CHECK((s1.cast<double>() - expected1).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("labeled coboundaries on the triangle match the closed forms") {
    auto cloud = triangle_cloud({0.7, -1.1, 1.9}, /*unit=*/false);
    double q0 = cloud.labels[0], q1 = cloud.labels[1], q2 = cloud.labels[2];
    double r01 = cloud.distance(0, 1), r02 = cloud.distance(0, 2),
           r12 = cloud.distance(1, 2);
    Filtration f = triangle_filtration(cloud);
    ComplexView view = complex_at(f, f.max_birth());
    SheafSpec s = SheafSpec::labeled(cloud);

    IndexedMatrix d0 = coboundary_matrix(view, s, 0);
    Eigen::MatrixXd expected0(3, 3);
    expected0 << -q1 / r01, q0 / r01, 0,
                 -q2 / r02, 0, q0 / r02,
                 0, -q2 / r12, q1 / r12;
    CHECK((d0.m - expected0).cwiseAbs().maxCoeff() <=
          1e-12 * expected0.cwiseAbs().maxCoeff());

    IndexedMatrix d1 = coboundary_matrix(view, s, 1);
    Eigen::MatrixXd expected1(1, 3);
    expected1 << q2 / (r02 * r12), -q1 / (r01 * r12), q0 / (r01 * r02);
    CHECK((d1.m - expected1).cwiseAbs().maxCoeff() <=
          1e-12 * expected1.cwiseAbs().maxCoeff());

    // above the top dimension the coboundary is 0 x n
    IndexedMatrix d2 = coboundary_matrix(view, s, 2);
    CHECK(d2.m.rows() == 0);
    CHECK(d2.m.cols() == 1);
}

TEST_CASE("d compose d vanishes on random labeled complexes") {
    std::mt19937 rng(8003);
    for (int trial = 0; trial < 25; ++trial) {
        auto cloud = random_cloud(rng, 4, 10);
        Filtration f = testsupport::random_rips(rng, cloud);
        SheafSpec s = SheafSpec::labeled(cloud);
        ComplexView view = complex_at(f, f.max_birth());
        for (int q = 0; q + 2 <= view.max_dim() + 1; ++q) {
            IndexedMatrix dq = coboundary_matrix(view, s, q);
            IndexedMatrix dq1 = coboundary_matrix(view, s, q + 1);
            if (dq1.m.rows() == 0 || dq.m.rows() == 0) continue;
            double residual = (dq1.m * dq.m).cwiseAbs().maxCoeff();
            double scale = std::max(dq.m.cwiseAbs().maxCoeff(),
                                    dq1.m.cwiseAbs().maxCoeff());
            CHECK(residual <= 1e-12 * (1.0 + scale));
        }
    }
}

TEST_CASE("the label vector is a global section in degree zero") {
    std::mt19937 rng(8004);
    for (int trial = 0; trial < 25; ++trial) {
        auto cloud = random_cloud(rng, 3, 10);
        Filtration f = testsupport::random_rips(rng, cloud);
        for (WeightChoice w :
             {WeightChoice::Default, WeightChoice::Sum, WeightChoice::One}) {
            SheafSpec s = SheafSpec::labeled(cloud, w);
            ComplexView view = complex_at(f, f.max_birth());
            IndexedMatrix d0 = coboundary_matrix(view, s, 0);
            Eigen::VectorXd w_vec(view.count(0));
            const auto& verts = view.simplices(0);
            for (Eigen::Index i = 0; i < w_vec.size(); ++i)
                w_vec(i) = s.label(verts[static_cast<std::size_t>(i)][0]) /
                           stalk_weight(w, verts[static_cast<std::size_t>(i)],
                                        cloud);
            if (d0.m.rows() == 0) continue;
            double residual = (d0.m * w_vec).norm();
            CHECK(residual <= 1e-10 * d0.m.norm() * w_vec.norm());
        }
    }
}

TEST_CASE("sheaf spec validation") {
    LabeledPointCloud bad;
    bad.dim = 2;
    bad.coords = {{0, 0, 0}, {1, 0, 0}};
    bad.labels = {1, 0};
    CHECK_THROWS_AS(SheafSpec::labeled(bad), Error);
    CHECK_THROWS_AS(parse_weight_choice("nope"), Error);
    CHECK(parse_weight_choice("sum") == WeightChoice::Sum);
}
