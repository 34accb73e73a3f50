#include <doctest.h>

#include <cmath>

#include "aflab/errors.hpp"
#include "aflab/measures.hpp"
#include "aflab/numerics.hpp"
#include "aflab/sample.hpp"
#include "aflab/shapespec.hpp"
#include "shape_factory.hpp"

using namespace aflab;

namespace {

void check_pointwise_invariants(const SampleSet& s) {
    for (std::size_t j = 0; j < s.size(); ++j) {
        const SurfaceSample& q = s.s[j];
        CHECK(std::abs(q.nu.norm() - 1.0) < 1e-12);
        CHECK(q.jac > 0.0);
        double t2 = 0.0;
        for (int i = 0; i < s.n; ++i) t2 += q.tang[static_cast<std::size_t>(i)] * q.tang[static_cast<std::size_t>(i)];
        const double want = q.X.squaredNorm() - q.u * q.u;
        CHECK(std::abs(t2 - want) < 1e-10 * std::max(1.0, std::abs(want)));
        // principal directions are tangent and orthonormal
        for (int i = 0; i < s.n; ++i) {
            CHECK(std::abs(q.dir[static_cast<std::size_t>(i)].norm() - 1.0) < 1e-10);
            CHECK(std::abs(q.dir[static_cast<std::size_t>(i)].dot(q.nu)) < 1e-10);
        }
        if (s.n == 2) CHECK(std::abs(q.dir[0].dot(q.dir[1])) < 1e-10);
    }
}

}  // namespace

TEST_SUITE("sampling") {

TEST_CASE("centered ball as support body") {
    const double R = 1.7;
    for (int dim : {1, 2}) {
        const SphereGrid g = dim == 1 ? grid_s1(32) : grid_s2(12, 24);
        const SampleSet s = sample_shape(make_ball_support(dim, R, Eigen::Vector3d::Zero()), g);
        for (std::size_t j = 0; j < s.size(); ++j) {
            const SurfaceSample& q = s.s[j];
            CHECK(q.u == doctest::Approx(R));
            for (int i = 0; i < dim; ++i)
                CHECK(q.kappa[static_cast<std::size_t>(i)] == doctest::Approx(1.0 / R).epsilon(1e-11));
            CHECK(q.jac == doctest::Approx(std::pow(R, dim)).epsilon(1e-11));
            CHECK(std::abs(q.tang[0]) < 1e-10);
        }
        check_pointwise_invariants(s);
    }
}

TEST_CASE("off-center ball: closed-form support algebra") {
    const Eigen::Vector3d c(0.2, -0.1, 0.15);
    const double R = 1.0;
    for (int dim : {1, 2}) {
        Eigen::Vector3d cc = c;
        if (dim == 1) cc.z() = 0.0;
        const SphereGrid g = dim == 1 ? grid_s1(64) : grid_s2(16, 32);
        const SampleSet s = sample_shape(make_ball_support(dim, R, cc), g);
        for (std::size_t j = 0; j < s.size(); ++j) {
            const SurfaceSample& q = s.s[j];
            const double cdot = cc.dot(g.nodes[j]);
            CHECK(q.u == doctest::Approx(R + cdot).epsilon(1e-12));
            CHECK(q.kappa[0] == doctest::Approx(1.0 / R).epsilon(1e-10));
            double t2 = 0.0;
            for (int i = 0; i < dim; ++i) t2 += q.tang[static_cast<std::size_t>(i)] * q.tang[static_cast<std::size_t>(i)];
            CHECK(t2 == doctest::Approx(cc.squaredNorm() - cdot * cdot).epsilon(1e-9));
        }
        check_pointwise_invariants(s);
    }
}

TEST_CASE("degree-2 harmonic support body passes invariants and convexity") {
    const SphereGrid g = grid_s2(24, 48);
    const auto h = harmonic_field(2, 1.0, {{2, 0, 0.05}});
    const SampleSet s = sample_shape(SupportBody{2, h}, g);
    check_pointwise_invariants(s);
}

TEST_CASE("support body convexity violation names a node") {
    const SphereGrid g = grid_s1(32);
    const SupportBody bad{1, [](const Eigen::Vector3d& xi) {
                              const double t = std::atan2(xi.y(), xi.x());
                              return 1.0 + 0.5 * std::cos(2.0 * t);
                          }};
    CHECK_THROWS_AS(sample_shape(Shape{bad}, g), ShapeError);
}

TEST_CASE("radial ball reproduces the support-body samples") {
    const double R = 2.3;
    for (int dim : {1, 2}) {
        const SphereGrid g = dim == 1 ? grid_s1(32) : grid_s2(12, 24);
        const SampleSet a = sample_shape(make_ball_radial(dim, R), g);
        const SampleSet b = sample_shape(make_ball_support(dim, R, Eigen::Vector3d::Zero()), g);
        for (std::size_t j = 0; j < a.size(); ++j) {
            CHECK((a.s[j].X - b.s[j].X).norm() < 1e-10);
            CHECK(a.s[j].u == doctest::Approx(b.s[j].u).epsilon(1e-11));
            CHECK(a.s[j].kappa[0] == doctest::Approx(b.s[j].kappa[0]).epsilon(1e-10));
            CHECK(a.s[j].jac == doctest::Approx(b.s[j].jac).epsilon(1e-10));
        }
        check_pointwise_invariants(a);
    }
}

TEST_CASE("ellipse as a radial graph: closed-form curvature at the apex") {
    // N = 256 so the Fourier tail of the radial field is below 1e-10.
    const SphereGrid g = grid_s1(256);  // theta = 0 is a node
    const SampleSet s = sample_shape(make_ellipse_radial(2.0, 1.0), g);
    CHECK(s.s[0].kappa[0] == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(s.s[0].u == doctest::Approx(2.0).epsilon(1e-10));
    check_pointwise_invariants(s);
}

TEST_CASE("wobbly S^1 radial graph stays finite") {
    const SphereGrid g = grid_s1(64);
    const RadialGraph r{1, [](const Eigen::Vector3d& xi) {
                            return 1.0 + 0.1 * std::cos(2.0 * std::atan2(xi.y(), xi.x()));
                        }};
    const SampleSet s = sample_shape(Shape{r}, g);
    for (const SurfaceSample& q : s.s) {
        CHECK(std::isfinite(q.kappa[0]));
        CHECK(std::isfinite(q.u));
        CHECK(q.jac > 0.0);
    }
    check_pointwise_invariants(s);
}

TEST_CASE("S^2 radial graph with harmonic bumps") {
    const SphereGrid g = grid_s2(24, 48);
    const auto r = harmonic_field(2, 1.0, {{2, 1, 0.08}, {3, -1, 0.04}});
    const SampleSet s = sample_shape(RadialGraph{2, r}, g);
    check_pointwise_invariants(s);
}

TEST_CASE("radial graph rejects nonpositive r") {
    const SphereGrid g = grid_s1(32);
    const RadialGraph bad{1, [](const Eigen::Vector3d& xi) { return xi.x(); }};
    CHECK_THROWS_AS(sample_shape(Shape{bad}, g), ShapeError);
}

TEST_CASE("parametric circle and translated circle") {
    const SphereGrid g = grid_s1(32);
    const SampleSet s = sample_shape(make_ellipse_parametric(1.0, 1.0), g);
    for (const SurfaceSample& q : s.s) {
        CHECK(q.kappa[0] == doctest::Approx(1.0).epsilon(1e-11));
        CHECK(q.u == doctest::Approx(1.0).epsilon(1e-11));
    }
    const ParametricCurve shifted{[](double t) { return std::cos(t) + 0.3; },
                                  [](double t) { return std::sin(t); }, "", ""};
    const SampleSet s2 = sample_shape(Shape{shifted}, g);
    for (std::size_t j = 0; j < s2.size(); ++j) {
        CHECK(s2.s[j].kappa[0] == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(s2.s[j].u == doctest::Approx(1.0 + 0.3 * std::cos(g.theta[j])).epsilon(1e-10));
    }
}

TEST_CASE("parametric ellipse at t = 0") {
    const SphereGrid g = grid_s1(64);
    const SampleSet s = sample_shape(make_ellipse_parametric(2.0, 1.0), g);
    CHECK((s.s[0].X - Eigen::Vector3d(2, 0, 0)).norm() < 1e-12);
    CHECK(s.s[0].kappa[0] == doctest::Approx(2.0).epsilon(1e-10));
    CHECK((s.s[0].nu - Eigen::Vector3d(1, 0, 0)).norm() < 1e-10);
    CHECK(s.s[0].u == doctest::Approx(2.0).epsilon(1e-10));
    check_pointwise_invariants(s);
}

TEST_CASE("clockwise curves are reversed to counterclockwise") {
    const ParametricCurve cw{[](double t) { return std::cos(-t); },
                             [](double t) { return std::sin(-t); }, "", ""};
    const SampleSet s = sample_shape(Shape{cw}, grid_s1(32));
    for (const SurfaceSample& q : s.s) CHECK(q.kappa[0] == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("parametric regularity failure") {
    const ParametricCurve cusp{[](double t) { return std::pow(std::cos(t), 3); },
                               [](double t) { return std::pow(std::sin(t), 3); }, "", ""};
    CHECK_THROWS_AS(sample_shape(Shape{cusp}, grid_s1(32)), ShapeError);
}

TEST_CASE("sampler equivalence: one ball, three representations") {
    const double R = 1.4;
    const SphereGrid g = grid_s1(64);
    const SampleSet a = sample_shape(make_ball_support(1, R, Eigen::Vector3d::Zero()), g);
    const SampleSet b = sample_shape(make_ball_radial(1, R), g);
    const SampleSet c = sample_shape(make_ellipse_parametric(R, R), g);
    for (int k = -1; k <= 1; ++k) {
        const double qa = quermass(a, k);
        CHECK(quermass(b, k) == doctest::Approx(qa).epsilon(1e-10));
        CHECK(quermass(c, k) == doctest::Approx(qa).epsilon(1e-10));
        CHECK(qa == doctest::Approx(kTwoPi * std::pow(R, 1 - k)).epsilon(1e-10));
    }
}

TEST_CASE("Gauss-Bonnet on convex closed curves") {
    const SphereGrid g = grid_s1(128);
    for (const Shape& s : {make_ellipse_parametric(2.0, 1.0), make_ellipse_radial(1.5, 0.8),
                           testshapes::random_convex_support(1, 4, 0.15, 3)}) {
        const SampleSet samples = sample_shape(s, g);
        CHECK(quermass(samples, 1) == doctest::Approx(kTwoPi).epsilon(1e-10));
    }
}

TEST_CASE("refinement convergence of integral quantities") {
    const Shape e = make_ellipse_parametric(2.0, 1.0);
    const double l16 = quermass(sample_shape(e, grid_s1(16)), 0);
    const double l32 = quermass(sample_shape(e, grid_s1(32)), 0);
    const double l64 = quermass(sample_shape(e, grid_s1(64)), 0);
    CHECK(std::abs(l64 - l32) < 0.05 * std::abs(l32 - l16));
}

TEST_CASE("check_hypotheses levels") {
    const SphereGrid g = grid_s1(64);
    const SampleSet ball = sample_shape(make_ball_support(1, 1.0, Eigen::Vector3d::Zero()), g);
    CHECK(check_hypotheses(ball, HypothesisLevel::Convex).pass);
    CHECK(check_hypotheses(ball, HypothesisLevel::StrictlyConvex).pass);
    CHECK(check_hypotheses(ball, HypothesisLevel::KConvex, 1).pass);
    CHECK(check_hypotheses(ball, HypothesisLevel::StarShaped).pass);

    const SampleSet ell = sample_shape(make_ellipse_parametric(2.0, 1.0), grid_s1(256));
    const HypothesisReport strict = check_hypotheses(ell, HypothesisLevel::StrictlyConvex);
    CHECK(strict.pass);
    CHECK(strict.min_value == doctest::Approx(0.25).epsilon(1e-6));

    const RadialGraph wery{1, [](const Eigen::Vector3d& xi) {
                               return 1.0 + 0.45 * std::cos(2.0 * std::atan2(xi.y(), xi.x()));
                           }};
    const SampleSet w = sample_shape(Shape{wery}, g);
    CHECK_FALSE(check_hypotheses(w, HypothesisLevel::Convex).pass);
    CHECK(check_hypotheses(w, HypothesisLevel::StarShaped).pass);
}

TEST_CASE("shape translation") {
    const Eigen::Vector3d v(0.3, -0.2, 0.0);
    const Shape ball = make_ball_support(1, 1.0, Eigen::Vector3d::Zero());
    const Shape moved = translate(ball, v);
    const Shape back = translate(moved, -v);
    const SphereGrid g = grid_s1(32);
    const auto& h0 = std::get<SupportBody>(ball).h;
    const auto& h2 = std::get<SupportBody>(back).h;
    for (const Eigen::Vector3d& xi : g.nodes) {
        CHECK(std::abs(h2(xi) - h0(xi)) < 1e-14);
        CHECK(std::abs(std::get<SupportBody>(moved).h(xi) - (1.0 + v.dot(xi))) < 1e-14);
    }
    // identity translation keeps a radial graph a radial graph
    const Shape r = make_ball_radial(2, 1.0);
    CHECK(std::holds_alternative<RadialGraph>(translate(r, Eigen::Vector3d::Zero())));
    CHECK_THROWS_AS(translate(r, v), ShapeError);
    // S^1 radial graphs re-express as parametric curves
    const Shape rc = translate(make_ball_radial(1, 1.0), v);
    CHECK(std::holds_alternative<ParametricCurve>(rc));
    const SampleSet rs = sample_shape(rc, g);
    for (std::size_t j = 0; j < rs.size(); ++j)
        CHECK(rs.s[j].kappa[0] == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("translated samples match samples of the translated shape") {
    const Eigen::Vector3d v(0.25, 0.1, 0.0);
    const SphereGrid g = grid_s1(64);
    const SampleSet a =
        translated(sample_shape(make_ball_support(1, 1.0, Eigen::Vector3d::Zero()), g), v);
    const SampleSet b = sample_shape(make_ball_support(1, 1.0, v), g);
    for (std::size_t j = 0; j < a.size(); ++j) {
        CHECK((a.s[j].X - b.s[j].X).norm() < 1e-12);
        CHECK(a.s[j].u == doctest::Approx(b.s[j].u).epsilon(1e-12));
        CHECK(a.s[j].tang[0] == doctest::Approx(b.s[j].tang[0]).epsilon(1e-9));
    }
}

TEST_CASE("dimension mismatch is a usage error") {
    CHECK_THROWS_AS(sample_shape(make_ball_support(2, 1.0, Eigen::Vector3d::Zero()), grid_s1(32)),
                    UsageError);
    CHECK_THROWS_AS(sample_shape(make_ellipse_parametric(1.0, 1.0), grid_s2(8, 16)), UsageError);
}

}  // TEST_SUITE
