#include <doctest.h>

#include <cmath>

#include "aflab/errors.hpp"
#include "aflab/grid.hpp"
#include "aflab/numerics.hpp"

using namespace aflab;

TEST_SUITE("grid") {

TEST_CASE("S^1 weights, nodes and quadrature exactness") {
    const SphereGrid g = grid_s1(16);
    double wsum = 0.0, quad = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) {
        wsum += g.weights[j];
        CHECK(std::abs(g.nodes[j].norm() - 1.0) < 1e-14);
        const double c = std::cos(g.theta[j]);
        quad += c * c * g.weights[j];
    }
    CHECK(std::abs(wsum - kTwoPi) < 1e-14);
    CHECK(std::abs(quad - kPi) < 1e-14);
    CHECK_THROWS_AS(grid_s1(4), ConfigError);
    CHECK_THROWS_AS(grid_s1(9), ConfigError);
}

TEST_CASE("S^1 spectral differentiation") {
    const SphereGrid g = grid_s1(16);
    Eigen::VectorXd f(16), ones(16);
    for (int j = 0; j < 16; ++j) {
        f[j] = std::sin(g.theta[static_cast<std::size_t>(j)]);
        ones[j] = 1.0;
    }
    const Eigen::VectorXd df = g.deriv1(f);
    const Eigen::VectorXd d2f = g.deriv2(f);
    for (int j = 0; j < 16; ++j) {
        CHECK(std::abs(df[j] - std::cos(g.theta[static_cast<std::size_t>(j)])) < 1e-12);
        CHECK(std::abs(d2f[j] + f[j]) < 1e-11);
    }
    CHECK(g.deriv1(ones).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(g.deriv2(ones).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("S^1 antipode map") {
    const SphereGrid g = grid_s1(32);
    for (std::size_t j = 0; j < g.size(); ++j)
        CHECK((g.nodes[j] + g.nodes[static_cast<std::size_t>(g.antipode(static_cast<int>(j)))]).norm() <
              1e-13);
}

TEST_CASE("S^2 weights and moments") {
    const SphereGrid g = grid_s2(24, 48);
    double wsum = 0.0, m1 = 0.0, m2 = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) {
        CHECK(std::abs(g.nodes[j].norm() - 1.0) < 1e-14);
        wsum += g.weights[j];
        m1 += g.nodes[j].x() * g.weights[j];
        m2 += g.nodes[j].x() * g.nodes[j].x() * g.weights[j];
    }
    CHECK(std::abs(wsum - 4.0 * kPi) < 1e-12 * 4.0 * kPi);
    CHECK(std::abs(m1) < 1e-13);
    CHECK(std::abs(m2 - 4.0 * kPi / 3.0) < 1e-12);
    CHECK_THROWS_AS(grid_s2(4, 48), ConfigError);
    CHECK_THROWS_AS(grid_s2(24, 8), ConfigError);
    CHECK_THROWS_AS(grid_s2(24, 47), ConfigError);
}

TEST_CASE("S^2 coordinate derivatives against a closed form") {
    const SphereGrid g = grid_s2(16, 32);
    const std::size_t N = g.size();
    Eigen::VectorXd f(static_cast<Eigen::Index>(N)), ones(static_cast<Eigen::Index>(N));
    // f = sin(t) cos(p) = xi_x, a degree-1 harmonic.
    for (int i = 0; i < g.n_lat; ++i)
        for (int j = 0; j < g.n_lon; ++j) {
            const Eigen::Index idx = g.node_index(i, j);
            f[idx] = std::sin(g.colat[static_cast<std::size_t>(i)]) * std::cos(g.lon[static_cast<std::size_t>(j)]);
            ones[idx] = 1.0;
        }
    const SphereGrid::SphereDerivs d = g.sphere_derivs(f);
    for (int i = 0; i < g.n_lat; ++i)
        for (int j = 0; j < g.n_lon; ++j) {
            const Eigen::Index idx = g.node_index(i, j);
            const double t = g.colat[static_cast<std::size_t>(i)], p = g.lon[static_cast<std::size_t>(j)];
            CHECK(std::abs(d.f_t[idx] - std::cos(t) * std::cos(p)) < 1e-10);
            CHECK(std::abs(d.f_p[idx] + std::sin(t) * std::sin(p)) < 1e-10);
            CHECK(std::abs(d.f_tt[idx] + std::sin(t) * std::cos(p)) < 1e-10);
            CHECK(std::abs(d.f_tp[idx] + std::cos(t) * std::sin(p)) < 1e-10);
            CHECK(std::abs(d.f_pp[idx] + std::sin(t) * std::cos(p)) < 1e-10);
        }
    const SphereGrid::SphereDerivs dc = g.sphere_derivs(ones);
    CHECK(dc.f_t.cwiseAbs().maxCoeff() < 1e-10);
    CHECK(dc.f_p.cwiseAbs().maxCoeff() < 1e-10);
    CHECK(dc.f_tt.cwiseAbs().maxCoeff() < 1e-10);
    CHECK(dc.f_pp.cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("S^2 harmonic round trip is exact for bandlimited fields") {
    const SphereGrid g = grid_s2(12, 24);
    Eigen::VectorXd f(static_cast<Eigen::Index>(g.size()));
    for (std::size_t j = 0; j < g.size(); ++j) {
        const Eigen::Vector3d& xi = g.nodes[j];
        f[static_cast<Eigen::Index>(j)] =
            1.0 + 0.3 * xi.x() + 0.2 * xi.z() * xi.z() + 0.1 * xi.x() * xi.y();
    }
    CHECK((g.harmonic_filter(f) - f).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("S^2 antipode map") {
    const SphereGrid g = grid_s2(8, 16);
    for (std::size_t j = 0; j < g.size(); ++j)
        CHECK((g.nodes[j] + g.nodes[static_cast<std::size_t>(g.antipode(static_cast<int>(j)))]).norm() <
              1e-13);
}

TEST_CASE("parse_grid") {
    CHECK(parse_grid("64", 1).n_theta == 64);
    const SphereGrid g = parse_grid("16x32", 2);
    CHECK(g.n_lat == 16);
    CHECK(g.n_lon == 32);
    CHECK_THROWS_AS(parse_grid("64", 2), UsageError);
    CHECK_THROWS_AS(parse_grid("16x32", 1), UsageError);
}

TEST_CASE("Gauss-Legendre nodes integrate high-degree polynomials") {
    std::vector<double> x, w;
    gauss_legendre(12, x, w);
    // degree 22 monomial: exact value 2/23 for x^22.
    double q = 0.0, ws = 0.0;
    for (int i = 0; i < 12; ++i) {
        q += std::pow(x[static_cast<std::size_t>(i)], 22) * w[static_cast<std::size_t>(i)];
        ws += w[static_cast<std::size_t>(i)];
    }
    CHECK(q == doctest::Approx(2.0 / 23.0).epsilon(1e-13));
    CHECK(ws == doctest::Approx(2.0).epsilon(1e-13));
}

}  // TEST_SUITE
