#include <doctest.h>

#include <cmath>

#include "aflab/grid.hpp"
#include "aflab/harmonics.hpp"
#include "aflab/numerics.hpp"

using namespace aflab;

TEST_SUITE("harmonics") {

TEST_CASE("real spherical harmonics are orthonormal under the grid quadrature") {
    const SphereGrid g = grid_s2(16, 32);
    for (int l = 0; l <= 5; ++l)
        for (int m = -l; m <= l; ++m)
            for (int l2 = l; l2 <= 5; ++l2)
                for (int m2 = (l2 == l ? m : -l2); m2 <= l2; ++m2) {
                    double ip = 0.0;
                    for (std::size_t j = 0; j < g.size(); ++j)
                        ip += real_sph_harmonic(l, m, g.nodes[j]) *
                              real_sph_harmonic(l2, m2, g.nodes[j]) * g.weights[j];
                    const double want = (l == l2 && m == m2) ? 1.0 : 0.0;
                    CHECK(std::abs(ip - want) < 1e-12);
                }
}

TEST_CASE("low-degree harmonics match their Cartesian forms") {
    const Eigen::Vector3d xi = Eigen::Vector3d(0.3, -0.5, 1.2).normalized();
    CHECK(real_sph_harmonic(0, 0, xi) == doctest::Approx(std::sqrt(1.0 / (4.0 * kPi))));
    CHECK(real_sph_harmonic(1, 0, xi) == doctest::Approx(std::sqrt(3.0 / (4.0 * kPi)) * xi.z()));
    CHECK(real_sph_harmonic(1, 1, xi) == doctest::Approx(std::sqrt(3.0 / (4.0 * kPi)) * xi.x()));
    CHECK(real_sph_harmonic(1, -1, xi) == doctest::Approx(std::sqrt(3.0 / (4.0 * kPi)) * xi.y()));
}

TEST_CASE("Legendre theta-derivatives agree with finite differences") {
    const int lmax = 12;
    for (int m : {0, 1, 3, 7}) {
        for (double x : {-0.83, -0.21, 0.048, 0.4, 0.92}) {
            const double theta = std::acos(x);
            const double h = 1e-5;
            const LegendreDerivs d = legendre_q_derivs(lmax, m, x);
            const std::vector<double> qp = legendre_q(lmax, m, std::cos(theta + h));
            const std::vector<double> qm = legendre_q(lmax, m, std::cos(theta - h));
            for (int l = m; l <= lmax; ++l) {
                const std::size_t i = static_cast<std::size_t>(l - m);
                const double fd1 = (qp[i] - qm[i]) / (2.0 * h);
                const double fd2 = (qp[i] - 2.0 * d.q[i] + qm[i]) / (h * h);
                CHECK(std::abs(d.qt[i] - fd1) < 1e-6 * std::max(1.0, std::abs(fd1)));
                CHECK(std::abs(d.qtt[i] - fd2) < 2e-4 * std::max(1.0, std::abs(fd2)));
            }
        }
    }
}

TEST_CASE("circular harmonics are orthonormal on S^1") {
    const SphereGrid g = grid_s1(64);
    auto ip = [&](int l1, bool c1, int l2, bool c2) {
        double s = 0.0;
        for (std::size_t j = 0; j < g.size(); ++j)
            s += real_circ_harmonic(l1, c1, g.theta[j]) * real_circ_harmonic(l2, c2, g.theta[j]) *
                 g.weights[j];
        return s;
    };
    CHECK(ip(0, true, 0, true) == doctest::Approx(1.0));
    CHECK(ip(2, true, 2, true) == doctest::Approx(1.0));
    CHECK(ip(2, false, 2, false) == doctest::Approx(1.0));
    CHECK(std::abs(ip(2, true, 2, false)) < 1e-14);
    CHECK(std::abs(ip(2, true, 3, true)) < 1e-14);
    CHECK(std::abs(ip(0, true, 1, true)) < 1e-14);
}

}  // TEST_SUITE
