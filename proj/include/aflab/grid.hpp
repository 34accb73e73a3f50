#pragma once

#include <Eigen/Core>
#include <memory>
#include <string>
#include <vector>

namespace aflab {

/// Quadrature nodes, weights and tangential differentiation operators on
/// S^1 or S^2. Nodes are unit vectors in R^{dim+1} (z = 0 on S^1); weights
/// sum to |S^dim|. Neither grid places nodes at the poles.
struct SphereGrid {
    int dim = 1;
    std::vector<Eigen::Vector3d> nodes;
    std::vector<double> weights;

    // S^1 data: theta_j = 2 pi j / N plus periodic spectral differentiation
    // matrices (Fourier differentiation, exact for trig polynomials of
    // degree < N/2).
    int n_theta = 0;
    std::vector<double> theta;
    Eigen::MatrixXd d1, d2;

    // S^2 data: Gauss-Legendre in cos(colatitude) x uniform longitude.
    // Derivatives go through a real-spherical-harmonic round trip with
    // truncation degree max_degree = min(n_lat - 1, (n_lon - 1) / 2).
    int n_lat = 0, n_lon = 0;
    int max_degree = 0;
    std::vector<double> gl_x, gl_w;
    std::vector<double> colat, lon;

    std::size_t size() const { return nodes.size(); }
    int node_index(int i_lat, int j_lon) const { return i_lat * n_lon + j_lon; }

    /// Index of the node closest to -nodes[j] (exact by construction:
    /// both grids are antipodally symmetric).
    int antipode(int j) const;

    /// First/second derivative of a node-sampled field with respect to the
    /// angle parameter (S^1 only).
    Eigen::VectorXd deriv1(const Eigen::VectorXd& f) const;
    Eigen::VectorXd deriv2(const Eigen::VectorXd& f) const;

    /// Coordinate derivatives of a node-sampled field on S^2, with respect
    /// to colatitude t and longitude p.
    struct SphereDerivs {
        Eigen::VectorXd f_t, f_p, f_tt, f_tp, f_pp;
    };
    SphereDerivs sphere_derivs(const Eigen::VectorXd& f) const;

    /// Expand a node-sampled field into spherical-harmonic coefficients and
    /// back (S^2 only); exact for fields bandlimited to max_degree.
    Eigen::VectorXd harmonic_filter(const Eigen::VectorXd& f) const;

    std::string describe() const;

    struct S2Transform;  // harmonic analysis/synthesis tables
    std::shared_ptr<const S2Transform> transform;
};

/// N uniformly spaced nodes on S^1 with trapezoid weights 2 pi / N.
/// N must be even and >= 8.
SphereGrid grid_s1(int N);

/// Gauss-Legendre x uniform-longitude grid on S^2; weights sum to 4 pi.
/// n_lat >= 8, n_lon >= 16 and even.
SphereGrid grid_s2(int n_lat, int n_lon);

/// Parse "128" (S^1) or "48x96" (S^2) into a grid.
SphereGrid parse_grid(const std::string& text, int dim);

/// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

}  // namespace aflab
