#pragma once

#include <Eigen/Core>
#include <map>
#include <string>
#include <vector>

#include "aflab/grid.hpp"
#include "aflab/shape.hpp"

namespace aflab {

struct OracleReport {
    std::string quantity;
    double oracle_value = 0.0;
    double main_value = 0.0;
    double rel_error = 0.0;
};

/// Closed-form reference data for the ellipse x^2/a^2 + y^2/b^2 = 1.
/// Perimeter via the AGM evaluation of the complete elliptic integral E.
struct EllipseReference {
    double a, b;
    double perimeter;
    double area;
    double kappa_min, kappa_max;
};
EllipseReference ellipse_reference(double a, double b);

/// Closed forms for the ball of radius R centered at c (|c| < R so the
/// origin is interior), surface dimension n. Keys:
///   I_-1 .. I_n, hn_x2 (= int H_n |X|^2 dmu), delta2_sq (= delta_2(Omega,
///   B_0(R))^2), delta2k_sq_<k>, newton_form_<k> (psi = 1), mean_width,
///   thm1_lhs, thm1_rhs, volume.
struct OffcenterBallReference {
    std::map<std::string, double> values;
    Eigen::Vector3d steiner;
};
OffcenterBallReference offcenter_ball_reference(double R, const Eigen::Vector3d& c, int n);

/// Recompute a quantity on a >= 16x denser grid and compare with the value
/// from the default spectral path. Quantity ids: I_-1..I_n, hn_x2,
/// delta2k_sq_<k>_r<r>, newton_form_<k>.
OracleReport dense_quadrature_crosscheck(const Shape& shape, const std::string& quantity,
                                         const SphereGrid& grid);

/// The canonical reference set used by the `oracle` CLI subcommand.
std::vector<OracleReport> oracle_reference_suite();

}  // namespace aflab
