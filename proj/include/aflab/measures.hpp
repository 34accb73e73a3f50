#pragma once

#include <Eigen/Core>
#include <functional>
#include <vector>

#include "aflab/grid.hpp"
#include "aflab/sample.hpp"

namespace aflab {

/// Dimension-dependent constants for surfaces of dimension n in R^{n+1}.
struct BodyConstants {
    int n;
    double omega_n;        // |S^n|
    double unit_ball_vol;  // |B^{n+1}|
    double eta_n;          // (n+2) / (n |B^{n+1}|^n)
    double c_n;            // 2 |B^n| / ((n+1)(n+2))

    explicit BodyConstants(int n);
};

struct Ball {
    Eigen::Vector3d center = Eigen::Vector3d::Zero();
    double radius = 0.0;
};

/// Quermassintegral I_k = int H_k dmu for k = 0..n; I_{-1} = (n+1)|Omega|
/// evaluated as int u dmu (divergence theorem).
double quermass(const SampleSet& samples, int k);

/// Enclosed volume |Omega| = I_{-1} / (n+1).
double enclosed_volume(const SampleSet& samples);

/// int H_k * weight(u, |X|^2, node) dmu. Throws DomainError when the weight
/// is not finite at some node.
double weighted_curvature_integral(const SampleSet& samples, int k,
                                   const std::function<double(double, double, int)>& weight);

/// (1 / (k C(n,k))) int (T_{k-1} o A)(X^T, X^T) psi(u) dmu.
double newton_form_integral(const SampleSet& samples, int k,
                            const std::function<double(double)>& psi);

/// delta_{2,k}(Omega, B_0(r)) = sqrt(int (u - r)^2 H_k dmu). Requires
/// H_k >= 0 on the samples (HypothesisError otherwise); ball must be
/// centered at the origin.
double weighted_L2_distance(const SampleSet& samples, int k, const Ball& ball);

/// L^2(S^n, dtheta) distance of two support fields on a shared grid.
double l2_distance_support(const Eigen::VectorXd& hK, const Eigen::VectorXd& hL,
                           const SphereGrid& grid);

/// Sup-norm distance of two support fields (Hausdorff distance for convex
/// bodies), reported as a grid max.
double hausdorff_support(const Eigen::VectorXd& hK, const Eigen::VectorXd& hL);

/// Steiner point z = (1/|B^{n+1}|) int h(xi) xi dtheta of a support field.
Eigen::Vector3d steiner_point(const Eigen::VectorXd& h, const SphereGrid& grid);

/// Mean width = 2 x (spherical mean of the support field).
double mean_width(const Eigen::VectorXd& h, const SphereGrid& grid);

/// Gauss-map pushforward analogues for convex sampled bodies: dtheta =
/// H_n dmu turns direction-space integrals into sample reductions, so these
/// work for every representation, not just support bodies.
double delta2_sq_to_ball(const SampleSet& samples, const Ball& ball);
double hausdorff_to_ball(const SampleSet& samples, const Ball& ball);
Eigen::Vector3d steiner_point_samples(const SampleSet& samples);
double mean_width_samples(const SampleSet& samples);

/// Smallest enclosing ball (Welzl move-to-front, exact support sets).
Ball min_enclosing_ball(const std::vector<Eigen::Vector3d>& points, int ambient_dim);
Ball circumball(const SampleSet& samples);

/// Isoperimetric deficit Phi = (|Sigma|/|S^n|)^{n+1} - (|Omega|/|B^{n+1}|)^n.
double isoperimetric_deficit(const SampleSet& samples);

}  // namespace aflab
