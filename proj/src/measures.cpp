#include "aflab/measures.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>

#include "aflab/errors.hpp"
#include "aflab/numerics.hpp"
#include "aflab/symfun.hpp"

namespace aflab {

BodyConstants::BodyConstants(int n_) : n(n_) {
    if (n != 1 && n != 2) throw ConfigError("BodyConstants: n must be 1 or 2");
    omega_n = sphere_area(n);
    unit_ball_vol = ball_volume(n + 1);
    eta_n = (n + 2.0) / (n * std::pow(unit_ball_vol, n));
    c_n = 2.0 * ball_volume(n) / ((n + 1.0) * (n + 2.0));
}

namespace {

// Reduce f(sample, node) over the surface measure with deterministic
// pairwise summation.
double integrate(const SampleSet& samples,
                 const std::function<double(const SurfaceSample&, int)>& f) {
    std::vector<double> terms(samples.size());
    for (std::size_t j = 0; j < samples.size(); ++j) {
        const SurfaceSample& q = samples.s[j];
        terms[j] = f(q, static_cast<int>(j)) * q.jac * q.w;
    }
    return pairwise_sum(terms);
}

double mean_curv(const SampleSet& samples, std::size_t j, int k) {
    if (k == 0) return 1.0;
    if (samples.n == 1) return samples.s[j].kappa[0];  // H_k with k = n = 1
    if (k == 1) return 0.5 * (samples.s[j].kappa[0] + samples.s[j].kappa[1]);
    return samples.s[j].kappa[0] * samples.s[j].kappa[1];
}

}  // namespace

double quermass(const SampleSet& samples, int k) {
    if (k < -1 || k > samples.n)
        throw DomainError("quermass: k = " + std::to_string(k) + " out of range [-1, " +
                          std::to_string(samples.n) + "]");
    if (k == -1) return integrate(samples, [](const SurfaceSample& q, int) { return q.u; });
    return integrate(samples, [&](const SurfaceSample&, int j) {
        return mean_curv(samples, static_cast<std::size_t>(j), k);
    });
}

double enclosed_volume(const SampleSet& samples) {
    return quermass(samples, -1) / (samples.n + 1.0);
}

double weighted_curvature_integral(const SampleSet& samples, int k,
                                   const std::function<double(double, double, int)>& weight) {
    if (k < 0 || k > samples.n) throw DomainError("weighted_curvature_integral: k out of range");
    return integrate(samples, [&](const SurfaceSample& q, int j) {
        const double w = weight(q.u, q.X.squaredNorm(), j);
        if (!std::isfinite(w))
            throw DomainError("weight is not finite at node " + std::to_string(j));
        return mean_curv(samples, static_cast<std::size_t>(j), k) * w;
    });
}

namespace {

// (T_{k-1} o A)(X^T, X^T) unrolled for n <= 2; matches
// newton_shape_quadratic (asserted by a unit test) without the per-node
// allocations of the generic path.
double newton_quadratic_point(const SurfaceSample& q, int n, int k) {
    if (n == 1) return q.kappa[0] * q.tang[0] * q.tang[0];
    const double p1 = q.tang[0] * q.tang[0], p2 = q.tang[1] * q.tang[1];
    if (k == 1) return q.kappa[0] * p1 + q.kappa[1] * p2;
    // k = 2: t_1(i) = sigma_1 - kappa_i, so kappa_i t_1(i) = kappa_1 kappa_2.
    return q.kappa[0] * q.kappa[1] * (p1 + p2);
}

}  // namespace

double newton_form_integral(const SampleSet& samples, int k,
                            const std::function<double(double)>& psi) {
    if (k < 1 || k > samples.n) throw DomainError("newton_form_integral: k out of range");
    const double norm = 1.0 / (k * binomial(samples.n, k));
    return norm * integrate(samples, [&](const SurfaceSample& q, int j) {
        const double p = psi(q.u);
        if (!std::isfinite(p))
            throw DomainError("psi(u) is not finite at node " + std::to_string(j));
        return newton_quadratic_point(q, samples.n, k) * p;
    });
}

double weighted_L2_distance(const SampleSet& samples, int k, const Ball& ball) {
    if (!ball.center.isZero(0.0))
        throw UsageError("weighted_L2_distance: reference ball must be centered at the origin");
    double hscale = 0.0;
    for (std::size_t j = 0; j < samples.size(); ++j)
        hscale = std::max(hscale, std::abs(mean_curv(samples, j, k)));
    for (std::size_t j = 0; j < samples.size(); ++j) {
        const double hk = mean_curv(samples, j, k);
        if (hk < -1e-10 * std::max(1.0, hscale))
            throw HypothesisError("weighted_L2_distance: H_k negative at node " + std::to_string(j));
    }
    const double total = integrate(samples, [&](const SurfaceSample& q, int j) {
        const double d = q.u - ball.radius;
        return d * d * mean_curv(samples, static_cast<std::size_t>(j), k);
    });
    return std::sqrt(std::max(0.0, total));
}

double l2_distance_support(const Eigen::VectorXd& hK, const Eigen::VectorXd& hL,
                           const SphereGrid& grid) {
    if (hK.size() != hL.size() || hK.size() != static_cast<Eigen::Index>(grid.size()))
        throw UsageError("l2_distance_support: fields must live on the same grid");
    std::vector<double> terms(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const double d = hK[static_cast<Eigen::Index>(j)] - hL[static_cast<Eigen::Index>(j)];
        terms[j] = d * d * grid.weights[j];
    }
    return std::sqrt(pairwise_sum(terms));
}

double hausdorff_support(const Eigen::VectorXd& hK, const Eigen::VectorXd& hL) {
    if (hK.size() != hL.size()) throw UsageError("hausdorff_support: field size mismatch");
    return (hK - hL).cwiseAbs().maxCoeff();
}

Eigen::Vector3d steiner_point(const Eigen::VectorXd& h, const SphereGrid& grid) {
    Eigen::Vector3d z = Eigen::Vector3d::Zero();
    for (std::size_t j = 0; j < grid.size(); ++j)
        z += h[static_cast<Eigen::Index>(j)] * grid.weights[j] * grid.nodes[j];
    return z / ball_volume(grid.dim + 1);
}

double mean_width(const Eigen::VectorXd& h, const SphereGrid& grid) {
    double s = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j) s += h[static_cast<Eigen::Index>(j)] * grid.weights[j];
    return 2.0 * s / sphere_area(grid.dim);
}

double delta2_sq_to_ball(const SampleSet& samples, const Ball& ball) {
    const double total = integrate(samples, [&](const SurfaceSample& q, int j) {
        const double d = q.u - ball.radius - ball.center.dot(q.nu);
        return d * d * mean_curv(samples, static_cast<std::size_t>(j), samples.n);
    });
    return std::max(0.0, total);
}

double hausdorff_to_ball(const SampleSet& samples, const Ball& ball) {
    double m = 0.0;
    for (const SurfaceSample& q : samples.s)
        m = std::max(m, std::abs(q.u - ball.radius - ball.center.dot(q.nu)));
    return m;
}

Eigen::Vector3d steiner_point_samples(const SampleSet& samples) {
    Eigen::Vector3d z = Eigen::Vector3d::Zero();
    for (std::size_t j = 0; j < samples.size(); ++j) {
        const SurfaceSample& q = samples.s[j];
        z += q.u * mean_curv(samples, j, samples.n) * q.jac * q.w * q.nu;
    }
    return z / ball_volume(samples.n + 1);
}

double mean_width_samples(const SampleSet& samples) {
    const double s = integrate(samples, [&](const SurfaceSample& q, int j) {
        return q.u * mean_curv(samples, static_cast<std::size_t>(j), samples.n);
    });
    return 2.0 * s / sphere_area(samples.n);
}

// ---------------------------------------------------------------------------
// Smallest enclosing ball.
// ---------------------------------------------------------------------------

namespace {

// Exact ball through 0..(d+1) boundary points (circumball). Empty set gives
// radius -1 so that every point is "outside".
Ball ball_through(const std::vector<Eigen::Vector3d>& b) {
    Ball out;
    out.radius = -1.0;
    const std::size_t k = b.size();
    if (k == 0) return out;
    if (k == 1) {
        out.center = b[0];
        out.radius = 0.0;
        return out;
    }
    if (k == 2) {
        out.center = 0.5 * (b[0] + b[1]);
        out.radius = (b[0] - out.center).norm();
        return out;
    }
    // Circumcenter through k >= 3 points, constrained to their affine hull:
    // c = p_0 + sum y_i v_i with v_i = p_i - p_0 and Gram system
    // G y = (|v_i|^2 / 2). Keeps the 3-points-in-R^3 case in-plane.
    const int rows = static_cast<int>(k) - 1;
    Eigen::MatrixXd G(rows, rows);
    Eigen::VectorXd rhs(rows);
    std::vector<Eigen::Vector3d> v(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) v[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(i + 1)] - b[0];
    for (int i = 0; i < rows; ++i) {
        rhs[i] = 0.5 * v[static_cast<std::size_t>(i)].squaredNorm();
        for (int j = 0; j < rows; ++j) G(i, j) = v[static_cast<std::size_t>(i)].dot(v[static_cast<std::size_t>(j)]);
    }
    const Eigen::FullPivLU<Eigen::MatrixXd> lu(G);
    if (!lu.isInvertible()) {
        // Degenerate boundary (collinear/coplanar): fall back to the widest
        // diametral ball of the set.
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j) {
                Ball cand;
                cand.center = 0.5 * (b[i] + b[j]);
                cand.radius = (b[i] - cand.center).norm();
                if (cand.radius > out.radius) out = cand;
            }
        return out;
    }
    const Eigen::VectorXd y = lu.solve(rhs);
    out.center = b[0];
    for (int i = 0; i < rows; ++i) out.center += y[i] * v[static_cast<std::size_t>(i)];
    out.radius = (b[0] - out.center).norm();
    return out;
}

bool inside(const Ball& ball, const Eigen::Vector3d& p) {
    if (ball.radius < 0.0) return false;
    const double slack = 1e-12 * std::max(1.0, ball.radius);
    return (p - ball.center).norm() <= ball.radius + slack;
}

Ball welzl(std::vector<Eigen::Vector3d>& pts, std::size_t n, std::vector<Eigen::Vector3d>& boundary,
           int d) {
    if (n == 0 || boundary.size() == static_cast<std::size_t>(d) + 1) return ball_through(boundary);
    Ball ball = welzl(pts, n - 1, boundary, d);
    const Eigen::Vector3d p = pts[n - 1];
    if (inside(ball, p)) return ball;
    boundary.push_back(p);
    ball = welzl(pts, n - 1, boundary, d);
    boundary.pop_back();
    // Move-to-front: points that defined a ball get retested early.
    std::rotate(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(n - 1),
                pts.begin() + static_cast<std::ptrdiff_t>(n));
    return ball;
}

}  // namespace

Ball min_enclosing_ball(const std::vector<Eigen::Vector3d>& points, int ambient_dim) {
    if (points.empty()) throw UsageError("min_enclosing_ball: empty point set");
    if (ambient_dim != 2 && ambient_dim != 3)
        throw UsageError("min_enclosing_ball: ambient dimension must be 2 or 3");
    std::vector<Eigen::Vector3d> pts = points;
    std::mt19937 rng(20240517u);
    std::shuffle(pts.begin(), pts.end(), rng);
    std::vector<Eigen::Vector3d> boundary;
    return welzl(pts, pts.size(), boundary, ambient_dim);
}

Ball circumball(const SampleSet& samples) {
    std::vector<Eigen::Vector3d> pts(samples.size());
    for (std::size_t j = 0; j < samples.size(); ++j) pts[j] = samples.s[j].X;
    return min_enclosing_ball(pts, samples.n + 1);
}

double isoperimetric_deficit(const SampleSet& samples) {
    const BodyConstants bc(samples.n);
    const double area = quermass(samples, 0);
    const double vol = enclosed_volume(samples);
    return std::pow(area / bc.omega_n, samples.n + 1) - std::pow(vol / bc.unit_ball_vol, samples.n);
}

}  // namespace aflab
