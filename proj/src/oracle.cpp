#include "aflab/oracle.hpp"

#include <cmath>

#include "aflab/errors.hpp"
#include "aflab/measures.hpp"
#include "aflab/numerics.hpp"
#include "aflab/sample.hpp"

namespace aflab {

EllipseReference ellipse_reference(double a, double b) {
    if (!(a >= b && b > 0.0)) throw DomainError("ellipse_reference: need a >= b > 0");
    EllipseReference r;
    r.a = a;
    r.b = b;
    r.area = kPi * a * b;
    r.perimeter = 4.0 * a * elliptic_E(1.0 - (b * b) / (a * a));
    r.kappa_max = a / (b * b);
    r.kappa_min = b / (a * a);
    return r;
}

OffcenterBallReference offcenter_ball_reference(double R, const Eigen::Vector3d& c, int n) {
    if (!(c.norm() < R)) throw DomainError("offcenter_ball_reference: need |c| < R");
    if (n != 1 && n != 2) throw DomainError("offcenter_ball_reference: n must be 1 or 2");
    OffcenterBallReference out;
    const double omega = sphere_area(n);
    const double c2 = c.squaredNorm();
    out.values["I_-1"] = omega * std::pow(R, n + 1);
    for (int k = 0; k <= n; ++k) out.values["I_" + std::to_string(k)] = omega * std::pow(R, n - k);
    out.values["volume"] = ball_volume(n + 1) * std::pow(R, n + 1);
    out.values["hn_x2"] = omega * (R * R + c2);
    // int <c, xi>^2 dtheta = |c|^2 omega_n / (n+1); H_k dmu = R^{n-k} dtheta.
    out.values["delta2_sq"] = c2 * omega / (n + 1.0);
    for (int k = 0; k <= n; ++k)
        out.values["delta2k_sq_" + std::to_string(k)] = std::pow(R, n - k) * c2 * omega / (n + 1.0);
    for (int k = 1; k <= n; ++k)
        out.values["newton_form_" + std::to_string(k)] = std::pow(R, n - k) * c2 * omega / (n + 1.0);
    out.values["mean_width"] = 2.0 * R;
    out.values["thm1_lhs"] = omega * c2;
    out.values["thm1_rhs"] = omega * c2;
    out.steiner = c;
    return out;
}

namespace {

double quantity_on_samples(const SampleSet& samples, const std::string& quantity) {
    if (quantity.rfind("I_", 0) == 0) return quermass(samples, std::stoi(quantity.substr(2)));
    if (quantity == "hn_x2")
        return weighted_curvature_integral(samples, samples.n,
                                           [](double, double x2, int) { return x2; });
    if (quantity.rfind("newton_form_", 0) == 0) {
        const int k = std::stoi(quantity.substr(12));
        return newton_form_integral(samples, k, [](double) { return 1.0; });
    }
    if (quantity.rfind("delta2k_sq_", 0) == 0) {
        // delta2k_sq_<k>_r<radius>
        const std::string rest = quantity.substr(11);
        const auto sep = rest.find("_r");
        if (sep == std::string::npos) throw UsageError("quantity needs _r<radius>: " + quantity);
        const int k = std::stoi(rest.substr(0, sep));
        const double r = std::stod(rest.substr(sep + 2));
        const double d = weighted_L2_distance(samples, k, Ball{Eigen::Vector3d::Zero(), r});
        return d * d;
    }
    throw UsageError("dense_quadrature_crosscheck: unknown quantity '" + quantity + "'");
}

}  // namespace

OracleReport dense_quadrature_crosscheck(const Shape& shape, const std::string& quantity,
                                         const SphereGrid& grid) {
    OracleReport rep;
    rep.quantity = quantity;
    rep.main_value = quantity_on_samples(sample_shape(shape, grid), quantity);
    const SphereGrid dense = grid.dim == 1 ? grid_s1(16 * grid.n_theta)
                                           : grid_s2(4 * grid.n_lat, 4 * grid.n_lon);
    rep.oracle_value = quantity_on_samples(sample_shape(shape, dense), quantity);
    rep.rel_error = std::abs(rep.main_value - rep.oracle_value) /
                    std::max({std::abs(rep.oracle_value), std::abs(rep.main_value), 1e-300});
    return rep;
}

std::vector<OracleReport> oracle_reference_suite() {
    std::vector<OracleReport> out;
    auto push = [&out](const std::string& q, double oracle, double main) {
        OracleReport r;
        r.quantity = q;
        r.oracle_value = oracle;
        r.main_value = main;
        r.rel_error = std::abs(main - oracle) / std::max({std::abs(oracle), std::abs(main), 1e-300});
        out.push_back(r);
    };

    {
        const EllipseReference er = ellipse_reference(2.0, 1.0);
        const SphereGrid g = grid_s1(128);
        const SampleSet s = sample_shape(make_ellipse_parametric(2.0, 1.0), g);
        push("ellipse_2_1.perimeter", er.perimeter, quermass(s, 0));
        push("ellipse_2_1.area", er.area, enclosed_volume(s));
        // Second opinion on the AGM value itself.
        const double quad = adaptive_simpson(
            [](double t) {
                const double dx = -2.0 * std::sin(t), dy = std::cos(t);
                return std::hypot(dx, dy);
            },
            0.0, kTwoPi, 1e-13);
        push("ellipse_2_1.perimeter_agm_vs_quadrature", quad, er.perimeter);
    }

    for (int n : {1, 2}) {
        const Eigen::Vector3d c(0.3, 0.0, 0.0);
        const OffcenterBallReference ref = offcenter_ball_reference(1.0, c, n);
        const SphereGrid g = n == 1 ? grid_s1(128) : grid_s2(48, 96);
        const SampleSet s = sample_shape(make_ball_support(n, 1.0, c), g);
        const std::string tag = "offcenter_ball_n" + std::to_string(n) + ".";
        push(tag + "I_0", ref.values.at("I_0"), quermass(s, 0));
        push(tag + "I_-1", ref.values.at("I_-1"), quermass(s, -1));
        push(tag + "hn_x2", ref.values.at("hn_x2"),
             weighted_curvature_integral(s, n, [](double, double x2, int) { return x2; }));
        const double d1 = weighted_L2_distance(s, 1, Ball{Eigen::Vector3d::Zero(), 1.0});
        push(tag + "delta2k_sq_1", ref.values.at("delta2k_sq_1"), d1 * d1);
        push(tag + "newton_form_1", ref.values.at("newton_form_1"),
             newton_form_integral(s, 1, [](double) { return 1.0; }));
        const Eigen::VectorXd h = field_on_grid(
            [&c](const Eigen::Vector3d& xi) { return 1.0 + c.dot(xi); }, g);
        push(tag + "steiner_x", ref.steiner.x(), steiner_point(h, g).x());
        push(tag + "mean_width", ref.values.at("mean_width"), mean_width(h, g));
    }
    return out;
}

}  // namespace aflab
