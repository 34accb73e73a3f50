#include "aflab/sample.hpp"

#include <cmath>
#include <limits>

#include "aflab/errors.hpp"
#include "aflab/numerics.hpp"

namespace aflab {

namespace {

// Eigen-decomposition of a symmetric 2x2 [[a, b], [b, c]] in closed form.
// Eigenvalues ascending; at umbilic points (gap below 1e-12 of the trace
// scale) any orthonormal basis works and (1,0), (0,1) is returned.
struct Eig2 {
    double lam1, lam2;
    Eigen::Vector2d v1, v2;
};

Eig2 sym_eig2(double a, double b, double c) {
    Eig2 e;
    const double mean = 0.5 * (a + c);
    const double rad = std::hypot(0.5 * (a - c), b);
    e.lam1 = mean - rad;
    e.lam2 = mean + rad;
    const double scale = std::abs(a) + std::abs(c) + std::abs(b);
    if (rad <= 1e-12 * std::max(1.0, scale)) {
        e.v1 = Eigen::Vector2d(1, 0);
        e.v2 = Eigen::Vector2d(0, 1);
        return e;
    }
    // Row of (M - lam2 I) with the larger norm gives the lam1 direction.
    Eigen::Vector2d r1(a - e.lam2, b), r2(b, c - e.lam2);
    Eigen::Vector2d v = (r1.squaredNorm() >= r2.squaredNorm()) ? r1 : r2;
    e.v2 = Eigen::Vector2d(-v.y(), v.x()).normalized();
    e.v1 = Eigen::Vector2d(e.v2.y(), -e.v2.x());
    return e;
}

// Local orthonormal frame on the sphere at colatitude t, longitude p.
struct Frame {
    Eigen::Vector3d xi, e1, e2;
};

Frame sphere_frame(double ct, double st, double cp, double sp) {
    Frame f;
    f.xi = Eigen::Vector3d(st * cp, st * sp, ct);
    f.e1 = Eigen::Vector3d(ct * cp, ct * sp, -st);
    f.e2 = Eigen::Vector3d(-sp, cp, 0.0);
    return f;
}

}  // namespace

Eigen::VectorXd field_on_grid(const std::function<double(const Eigen::Vector3d&)>& f,
                              const SphereGrid& grid) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(grid.size()));
    for (std::size_t j = 0; j < grid.size(); ++j) v[static_cast<Eigen::Index>(j)] = f(grid.nodes[j]);
    return v;
}

SampleSet sample_support_body(const Eigen::VectorXd& h, const SphereGrid& grid) {
    SampleSet out;
    out.n = grid.dim;
    out.grid_desc = grid.describe();
    out.s.resize(grid.size());

    if (grid.dim == 1) {
        const Eigen::VectorXd hp = grid.deriv1(h);
        const Eigen::VectorXd hpp = grid.deriv2(h);
        double wscale = 1.0;
        for (int j = 0; j < grid.n_theta; ++j)
            wscale = std::max(wscale, std::abs(hpp[j] + h[j]));
        const double tol = 1e-10 * wscale;
        for (int j = 0; j < grid.n_theta; ++j) {
            const double W = hpp[j] + h[j];
            if (W <= tol)
                throw ShapeError("support body fails convexity at node " + std::to_string(j) +
                                 " (h'' + h = " + std::to_string(W) + ")");
            SurfaceSample& q = out.s[static_cast<std::size_t>(j)];
            const Eigen::Vector3d xi = grid.nodes[static_cast<std::size_t>(j)];
            const Eigen::Vector3d tau(-xi.y(), xi.x(), 0.0);
            q.X = h[j] * xi + hp[j] * tau;
            q.nu = xi;
            q.u = h[j];
            q.kappa[0] = 1.0 / W;
            q.dir[0] = tau;
            q.tang[0] = hp[j];
            q.jac = W;
            q.w = grid.weights[static_cast<std::size_t>(j)];
        }
        return out;
    }

    const SphereGrid::SphereDerivs d = grid.sphere_derivs(h);
    double wscale = 1.0;
    std::vector<std::array<double, 3>> wmat(grid.size());
    for (int i = 0; i < grid.n_lat; ++i) {
        const double ct = grid.gl_x[static_cast<std::size_t>(i)];
        const double st = std::sqrt(1.0 - ct * ct);
        const double cot = ct / st;
        for (int j = 0; j < grid.n_lon; ++j) {
            const Eigen::Index idx = grid.node_index(i, j);
            const double w11 = d.f_tt[idx] + h[idx];
            const double w12 = (d.f_tp[idx] - cot * d.f_p[idx]) / st;
            const double w22 = d.f_pp[idx] / (st * st) + cot * d.f_t[idx] + h[idx];
            wmat[static_cast<std::size_t>(idx)] = {w11, w12, w22};
            wscale = std::max(wscale, std::abs(w11) + std::abs(w22));
        }
    }
    const double tol = 1e-10 * wscale;
    for (int i = 0; i < grid.n_lat; ++i) {
        const double ct = grid.gl_x[static_cast<std::size_t>(i)];
        const double st = std::sqrt(1.0 - ct * ct);
        for (int j = 0; j < grid.n_lon; ++j) {
            const Eigen::Index idx = grid.node_index(i, j);
            const std::size_t uidx = static_cast<std::size_t>(idx);
            const Frame fr = sphere_frame(ct, st, std::cos(grid.lon[static_cast<std::size_t>(j)]),
                                          std::sin(grid.lon[static_cast<std::size_t>(j)]));
            const auto [w11, w12, w22] = wmat[uidx];
            const Eig2 e = sym_eig2(w11, w12, w22);
            if (e.lam1 <= tol)
                throw ShapeError("support body fails convexity at node " + std::to_string(idx) +
                                 " (min eigenvalue of Hess h + h g = " + std::to_string(e.lam1) + ")");
            const double g1 = d.f_t[idx];
            const double g2 = d.f_p[idx] / st;
            SurfaceSample& q = out.s[uidx];
            q.X = h[idx] * fr.xi + g1 * fr.e1 + g2 * fr.e2;
            q.nu = fr.xi;
            q.u = h[idx];
            q.kappa = {1.0 / e.lam1, 1.0 / e.lam2};
            q.dir[0] = e.v1.x() * fr.e1 + e.v1.y() * fr.e2;
            q.dir[1] = e.v2.x() * fr.e1 + e.v2.y() * fr.e2;
            q.tang[0] = g1 * e.v1.x() + g2 * e.v1.y();
            q.tang[1] = g1 * e.v2.x() + g2 * e.v2.y();
            q.jac = e.lam1 * e.lam2;
            q.w = grid.weights[uidx];
        }
    }
    return out;
}

SampleSet sample_radial_graph(const Eigen::VectorXd& r, const SphereGrid& grid) {
    for (Eigen::Index j = 0; j < r.size(); ++j)
        if (!(r[j] > 0.0))
            throw ShapeError("radial graph fails star-shapedness at node " + std::to_string(j) +
                             " (r = " + std::to_string(r[j]) + ")");

    SampleSet out;
    out.n = grid.dim;
    out.grid_desc = grid.describe();
    out.s.resize(grid.size());

    if (grid.dim == 1) {
        const Eigen::VectorXd rp = grid.deriv1(r);
        const Eigen::VectorXd rpp = grid.deriv2(r);
        for (int j = 0; j < grid.n_theta; ++j) {
            SurfaceSample& q = out.s[static_cast<std::size_t>(j)];
            const Eigen::Vector3d xi = grid.nodes[static_cast<std::size_t>(j)];
            const Eigen::Vector3d tau(-xi.y(), xi.x(), 0.0);
            const double speed = std::hypot(r[j], rp[j]);
            q.X = r[j] * xi;
            q.nu = (r[j] * xi - rp[j] * tau) / speed;
            q.u = r[j] * r[j] / speed;
            q.kappa[0] = (r[j] * r[j] + 2.0 * rp[j] * rp[j] - r[j] * rpp[j]) / (speed * speed * speed);
            q.dir[0] = (rp[j] * xi + r[j] * tau) / speed;
            q.tang[0] = q.dir[0].dot(q.X);
            q.jac = speed;
            q.w = grid.weights[static_cast<std::size_t>(j)];
        }
        return out;
    }

    const SphereGrid::SphereDerivs d = grid.sphere_derivs(r);
    for (int i = 0; i < grid.n_lat; ++i) {
        const double ct = grid.gl_x[static_cast<std::size_t>(i)];
        const double st = std::sqrt(1.0 - ct * ct);
        const double cot = ct / st;
        for (int j = 0; j < grid.n_lon; ++j) {
            const Eigen::Index idx = grid.node_index(i, j);
            const std::size_t uidx = static_cast<std::size_t>(idx);
            const Frame fr = sphere_frame(ct, st, std::cos(grid.lon[static_cast<std::size_t>(j)]),
                                          std::sin(grid.lon[static_cast<std::size_t>(j)]));
            const double rv = r[idx];
            const double r1 = d.f_t[idx];
            const double r2 = d.f_p[idx] / st;
            // Covariant Hessian of r on the round sphere, orthonormal frame.
            const double R11 = d.f_tt[idx];
            const double R12 = (d.f_tp[idx] - cot * d.f_p[idx]) / st;
            const double R22 = d.f_pp[idx] / (st * st) + cot * d.f_t[idx];
            const double speed = std::sqrt(rv * rv + r1 * r1 + r2 * r2);

            const double g11 = rv * rv + r1 * r1, g12 = r1 * r2, g22 = rv * rv + r2 * r2;
            const double h11 = (rv * rv + 2.0 * r1 * r1 - rv * R11) / speed;
            const double h12 = (2.0 * r1 * r2 - rv * R12) / speed;
            const double h22 = (rv * rv + 2.0 * r2 * r2 - rv * R22) / speed;

            // Generalized eigenproblem h v = kappa g v via M = g^{-1} h;
            // the discriminant (m11-m22)^2 + 4 m12 m21 avoids the large
            // cancellation of B^2 - 4AC near umbilic points.
            const double detg = g11 * g22 - g12 * g12;
            const double m11 = (g22 * h11 - g12 * h12) / detg;
            const double m12 = (g22 * h12 - g12 * h22) / detg;
            const double m21 = (g11 * h12 - g12 * h11) / detg;
            const double m22 = (g11 * h22 - g12 * h12) / detg;
            const double half_tr = 0.5 * (m11 + m22);
            const double disc = 0.25 * (m11 - m22) * (m11 - m22) + m12 * m21;
            const double sq = std::sqrt(std::max(0.0, disc));
            const double k1 = half_tr - sq;
            const double k2 = half_tr + sq;

            auto gen_eigvec = [&](double k) {
                Eigen::Vector2d ra(m11 - k, m12);
                Eigen::Vector2d rb(m21, m22 - k);
                if (ra.squaredNorm() >= rb.squaredNorm()) return Eigen::Vector2d(-ra.y(), ra.x());
                return Eigen::Vector2d(-(m22 - k), m21);
            };
            Eigen::Vector2d v1, v2;
            const double kscale = std::abs(k1) + std::abs(k2) + 1.0;
            if (sq <= 1e-12 * kscale) {
                v1 = Eigen::Vector2d(1.0, 0.0);
                v2 = Eigen::Vector2d(-g12, g11);  // g-orthogonal complement
            } else {
                v1 = gen_eigvec(k1);
                v2 = gen_eigvec(k2);
            }
            auto g_normalize = [&](Eigen::Vector2d& v) {
                const double nrm = std::sqrt(g11 * v.x() * v.x() + 2.0 * g12 * v.x() * v.y() +
                                             g22 * v.y() * v.y());
                v /= nrm;
            };
            g_normalize(v1);
            g_normalize(v2);

            const Eigen::Vector3d dX1 = r1 * fr.xi + rv * fr.e1;
            const Eigen::Vector3d dX2 = r2 * fr.xi + rv * fr.e2;

            SurfaceSample& q = out.s[uidx];
            q.X = rv * fr.xi;
            q.nu = (rv * fr.xi - r1 * fr.e1 - r2 * fr.e2) / speed;
            q.u = rv * rv / speed;
            q.kappa = {k1, k2};
            q.dir[0] = v1.x() * dX1 + v1.y() * dX2;
            q.dir[1] = v2.x() * dX1 + v2.y() * dX2;
            q.tang[0] = q.dir[0].dot(q.X);
            q.tang[1] = q.dir[1].dot(q.X);
            q.jac = rv * speed;
            q.w = grid.weights[uidx];
        }
    }
    return out;
}

SampleSet sample_parametric_curve(const ParametricCurve& curve, const SphereGrid& grid) {
    if (grid.dim != 1) throw UsageError("parametric curves need an S^1 grid");
    const int N = grid.n_theta;
    Eigen::VectorXd fx(N), fy(N);
    for (int j = 0; j < N; ++j) {
        fx[j] = curve.x(grid.theta[static_cast<std::size_t>(j)]);
        fy[j] = curve.y(grid.theta[static_cast<std::size_t>(j)]);
        if (!std::isfinite(fx[j]) || !std::isfinite(fy[j]))
            throw ShapeError("parametric curve is not finite at node " + std::to_string(j));
    }

    Eigen::VectorXd xp = grid.deriv1(fx), yp = grid.deriv1(fy);
    double area2 = 0.0;
    for (int j = 0; j < N; ++j)
        area2 += (fx[j] * yp[j] - fy[j] * xp[j]) * grid.weights[static_cast<std::size_t>(j)];
    if (area2 < 0.0) {
        // Reverse orientation: resample at t -> 2 pi - t.
        Eigen::VectorXd rx(N), ry(N);
        for (int j = 0; j < N; ++j) {
            const int k = (N - j) % N;
            rx[j] = fx[k];
            ry[j] = fy[k];
        }
        fx = rx;
        fy = ry;
        xp = grid.deriv1(fx);
        yp = grid.deriv1(fy);
    }
    const Eigen::VectorXd xpp = grid.deriv2(fx), ypp = grid.deriv2(fy);

    SampleSet out;
    out.n = 1;
    out.grid_desc = grid.describe();
    out.s.resize(static_cast<std::size_t>(N));
    for (int j = 0; j < N; ++j) {
        const double speed = std::hypot(xp[j], yp[j]);
        if (speed < 1e-10)
            throw ShapeError("parametric curve fails regularity at node " + std::to_string(j) +
                             " (|X'| = " + std::to_string(speed) + ")");
        SurfaceSample& q = out.s[static_cast<std::size_t>(j)];
        q.X = Eigen::Vector3d(fx[j], fy[j], 0.0);
        q.nu = Eigen::Vector3d(yp[j], -xp[j], 0.0) / speed;
        q.u = q.X.dot(q.nu);
        q.kappa[0] = (xp[j] * ypp[j] - yp[j] * xpp[j]) / (speed * speed * speed);
        q.dir[0] = Eigen::Vector3d(xp[j], yp[j], 0.0) / speed;
        q.tang[0] = q.X.dot(q.dir[0]);
        q.jac = speed;
        q.w = grid.weights[static_cast<std::size_t>(j)];
    }
    return out;
}

SampleSet sample_shape(const Shape& shape, const SphereGrid& grid) {
    if (const auto* sb = std::get_if<SupportBody>(&shape)) {
        if (sb->dim != grid.dim) throw UsageError("shape/grid dimension mismatch");
        return sample_support_body(field_on_grid(sb->h, grid), grid);
    }
    if (const auto* rg = std::get_if<RadialGraph>(&shape)) {
        if (rg->dim != grid.dim) throw UsageError("shape/grid dimension mismatch");
        return sample_radial_graph(field_on_grid(rg->r, grid), grid);
    }
    return sample_parametric_curve(std::get<ParametricCurve>(shape), grid);
}

SampleSet translated(const SampleSet& in, const Eigen::Vector3d& v) {
    SampleSet out = in;
    for (SurfaceSample& q : out.s) {
        q.X += v;
        q.u = q.nu.dot(q.X);
        for (int i = 0; i < out.n; ++i) q.tang[static_cast<std::size_t>(i)] = q.dir[static_cast<std::size_t>(i)].dot(q.X);
    }
    return out;
}

HypothesisReport check_hypotheses(const SampleSet& samples, HypothesisLevel level, int k) {
    if (samples.size() == 0) throw UsageError("check_hypotheses: empty sample set");
    HypothesisReport rep;
    rep.min_value = std::numeric_limits<double>::infinity();
    double scale = 1.0;

    auto track = [&](double val, int node) {
        if (val < rep.min_value) {
            rep.min_value = val;
            rep.worst_node = node;
        }
    };

    switch (level) {
        case HypothesisLevel::Convex:
        case HypothesisLevel::StrictlyConvex: {
            for (std::size_t j = 0; j < samples.size(); ++j)
                for (int i = 0; i < samples.n; ++i) {
                    const double kap = samples.s[j].kappa[static_cast<std::size_t>(i)];
                    scale = std::max(scale, std::abs(kap));
                    track(kap, static_cast<int>(j));
                }
            const double tol = 1e-10 * scale;
            rep.pass = level == HypothesisLevel::Convex ? rep.min_value >= -tol : rep.min_value > tol;
            rep.detail = "min principal curvature = " + std::to_string(rep.min_value);
            break;
        }
        case HypothesisLevel::KConvex: {
            if (k < 1 || k > samples.n) throw UsageError("check_hypotheses: k out of range");
            for (std::size_t j = 0; j < samples.size(); ++j) {
                const CurvatureTuple ct = samples.curvature(j);
                for (int jj = 1; jj <= k; ++jj) {
                    const double hj = normalized_mean_curv(ct, jj);
                    scale = std::max(scale, std::abs(hj));
                    track(hj, static_cast<int>(j));
                }
            }
            rep.pass = rep.min_value >= -1e-10 * scale;
            rep.detail = "min H_j (j <= " + std::to_string(k) + ") = " + std::to_string(rep.min_value);
            break;
        }
        case HypothesisLevel::StarShaped: {
            for (std::size_t j = 0; j < samples.size(); ++j) {
                scale = std::max(scale, std::abs(samples.s[j].u));
                track(samples.s[j].u, static_cast<int>(j));
            }
            rep.pass = rep.min_value > 1e-12 * scale;
            rep.detail = "min support value = " + std::to_string(rep.min_value);
            break;
        }
    }
    return rep;
}

}  // namespace aflab
