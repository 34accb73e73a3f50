#include "aflab/grid.hpp"

#include <cmath>

#include "aflab/errors.hpp"
#include "aflab/harmonics.hpp"
#include "aflab/numerics.hpp"

namespace aflab {

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(static_cast<std::size_t>(n), 0.0);
    w.assign(static_cast<std::size_t>(n), 0.0);
    const int m = (n + 1) / 2;
    for (int i = 1; i <= m; ++i) {
        double z = std::cos(kPi * (i - 0.25) / (n + 0.5));
        double z1, pp;
        do {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            z1 = z;
            z = z1 - p1 / pp;
        } while (std::abs(z - z1) > 1e-15);
        x[static_cast<std::size_t>(i - 1)] = -z;
        x[static_cast<std::size_t>(n - i)] = z;
        w[static_cast<std::size_t>(i - 1)] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[static_cast<std::size_t>(n - i)] = w[static_cast<std::size_t>(i - 1)];
    }
}

// ---------------------------------------------------------------------------
// Harmonic analysis/synthesis tables for S^2.
// ---------------------------------------------------------------------------

struct SphereGrid::S2Transform {
    int n_lat = 0, n_lon = 0, lmax = 0;
    std::vector<Eigen::MatrixXd> q, qt, qtt;  // per m: n_lat x (lmax - m + 1)
    Eigen::MatrixXd cosm, sinm;               // (lmax + 1) x n_lon
    Eigen::VectorXd glw;

    struct Coeffs {
        std::vector<Eigen::VectorXd> a, b;  // per m, over l = m..lmax
    };

    Coeffs analyze(const Eigen::VectorXd& field) const {
        Eigen::MatrixXd F(n_lat, n_lon);
        for (int i = 0; i < n_lat; ++i)
            for (int j = 0; j < n_lon; ++j) F(i, j) = field[static_cast<Eigen::Index>(i) * n_lon + j];

        // Longitude: trigonometric interpolation coefficients per latitude.
        Eigen::MatrixXd C = F * cosm.transpose() / n_lon;  // n_lat x (lmax+1)
        Eigen::MatrixXd S = F * sinm.transpose() / n_lon;
        C.rightCols(lmax).array() *= 2.0;
        S.rightCols(lmax).array() *= 2.0;

        Coeffs c;
        c.a.resize(static_cast<std::size_t>(lmax) + 1);
        c.b.resize(static_cast<std::size_t>(lmax) + 1);
        for (int m = 0; m <= lmax; ++m) {
            const Eigen::VectorXd wc = glw.cwiseProduct(C.col(m));
            c.a[static_cast<std::size_t>(m)] = kTwoPi * q[static_cast<std::size_t>(m)].transpose() * wc;
            if (m > 0) {
                const Eigen::VectorXd ws = glw.cwiseProduct(S.col(m));
                c.b[static_cast<std::size_t>(m)] = kTwoPi * q[static_cast<std::size_t>(m)].transpose() * ws;
            }
        }
        return c;
    }

    // dtheta in {0,1,2} selects the Legendre table; dphi in {0,1,2} applies
    // that many longitude derivatives to the trig factors.
    Eigen::VectorXd synth(const Coeffs& c, int dtheta, int dphi) const {
        const std::vector<Eigen::MatrixXd>& tab = dtheta == 0 ? q : (dtheta == 1 ? qt : qtt);
        Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n_lat, n_lon);
        for (int m = 0; m <= lmax; ++m) {
            const std::size_t um = static_cast<std::size_t>(m);
            Eigen::VectorXd latA = tab[um] * c.a[um];
            Eigen::VectorXd latB = m > 0 ? Eigen::VectorXd(tab[um] * c.b[um]) : Eigen::VectorXd();
            const double fm = static_cast<double>(m);
            if (dphi == 0) {
                out.noalias() += latA * cosm.row(m);
                if (m > 0) out.noalias() += latB * sinm.row(m);
            } else if (dphi == 1) {
                if (m == 0) continue;
                out.noalias() += latA * (-fm * sinm.row(m));
                out.noalias() += latB * (fm * cosm.row(m));
            } else {
                if (m == 0) continue;
                out.noalias() += latA * (-fm * fm * cosm.row(m));
                out.noalias() += latB * (-fm * fm * sinm.row(m));
            }
        }
        Eigen::VectorXd flat(static_cast<Eigen::Index>(n_lat) * n_lon);
        for (int i = 0; i < n_lat; ++i)
            for (int j = 0; j < n_lon; ++j) flat[static_cast<Eigen::Index>(i) * n_lon + j] = out(i, j);
        return flat;
    }
};

// ---------------------------------------------------------------------------

SphereGrid grid_s1(int N) {
    if (N < 8) throw ConfigError("grid_s1: N must be >= 8");
    if (N % 2 != 0) throw ConfigError("grid_s1: N must be even");
    SphereGrid g;
    g.dim = 1;
    g.n_theta = N;
    const double h = kTwoPi / N;
    g.theta.resize(static_cast<std::size_t>(N));
    g.nodes.resize(static_cast<std::size_t>(N));
    g.weights.assign(static_cast<std::size_t>(N), h);
    for (int j = 0; j < N; ++j) {
        const double t = h * j;
        g.theta[static_cast<std::size_t>(j)] = t;
        g.nodes[static_cast<std::size_t>(j)] = Eigen::Vector3d(std::cos(t), std::sin(t), 0.0);
    }
    g.d1 = Eigen::MatrixXd::Zero(N, N);
    g.d2 = Eigen::MatrixXd::Zero(N, N);
    const double diag2 = -kPi * kPi / (3.0 * h * h) - 1.0 / 6.0;
    for (int i = 0; i < N; ++i) {
        g.d2(i, i) = diag2;
        for (int j = 0; j < N; ++j) {
            if (i == j) continue;
            const int d = i - j;
            const double sgn = (d % 2 == 0) ? 1.0 : -1.0;
            const double half = 0.5 * h * d;
            g.d1(i, j) = 0.5 * sgn / std::tan(half);
            const double s = std::sin(half);
            g.d2(i, j) = -sgn / (2.0 * s * s);
        }
    }
    return g;
}

SphereGrid grid_s2(int n_lat, int n_lon) {
    if (n_lat < 8) throw ConfigError("grid_s2: n_lat must be >= 8");
    if (n_lon < 16) throw ConfigError("grid_s2: n_lon must be >= 16");
    if (n_lon % 2 != 0) throw ConfigError("grid_s2: n_lon must be even");
    SphereGrid g;
    g.dim = 2;
    g.n_lat = n_lat;
    g.n_lon = n_lon;
    gauss_legendre(n_lat, g.gl_x, g.gl_w);
    g.colat.resize(static_cast<std::size_t>(n_lat));
    g.lon.resize(static_cast<std::size_t>(n_lon));
    const double hphi = kTwoPi / n_lon;
    for (int j = 0; j < n_lon; ++j) g.lon[static_cast<std::size_t>(j)] = hphi * j;
    g.nodes.resize(static_cast<std::size_t>(n_lat) * n_lon);
    g.weights.resize(g.nodes.size());
    for (int i = 0; i < n_lat; ++i) {
        const double x = g.gl_x[static_cast<std::size_t>(i)];
        const double t = std::acos(x);
        g.colat[static_cast<std::size_t>(i)] = t;
        const double s = std::sqrt(1.0 - x * x);
        for (int j = 0; j < n_lon; ++j) {
            const std::size_t idx = static_cast<std::size_t>(g.node_index(i, j));
            const double p = g.lon[static_cast<std::size_t>(j)];
            g.nodes[idx] = Eigen::Vector3d(s * std::cos(p), s * std::sin(p), x);
            g.weights[idx] = g.gl_w[static_cast<std::size_t>(i)] * hphi;
        }
    }

    g.max_degree = std::min(n_lat - 1, (n_lon - 1) / 2);
    auto tr = std::make_shared<SphereGrid::S2Transform>();
    tr->n_lat = n_lat;
    tr->n_lon = n_lon;
    tr->lmax = g.max_degree;
    tr->glw = Eigen::Map<const Eigen::VectorXd>(g.gl_w.data(), n_lat);
    tr->cosm.resize(tr->lmax + 1, n_lon);
    tr->sinm.resize(tr->lmax + 1, n_lon);
    for (int m = 0; m <= tr->lmax; ++m)
        for (int j = 0; j < n_lon; ++j) {
            tr->cosm(m, j) = std::cos(m * g.lon[static_cast<std::size_t>(j)]);
            tr->sinm(m, j) = std::sin(m * g.lon[static_cast<std::size_t>(j)]);
        }
    tr->q.resize(static_cast<std::size_t>(tr->lmax) + 1);
    tr->qt.resize(static_cast<std::size_t>(tr->lmax) + 1);
    tr->qtt.resize(static_cast<std::size_t>(tr->lmax) + 1);
    for (int m = 0; m <= tr->lmax; ++m) {
        const int cols = tr->lmax - m + 1;
        Eigen::MatrixXd Q(n_lat, cols), Qt(n_lat, cols), Qtt(n_lat, cols);
        for (int i = 0; i < n_lat; ++i) {
            const LegendreDerivs d = legendre_q_derivs(tr->lmax, m, g.gl_x[static_cast<std::size_t>(i)]);
            for (int c = 0; c < cols; ++c) {
                Q(i, c) = d.q[static_cast<std::size_t>(c)];
                Qt(i, c) = d.qt[static_cast<std::size_t>(c)];
                Qtt(i, c) = d.qtt[static_cast<std::size_t>(c)];
            }
        }
        tr->q[static_cast<std::size_t>(m)] = std::move(Q);
        tr->qt[static_cast<std::size_t>(m)] = std::move(Qt);
        tr->qtt[static_cast<std::size_t>(m)] = std::move(Qtt);
    }
    g.transform = std::move(tr);
    return g;
}

int SphereGrid::antipode(int j) const {
    if (dim == 1) return (j + n_theta / 2) % n_theta;
    const int i_lat = j / n_lon;
    const int j_lon = j % n_lon;
    return node_index(n_lat - 1 - i_lat, (j_lon + n_lon / 2) % n_lon);
}

Eigen::VectorXd SphereGrid::deriv1(const Eigen::VectorXd& f) const {
    if (dim != 1) throw UsageError("deriv1 is an S^1 operation");
    return d1 * f;
}

Eigen::VectorXd SphereGrid::deriv2(const Eigen::VectorXd& f) const {
    if (dim != 1) throw UsageError("deriv2 is an S^1 operation");
    return d2 * f;
}

SphereGrid::SphereDerivs SphereGrid::sphere_derivs(const Eigen::VectorXd& f) const {
    if (dim != 2) throw UsageError("sphere_derivs is an S^2 operation");
    const S2Transform::Coeffs c = transform->analyze(f);
    SphereDerivs d;
    d.f_t = transform->synth(c, 1, 0);
    d.f_p = transform->synth(c, 0, 1);
    d.f_tt = transform->synth(c, 2, 0);
    d.f_tp = transform->synth(c, 1, 1);
    d.f_pp = transform->synth(c, 0, 2);
    return d;
}

Eigen::VectorXd SphereGrid::harmonic_filter(const Eigen::VectorXd& f) const {
    if (dim != 2) throw UsageError("harmonic_filter is an S^2 operation");
    return transform->synth(transform->analyze(f), 0, 0);
}

std::string SphereGrid::describe() const {
    if (dim == 1) return "S1 N=" + std::to_string(n_theta);
    return "S2 " + std::to_string(n_lat) + "x" + std::to_string(n_lon);
}

SphereGrid parse_grid(const std::string& text, int dim) {
    const auto xpos = text.find_first_of("xX");
    if (xpos == std::string::npos) {
        const int N = std::stoi(text);
        if (dim != 1)
            throw UsageError("grid '" + text + "' is one-dimensional but the shape needs S^2 (use NlatxNlon)");
        return grid_s1(N);
    }
    const int a = std::stoi(text.substr(0, xpos));
    const int b = std::stoi(text.substr(xpos + 1));
    if (dim != 2) throw UsageError("grid '" + text + "' is an S^2 grid but the shape needs S^1");
    return grid_s2(a, b);
}

}  // namespace aflab
