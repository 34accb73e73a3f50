#include "aflab/harmonics.hpp"

#include <cmath>

#include "aflab/errors.hpp"
#include "aflab/numerics.hpp"

namespace aflab {

namespace {

// Seed Q_{m,m}(x) = sqrt((2m+1)/(4 pi)) * prod_k sqrt((2k-1)/(2k)) * s^m.
double q_mm(int m, double s) {
    double q = std::sqrt(1.0 / (4.0 * kPi));
    for (int k = 1; k <= m; ++k) q *= std::sqrt((2.0 * k + 1.0) / (2.0 * k)) * s;
    return q;
}

double recur_a(int l, int m) {
    return std::sqrt((4.0 * l * l - 1.0) / (static_cast<double>(l) * l - static_cast<double>(m) * m));
}

}  // namespace

std::vector<double> legendre_q(int lmax, int m, double x) {
    if (m < 0 || m > lmax) throw DomainError("legendre_q: need 0 <= m <= lmax");
    const double s = std::sqrt(std::max(0.0, 1.0 - x * x));
    std::vector<double> q(static_cast<std::size_t>(lmax - m + 1));
    q[0] = q_mm(m, s);
    if (lmax > m) q[1] = std::sqrt(2.0 * m + 3.0) * x * q[0];
    for (int l = m + 2; l <= lmax; ++l) {
        const double a = recur_a(l, m), ap = recur_a(l - 1, m);
        q[static_cast<std::size_t>(l - m)] =
            a * (x * q[static_cast<std::size_t>(l - m - 1)] - q[static_cast<std::size_t>(l - m - 2)] / ap);
    }
    return q;
}

LegendreDerivs legendre_q_derivs(int lmax, int m, double x) {
    LegendreDerivs d;
    d.q = legendre_q(lmax, m, x);
    const std::size_t cnt = d.q.size();
    d.qt.resize(cnt);
    d.qtt.resize(cnt);
    const double s = std::sqrt(1.0 - x * x);
    const double cot = x / s;
    for (int l = m; l <= lmax; ++l) {
        const std::size_t i = static_cast<std::size_t>(l - m);
        // dQ/dtheta = (l x Q_{l,m} - e_{l,m} Q_{l-1,m}) / sin(theta)
        double qt = l * x * d.q[i];
        if (l > m) {
            const double e = std::sqrt((2.0 * l + 1.0) * (static_cast<double>(l) * l - static_cast<double>(m) * m) /
                                       (2.0 * l - 1.0));
            qt -= e * d.q[i - 1];
        }
        qt /= s;
        d.qt[i] = qt;
        // Legendre ODE: Q'' = -cot(theta) Q' + (m^2/sin^2 - l(l+1)) Q
        d.qtt[i] = -cot * qt + (static_cast<double>(m) * m / (s * s) - static_cast<double>(l) * (l + 1.0)) * d.q[i];
    }
    return d;
}

double real_sph_harmonic(int l, int m, const Eigen::Vector3d& xi) {
    const int am = std::abs(m);
    if (am > l) throw DomainError("real_sph_harmonic: |m| > l");
    const double x = xi.z();
    const double phi = std::atan2(xi.y(), xi.x());
    const std::vector<double> q = legendre_q(l, am, x);
    const double qlm = q.back();
    if (m == 0) return qlm;
    const double trig = (m > 0) ? std::cos(am * phi) : std::sin(am * phi);
    return std::sqrt(2.0) * qlm * trig;
}

double real_circ_harmonic(int l, bool cosine, double theta) {
    if (l == 0) return 1.0 / std::sqrt(kTwoPi);
    return (cosine ? std::cos(l * theta) : std::sin(l * theta)) / std::sqrt(kPi);
}

}  // namespace aflab
