#pragma once

#include <Eigen/Core>
#include <vector>

namespace aflab {

/// Normalized associated Legendre functions Q_{l,m}(x) = N_{l,m} P_l^m(x)
/// (no Condon-Shortley phase), scaled so that the real spherical harmonics
///   Y_{l,0}  = Q_{l,0},
///   Y_{l,m}  = sqrt(2) Q_{l,m} cos(m phi),   m > 0,
///   Y_{l,-m} = sqrt(2) Q_{l,m} sin(m phi),   m > 0,
/// are orthonormal in L^2(S^2, dtheta). Returns Q_{m..lmax, m}(x).
std::vector<double> legendre_q(int lmax, int m, double x);

/// Q, dQ/dtheta and d2Q/dtheta2 at x = cos(theta), for l = m..lmax.
/// Requires |x| < 1 (the grids never place nodes at the poles).
struct LegendreDerivs {
    std::vector<double> q, qt, qtt;
};
LegendreDerivs legendre_q_derivs(int lmax, int m, double x);

/// Orthonormal real spherical harmonic Y_{l,m}(xi), |m| <= l, |xi| = 1.
double real_sph_harmonic(int l, int m, const Eigen::Vector3d& xi);

/// Orthonormal real circular harmonic on S^1:
/// l = 0 gives 1/sqrt(2 pi); l >= 1 gives cos(l theta)/sqrt(pi) when
/// cosine is true, else sin(l theta)/sqrt(pi).
double real_circ_harmonic(int l, bool cosine, double theta);

}  // namespace aflab
