#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <span>
#include <vector>

namespace aflab {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// |S^n| for n = 1, 2.
inline double sphere_area(int n) { return n == 1 ? kTwoPi : 4.0 * kPi; }

/// |B^d| for d = 1, 2, 3.
inline double ball_volume(int d) {
    switch (d) {
        case 1: return 2.0;
        case 2: return kPi;
        default: return 4.0 * kPi / 3.0;
    }
}

/// Deterministic pairwise (cascade) summation. Order of accumulation is a
/// fixed function of the length, so results are reproducible regardless of
/// how the terms were produced.
inline double pairwise_sum(std::span<const double> v) {
    if (v.size() <= 8) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

inline double pairwise_sum(const std::vector<double>& v) {
    return pairwise_sum(std::span<const double>(v));
}

namespace detail {
inline double adaptive_simpson_rec(const std::function<double(double)>& f,
                                   double a, double b, double fa, double fm,
                                   double fb, double whole, double tol,
                                   int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}
}  // namespace detail

/// Adaptive Simpson quadrature with Richardson correction.
inline double adaptive_simpson(const std::function<double(double)>& f, double a,
                               double b, double tol = 1e-13, int max_depth = 48) {
    if (a == b) return 0.0;
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

/// Complete elliptic integral of the second kind E(m), parameter convention
/// (m = k^2), evaluated by the arithmetic-geometric mean. Quadratically
/// convergent; requires 0 <= m < 1. E(1) = 1 handled explicitly.
inline double elliptic_E(double m) {
    if (m == 1.0) return 1.0;
    double a = 1.0, b = std::sqrt(1.0 - m);
    double c2sum = 0.5 * m;  // 2^{-1} c_0^2 with c_0 = sqrt(m)
    double pow2 = 0.5;
    for (int iter = 0; iter < 64; ++iter) {
        const double c = 0.5 * (a - b);
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
        pow2 *= 2.0;
        c2sum += pow2 * c * c;
        if (c < 1e-18) break;
    }
    const double K = kPi / (2.0 * a);
    return K * (1.0 - c2sum);
}

}  // namespace aflab
