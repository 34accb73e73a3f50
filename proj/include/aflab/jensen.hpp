#pragma once

#include <functional>
#include <string>
#include <utility>

#include "aflab/sample.hpp"

namespace aflab {

/// Weight function phi with evaluators for phi, phi' and phi'' and its
/// admissible domain [lo, inf) (open at lo when lo_strict).
struct PhiSpec {
    std::string id;
    double m = 0.0;
    std::function<double(double)> value, d1, d2;
    double dom_lo = 0.0;
    bool lo_strict = false;
    bool unbounded_below = false;  // whole real line admissible

    bool contains(double x) const {
        if (unbounded_below) return true;
        return lo_strict ? x > dom_lo : x >= dom_lo;
    }
    std::string name() const;
};

struct RangeInterval {
    double lo = 0.0, hi = 0.0;
};

/// Catalog families: identity, square, reciprocal, power(m) for 0 <= m < 1,
/// neg_power(m) for 0 <= m <= 1, log, inv_one_plus_pow(m) for 0 < m <= 2
/// (phi(0) = 0, phi' = 1/(1+x^m), evaluated by adaptive quadrature).
PhiSpec phi_catalog(const std::string& id, double m = 0.0);

/// phi(u) - phi(ubar) - phi'(ubar)(u - ubar); equals the integral-form
/// Taylor remainder between ubar and u. DomainError when [min, max] of the
/// two arguments leaves the domain.
double taylor_remainder(const PhiSpec& phi, double u, double ubar);

/// int H_k * taylor_remainder(phi, u(x), I_{k-1}/I_k) dmu. HypothesisError
/// when I_k <= 0; DomainError when Range(u) or the mean leaves the domain.
double jensen_deficit(const SampleSet& samples, int k, const PhiSpec& phi);

/// Extremes of phi'' over the interval: endpoint values plus a 1024-point
/// scan. Returns (min, max).
std::pair<double, double> second_derivative_bounds(const PhiSpec& phi,
                                                   const RangeInterval& interval);

/// Numeric Range(u) over a sample set.
RangeInterval support_range(const SampleSet& samples);

}  // namespace aflab
