#include "aflab/jensen.hpp"

#include <algorithm>
#include <cmath>

#include "aflab/errors.hpp"
#include "aflab/measures.hpp"
#include "aflab/numerics.hpp"

namespace aflab {

std::string PhiSpec::name() const {
    if (id == "power" || id == "neg_power" || id == "inv_one_plus_pow") {
        std::string ms = std::to_string(m);
        ms.erase(ms.find_last_not_of('0') + 1);
        if (!ms.empty() && ms.back() == '.') ms.pop_back();
        return id + "(" + ms + ")";
    }
    return id;
}

PhiSpec phi_catalog(const std::string& id, double m) {
    PhiSpec p;
    p.id = id;
    p.m = m;
    if (id == "identity") {
        p.unbounded_below = true;
        p.value = [](double x) { return x; };
        p.d1 = [](double) { return 1.0; };
        p.d2 = [](double) { return 0.0; };
    } else if (id == "square") {
        p.unbounded_below = true;
        p.value = [](double x) { return x * x; };
        p.d1 = [](double x) { return 2.0 * x; };
        p.d2 = [](double) { return 2.0; };
    } else if (id == "reciprocal") {
        p.dom_lo = 0.0;
        p.lo_strict = true;
        p.value = [](double x) { return 1.0 / x; };
        p.d1 = [](double x) { return -1.0 / (x * x); };
        p.d2 = [](double x) { return 2.0 / (x * x * x); };
    } else if (id == "power") {
        if (m < 0.0 || m >= 1.0) throw ConfigError("phi_catalog: power needs 0 <= m < 1");
        p.dom_lo = 0.0;
        p.lo_strict = true;
        p.value = [m](double x) { return std::pow(x, m); };
        p.d1 = [m](double x) { return m * std::pow(x, m - 1.0); };
        p.d2 = [m](double x) { return m * (m - 1.0) * std::pow(x, m - 2.0); };
    } else if (id == "neg_power") {
        if (m < 0.0 || m > 1.0) throw ConfigError("phi_catalog: neg_power needs 0 <= m <= 1");
        p.dom_lo = 0.0;
        p.lo_strict = true;
        p.value = [m](double x) { return std::pow(x, -m); };
        p.d1 = [m](double x) { return -m * std::pow(x, -m - 1.0); };
        p.d2 = [m](double x) { return m * (m + 1.0) * std::pow(x, -m - 2.0); };
    } else if (id == "log") {
        p.dom_lo = 0.0;
        p.lo_strict = true;
        p.value = [](double x) { return std::log(x); };
        p.d1 = [](double x) { return 1.0 / x; };
        p.d2 = [](double x) { return -1.0 / (x * x); };
    } else if (id == "inv_one_plus_pow") {
        if (m <= 0.0 || m > 2.0) throw ConfigError("phi_catalog: inv_one_plus_pow needs 0 < m <= 2");
        p.dom_lo = 0.0;
        p.lo_strict = false;
        p.value = [m](double x) {
            return adaptive_simpson([m](double t) { return 1.0 / (1.0 + std::pow(t, m)); }, 0.0, x);
        };
        p.d1 = [m](double x) { return 1.0 / (1.0 + std::pow(x, m)); };
        p.d2 = [m](double x) {
            const double xm = std::pow(x, m);
            return -m * std::pow(x, m - 1.0) / ((1.0 + xm) * (1.0 + xm));
        };
    } else {
        throw ConfigError("phi_catalog: unknown family '" + id + "'");
    }
    return p;
}

double taylor_remainder(const PhiSpec& phi, double u, double ubar) {
    const double lo = std::min(u, ubar);
    if (!phi.contains(lo))
        throw DomainError("taylor_remainder: [" + std::to_string(lo) + ", ...] leaves the domain of " +
                          phi.name());
    return phi.value(u) - phi.value(ubar) - phi.d1(ubar) * (u - ubar);
}

double jensen_deficit(const SampleSet& samples, int k, const PhiSpec& phi) {
    const double ik = quermass(samples, k);
    if (!(ik > 0.0)) throw HypothesisError("jensen_deficit: I_k must be positive");
    const double ubar = quermass(samples, k - 1) / ik;
    return weighted_curvature_integral(samples, k, [&](double u, double, int) {
        return taylor_remainder(phi, u, ubar);
    });
}

std::pair<double, double> second_derivative_bounds(const PhiSpec& phi,
                                                   const RangeInterval& interval) {
    if (interval.lo > interval.hi) throw UsageError("second_derivative_bounds: lo > hi");
    if (!phi.contains(interval.lo))
        throw DomainError("second_derivative_bounds: interval leaves the domain of " + phi.name());
    double mn = std::min(phi.d2(interval.lo), phi.d2(interval.hi));
    double mx = std::max(phi.d2(interval.lo), phi.d2(interval.hi));
    const int scan = 1024;
    for (int i = 1; i < scan; ++i) {
        const double x = interval.lo + (interval.hi - interval.lo) * i / scan;
        const double v = phi.d2(x);
        mn = std::min(mn, v);
        mx = std::max(mx, v);
    }
    return {mn, mx};
}

RangeInterval support_range(const SampleSet& samples) {
    RangeInterval r;
    r.lo = samples.s[0].u;
    r.hi = samples.s[0].u;
    for (const SurfaceSample& q : samples.s) {
        r.lo = std::min(r.lo, q.u);
        r.hi = std::max(r.hi, q.u);
    }
    return r;
}

}  // namespace aflab
