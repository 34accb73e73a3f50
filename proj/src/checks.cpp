#include "aflab/checks.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <random>
#include <thread>

#include "aflab/errors.hpp"
#include "aflab/jensen.hpp"
#include "aflab/measures.hpp"
#include "aflab/numerics.hpp"

namespace aflab {

namespace {

std::string fmt_num(double v) {
    std::string s = std::to_string(v);
    s.erase(s.find_last_not_of('0') + 1);
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

double min_hk(const SampleSet& samples, int k, double* scale_out = nullptr) {
    double mn = std::numeric_limits<double>::infinity(), scale = 1.0;
    for (std::size_t j = 0; j < samples.size(); ++j) {
        const double h = normalized_mean_curv(samples.curvature(j), k);
        mn = std::min(mn, h);
        scale = std::max(scale, std::abs(h));
    }
    if (scale_out) *scale_out = scale;
    return mn;
}

struct Hyp {
    bool ok = true;
    std::string detail = "pass";

    void fail(const std::string& what) {
        detail = ok ? what : detail + "; " + what;
        ok = false;
    }
    void need_convex(const SampleSet& s) {
        const HypothesisReport r = check_hypotheses(s, HypothesisLevel::Convex);
        if (!r.pass) fail("not convex (" + r.detail + " at node " + std::to_string(r.worst_node) + ")");
    }
    void need_strictly_convex(const SampleSet& s) {
        const HypothesisReport r = check_hypotheses(s, HypothesisLevel::StrictlyConvex);
        if (!r.pass) fail("not strictly convex (" + r.detail + ")");
    }
    void need_star_shaped(const SampleSet& s) {
        const HypothesisReport r = check_hypotheses(s, HypothesisLevel::StarShaped);
        if (!r.pass) fail("not star-shaped about the origin (" + r.detail + ")");
    }
    void need_hk_nonneg(const SampleSet& s, int k) {
        double scale;
        const double mn = min_hk(s, k, &scale);
        if (mn < -1e-10 * scale) fail("H_" + std::to_string(k) + " < 0 (min = " + std::to_string(mn) + ")");
    }
    void need_hk_pos(const SampleSet& s, int k) {
        double scale;
        const double mn = min_hk(s, k, &scale);
        if (mn <= 1e-10 * scale) fail("H_" + std::to_string(k) + " not positive (min = " + std::to_string(mn) + ")");
    }
    void need_u_nonneg(const SampleSet& s) {
        const RangeInterval r = support_range(s);
        if (r.lo < -1e-12 * std::max(1.0, std::abs(r.hi))) fail("u < 0 (min = " + std::to_string(r.lo) + ")");
    }
    void need_phi_domain(const SampleSet& s, const PhiSpec& phi) {
        const RangeInterval r = support_range(s);
        if (!phi.contains(r.lo))
            fail("Range(u) leaves the domain of " + phi.name() + " (min u = " + std::to_string(r.lo) + ")");
    }
};

double d2sq(const SampleSet& s, int k, double r) {
    const double d = weighted_L2_distance(s, k, Ball{Eigen::Vector3d::Zero(), r});
    return d * d;
}

double wci(const SampleSet& s, int k, const std::function<double(double, double, int)>& w) {
    return weighted_curvature_integral(s, k, w);
}

double nfi(const SampleSet& s, int k, const std::function<double(double)>& psi) {
    return newton_form_integral(s, k, psi);
}

// Diameter of the sampled point cloud; point count capped (deterministic
// stride) since this is O(N^2). Fine for convex bodies: the subsample error
// is second order in the stride.
double sample_diameter(const SampleSet& s, std::size_t cap = 1024) {
    const std::size_t stride = std::max<std::size_t>(1, (s.size() + cap - 1) / cap);
    std::vector<Eigen::Vector3d> pts;
    pts.reserve(s.size() / stride + 1);
    for (std::size_t j = 0; j < s.size(); j += stride) pts.push_back(s.s[j].X);
    double d2 = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            d2 = std::max(d2, (pts[i] - pts[j]).squaredNorm());
    return std::sqrt(d2);
}

Ball steiner_ball(const SampleSet& s) {
    return Ball{steiner_point_samples(s), 0.5 * mean_width_samples(s)};
}

// ---------------------------------------------------------------------------
// Registry.
// ---------------------------------------------------------------------------

struct PhiTag {
    const char* tag;
    const char* family;
    double m;
};
constexpr PhiTag kPhiSet[] = {
    {"identity", "identity", 0.0},     {"square", "square", 0.0},
    {"reciprocal", "reciprocal", 0.0}, {"log", "log", 0.0},
    {"power0.5", "power", 0.5},        {"negpower0.5", "neg_power", 0.5},
    {"invpow1", "inv_one_plus_pow", 1.0}, {"invpow2", "inv_one_plus_pow", 2.0},
};

std::vector<CheckSpec> build_registry(int n) {
    std::vector<CheckSpec> specs;
    const BodyConstants bc(n);
    const double omega = bc.omega_n;

    auto add = [&specs](CheckSpec s) { specs.push_back(std::move(s)); };

    for (int k = 1; k <= n; ++k) {
        // Theorem: deficit/I_k + delta_{2,k}^2 = (1/(k C(n,k))) int T_{k-1} o A (X^T, X^T).
        add({.id = "af-identity-" + std::to_string(k),
             .kind = CheckKind::Identity,
             .k = k,
             .origin = OriginPolicy::AsGiven,
             .hypotheses = "H_k >= 0, I_k > 0",
             .eval = [k](const CheckInput& in) {
                 const SampleSet& s = in.samples;
                 CheckEval e;
                 Hyp hyp;
                 hyp.need_hk_nonneg(s, k);
                 const double ik = in.I(k);
                 if (!(ik > 0.0)) hyp.fail("I_k not positive");
                 e.hyp_pass = hyp.ok;
                 e.hyp_detail = hyp.detail;
                 if (!hyp.ok) return e;
                 const double ikm1 = in.I(k - 1), ikm2 = in.I(k - 2);
                 const double deficit = (ikm1 * ikm1 - ik * ikm2) / ik;
                 const double dist = d2sq(s, k, ikm1 / ik);
                 e.lhs = deficit + dist;
                 e.rhs = nfi(s, k, [](double) { return 1.0; });
                 e.term_scale = std::abs(ikm1 * ikm1 / ik) + std::abs(ikm2) + dist + std::abs(e.rhs);
                 return e;
             }});

        add({.id = "minkowski-" + std::to_string(k),
             .kind = CheckKind::Identity,
             .k = k,
             .origin = OriginPolicy::AsGiven,
             .hypotheses = "none",
             .eval = [k](const CheckInput& in) {
                 const SampleSet& s = in.samples;
                 CheckEval e;
                 e.lhs = in.I(k - 1);
                 e.rhs = wci(s, k, [](double u, double, int) { return u; });
                 e.term_scale = std::abs(e.lhs) + std::abs(e.rhs);
                 return e;
             }});

        for (const PhiTag& pt : kPhiSet) {
            const PhiSpec phi = phi_catalog(pt.family, pt.m);

            add({.id = "weighted-minkowski-" + std::string(pt.tag) + "-" + std::to_string(k),
                 .kind = CheckKind::Identity,
                 .k = k,
                 .m = pt.m,
                 .phi = pt.tag,
                 .origin = OriginPolicy::AsGiven,
                 .hypotheses = "Range(u) in dom(phi)",
                 .eval = [k, phi](const CheckInput& in) {
                 const SampleSet& s = in.samples;
                     CheckEval e;
                     Hyp hyp;
                     hyp.need_phi_domain(s, phi);
                     e.hyp_pass = hyp.ok;
                     e.hyp_detail = hyp.detail;
                     if (!hyp.ok) return e;
                     const double a = wci(s, k - 1, [&](double u, double, int) { return phi.value(u); });
                     const double b = wci(s, k, [&](double u, double, int) { return u * phi.value(u); });
                     e.lhs = a - b;
                     e.rhs = -nfi(s, k, [&](double u) { return phi.d1(u); });
                     e.term_scale = std::abs(a) + std::abs(b) + std::abs(e.rhs);
                     return e;
                 }});

            add({.id = "supp-identity-" + std::string(pt.tag) + "-" + std::to_string(k),
                 .kind = CheckKind::Identity,
                 .k = k,
                 .m = pt.m,
                 .phi = pt.tag,
                 .origin = OriginPolicy::AsGiven,
                 .hypotheses = "H_k >= 0, I_k > 0, Range(u) in dom(phi)",
                 .eval = [k, phi](const CheckInput& in) {
                 const SampleSet& s = in.samples;
                     CheckEval e;
                     Hyp hyp;
                     hyp.need_hk_nonneg(s, k);
                     hyp.need_phi_domain(s, phi);
                     const double ik = in.I(k);
                     if (!(ik > 0.0)) hyp.fail("I_k not positive");
                     e.hyp_pass = hyp.ok;
                     e.hyp_detail = hyp.detail;
                     if (!hyp.ok) return e;
                     const double ubar = in.I(k - 1) / ik;
                     if (!phi.contains(ubar)) {
                         e.hyp_pass = false;
                         e.hyp_detail = "mean support value leaves the domain of " + phi.name();
                         return e;
                     }
                     const double hkphi = wci(s, k, [&](double u, double, int) { return phi.value(u); });
                     e.lhs = hkphi - ik * phi.value(ubar);
                     e.rhs = jensen_deficit(s, k, phi);
                     e.term_scale = std::abs(hkphi) + std::abs(ik * phi.value(ubar));
                     return e;
                 }});

            // Jensen sandwich, two one-sided checks.
            for (const bool upper : {false, true}) {
                add({.id = std::string("supp-jensen-") + (upper ? "upper-" : "lower-") + pt.tag + "-" +
                           std::to_string(k),
                     .kind = CheckKind::Inequality,
                     .k = k,
                     .m = pt.m,
                     .phi = pt.tag,
                     .origin = OriginPolicy::AsGiven,
                     .hypotheses = "H_k >= 0, I_k > 0, Range(u) in dom(phi)",
                     .eval = [k, phi, upper](const CheckInput& in) {
                 const SampleSet& s = in.samples;
                         CheckEval e;
                         Hyp hyp;
                         hyp.need_hk_nonneg(s, k);
                         hyp.need_phi_domain(s, phi);
                         const double ik = in.I(k);
                         if (!(ik > 0.0)) hyp.fail("I_k not positive");
                         e.hyp_pass = hyp.ok;
                         e.hyp_detail = hyp.detail;
                         if (!hyp.ok) return e;
                         const double ubar = in.I(k - 1) / ik;
                         if (!phi.contains(ubar)) {
                             e.hyp_pass = false;
                             e.hyp_detail = "mean support value leaves the domain of " + phi.name();
                             return e;
                         }
                         const auto [d2min, d2max] = second_derivative_bounds(phi, support_range(s));
                         const double hkphi = wci(s, k, [&](double u, double, int) { return phi.value(u); });
                         const double base = ik * phi.value(ubar);
                         const double dist = d2sq(s, k, ubar);
                         if (upper) {
                             e.lhs = hkphi;
                             e.rhs = base + 0.5 * d2max * dist;
                         } else {
                             e.lhs = base + 0.5 * d2min * dist;
                             e.rhs = hkphi;
                         }
                         e.term_scale = std::abs(hkphi) + std::abs(base) +
                                        0.5 * std::max(std::abs(d2min), std::abs(d2max)) * dist;
                         return e;
                     }});
            }
        }

        add({.id = "circumradius-" + std::to_string(k),
             .kind = CheckKind::Inequality,
             .k = k,
             .origin = OriginPolicy::Circumcenter,
             .hypotheses = "H_k > 0",
             .eval = [k](const CheckInput& in) {
                 const SampleSet& s = in.samples;
                 const double rho = in.circumradius;
                 CheckEval e;
                 Hyp hyp;
                 hyp.need_hk_pos(s, k);
                 e.hyp_pass = hyp.ok;
                 e.hyp_detail = hyp.detail;
                 if (!hyp.ok) return e;
                 e.lhs = in.I(k - 1) / in.I(k);
                 e.rhs = rho;
                 e.term_scale = std::abs(e.lhs) + std::abs(e.rhs);
                 return e;
             }});

        add({.id = "rn-inv-u-" + std::to_string(k),
             .kind = CheckKind::Inequality,
             .k = k,
             .origin = OriginPolicy::Circumcenter,
             .hypotheses = "H_{k-1} > 0, star-shaped about the circumcenter",
             .eval = [k](const CheckInput& in) {
                 const SampleSet& s = in.samples;
                 const double rho = in.circumradius;
                 CheckEval e;
                 Hyp hyp;
                 if (k >= 2) hyp.need_hk_pos(s, k - 1);
                 hyp.need_star_shaped(s);
                 e.hyp_pass = hyp.ok;
                 e.hyp_detail = hyp.detail;
                 if (!hyp.ok) return e;
                 const double ik = in.I(k), ikm1 = in.I(k - 1), ikm2 = in.I(k - 2);
                 const double deficit = (ikm1 * ikm1 - ik * ikm2) / ikm2;
                 const double dist = d2sq(s, k - 1, ikm2 / ikm1);
                 e.lhs = deficit + dist / (rho * rho * rho);
                 e.rhs = nfi(s, k, [](double u) { return 1.0 / (u * u); });
                 e.term_scale = std::abs(ikm1 * ikm1 / ikm2) + std::abs(ik) + dist + std::abs(e.rhs);
                 return e;
             }});

        add({.id = "rn-log-" + std::to_string(k),
             .kind = CheckKind::Inequality,
             .k = k,
             .origin = OriginPolicy::Circumcenter,
             .hypotheses = "H_k > 0, star-shaped about the circumcenter",
             .eval = [k](const CheckInput& in) {
                 const SampleSet& s = in.samples;
                 const double rho = in.circumradius;
                 CheckEval e;
                 Hyp hyp;
                 hyp.need_hk_pos(s, k);
                 hyp.need_star_shaped(s);
                 e.hyp_pass = hyp.ok;
                 e.hyp_detail = hyp.detail;
                 if (!hyp.ok) return e;
                 const double ik = in.I(k), ikm1 = in.I(k - 1), ikm2 = in.I(k - 2);
                 const double lg = ikm1 * std::log(ikm1 * ikm1 / (ik * ikm2));
                 const double dk = d2sq(s, k, ikm1 / ik);
                 const double dkm1 = d2sq(s, k - 1, ikm2 / ikm1);
                 e.lhs = lg + dk / (2.0 * rho) + dkm1 / (2.0 * rho * rho);
                 e.rhs = nfi(s, k, [](double u) { return 1.0 / u; });
                 e.term_scale = std::abs(lg) + dk + dkm1 + std::abs(e.rhs);
                 return e;
             }});

        for (const double m : {0.5, 1.0, 1.5, 2.0}) {
            add({.id = "tan-rn-" + std::to_string(k) + "-" + fmt_num(m),
                 .kind = CheckKind::Inequality,
                 .k = k,
                 .m = m,
                 .origin = OriginPolicy::Circumcenter,
                 .hypotheses = "convex",
                 .eval = [k, m](const CheckInput& in) {
                 const SampleSet& s = in.samples;
                 const double rho = in.circumradius;
                     CheckEval e;
                     Hyp hyp;
                     hyp.need_convex(s);
                     hyp.need_u_nonneg(s);
                     e.hyp_pass = hyp.ok;
                     e.hyp_detail = hyp.detail;
                     if (!hyp.ok) return e;
                     const double ik = in.I(k), ikm1 = in.I(k - 1), ikm2 = in.I(k - 2);
                     const double rm = std::pow(rho, m);
                     const double base = std::pow(ik, m - 1.0) * (ikm1 * ikm1 - ik * ikm2) /
                                         (std::pow(ik, m) + std::pow(ikm1, m));
                     const double dk = d2sq(s, k, ikm1 / ik);
                     double lhs = base + (2.0 + (2.0 - m) * rm) / (2.0 * (1.0 + rm) * (1.0 + rm)) * dk;
                     double dkm1 = 0.0;
                     if (m <= 1.0) {
                         dkm1 = d2sq(s, k - 1, ikm2 / ikm1);
                         lhs += m / (2.0 * (1.0 + rm) * (1.0 + rm) * std::pow(rho, 1.0 - m)) * dkm1;
                     }
                     e.lhs = lhs;
                     // u >= 0 up to rounding at the circumcenter; clamp noise.
                     e.rhs = nfi(s, k, [m](double u) { return 1.0 / (1.0 + std::pow(std::max(u, 0.0), m)); });
                     e.term_scale = std::abs(base) + dk + dkm1 + std::abs(e.rhs);
                     return e;
                 }});
        }

        for (const double m : {0.0, 0.25, 0.5, 0.75}) {
            add({.id = "um-rn-i-" + std::to_string(k) + "-" + fmt_num(m),
                 .kind = CheckKind::Inequality,
                 .k = k,
                 .m = m,
                 .origin = OriginPolicy::Circumcenter,
                 .hypotheses = "strictly convex, u > 0",
                 .eval = [k, m](const CheckInput& in) {
                 const SampleSet& s = in.samples;
                 const double rho = in.circumradius;
                     CheckEval e;
                     Hyp hyp;
                     hyp.need_strictly_convex(s);
                     hyp.need_star_shaped(s);
                     e.hyp_pass = hyp.ok;
                     e.hyp_detail = hyp.detail;
                     if (!hyp.ok) return e;
                     const double ik = in.I(k), ikm1 = in.I(k - 1), ikm2 = in.I(k - 2);
                     const double dk = d2sq(s, k, ikm1 / ik);
                     const double dkm1 = d2sq(s, k - 1, ikm2 / ikm1);
                     const double base = std::pow(ik / ikm1, 1.0 - m) * (ikm1 * ikm1 - ik * ikm2) / ik;
                     e.lhs = base + (m + 1.0) / (2.0 * std::pow(rho, 1.0 - m)) * dk +
                             (1.0 - m) / (2.0 * std::pow(rho, 2.0 - m)) * dkm1;
                     e.rhs = nfi(s, k, [m](double u) { return std::pow(u, m - 1.0); });
                     e.term_scale = std::abs(base) + dk + dkm1 + std::abs(e.rhs);
                     return e;
                 }});
        }

        for (const double m : {0.0, 0.5, 1.0}) {
            add({.id = "um-rn-ii-" + std::to_string(k) + "-" + fmt_num(m),
                 .kind = CheckKind::Inequality,
                 .k = k,
                 .m = m,
                 .origin = OriginPolicy::Circumcenter,
                 .hypotheses = "strictly convex, u > 0",
                 .eval = [k, m](const CheckInput& in) {
                 const SampleSet& s = in.samples;
                 const double rho = in.circumradius;
                     CheckEval e;
                     Hyp hyp;
                     hyp.need_strictly_convex(s);
                     hyp.need_star_shaped(s);
                     e.hyp_pass = hyp.ok;
                     e.hyp_detail = hyp.detail;
                     if (!hyp.ok) return e;
                     const double ik = in.I(k), ikm1 = in.I(k - 1), ikm2 = in.I(k - 2);
                     const double dk = d2sq(s, k, ikm1 / ik);
                     const double dkm1 = d2sq(s, k - 1, ikm2 / ikm1);
                     const double base = std::pow(ikm2 / ikm1, 1.0 - m) * (ikm1 * ikm1 - ik * ikm2) / ikm2;
                     e.lhs = base + (1.0 - m) / (2.0 * std::pow(rho, m + 1.0)) * dk +
                             (m + 1.0) / (2.0 * std::pow(rho, m + 2.0)) * dkm1;
                     e.rhs = nfi(s, k, [m](double u) { return std::pow(u, -(m + 1.0)); });
                     e.term_scale = std::abs(base) + dk + dkm1 + std::abs(e.rhs);
                     return e;
                 }});
        }

        add({.id = "af-classical-" + std::to_string(k),
             .kind = CheckKind::Inequality,
             .k = k,
             .origin = OriginPolicy::AsGiven,
             .hypotheses = "convex",
             .eval = [k](const CheckInput& in) {
                 const SampleSet& s = in.samples;
                 CheckEval e;
                 Hyp hyp;
                 hyp.need_convex(s);
                 e.hyp_pass = hyp.ok;
                 e.hyp_detail = hyp.detail;
                 if (!hyp.ok) return e;
                 const double ikm1 = in.I(k - 1);
                 e.lhs = in.I(k) * in.I(k - 2);
                 e.rhs = ikm1 * ikm1;
                 e.term_scale = std::abs(e.lhs) + std::abs(e.rhs);
                 return e;
             }});
    }

    add({.id = "hn-x2",
         .kind = CheckKind::Inequality,
         .k = n,
         .origin = OriginPolicy::AsGiven,
         .hypotheses = "convex",
         .eval = [n, omega](const CheckInput& in) {
                 const SampleSet& s = in.samples;
             CheckEval e;
             Hyp hyp;
             hyp.need_convex(s);
             e.hyp_pass = hyp.ok;
             e.hyp_detail = hyp.detail;
             if (!hyp.ok) return e;
             const double inm1 = in.I(n - 1), inm2 = in.I(n - 2);
             const double hnx2 = wci(s, n, [](double, double x2, int) { return x2; });
             const double dist = delta2_sq_to_ball(s, Ball{Eigen::Vector3d::Zero(), inm1 / omega});
             e.lhs = n * dist;
             e.rhs = hnx2 - (n + 1.0) * inm1 * inm1 / omega + n * inm2;
             e.term_scale = hnx2 + (n + 1.0) * inm1 * inm1 / omega + std::abs(n * inm2) + e.lhs;
             return e;
         }});

    add({.id = "thm1-identity",
         .kind = CheckKind::Identity,
         .k = n,
         .origin = OriginPolicy::AsGiven,
         .hypotheses = "convex",
         .eval = [n, omega](const CheckInput& in) {
                 const SampleSet& s = in.samples;
             CheckEval e;
             Hyp hyp;
             hyp.need_convex(s);
             e.hyp_pass = hyp.ok;
             e.hyp_detail = hyp.detail;
             if (!hyp.ok) return e;
             const double inm1 = in.I(n - 1), inm2 = in.I(n - 2);
             const double hnx2 = wci(s, n, [](double, double x2, int) { return x2; });
             const double dist = delta2_sq_to_ball(s, Ball{Eigen::Vector3d::Zero(), inm1 / omega});
             e.lhs = hnx2 - (n + 1.0) * inm1 * inm1 / omega + n * inm2;
             e.rhs = (n + 1.0) * dist;
             e.term_scale = hnx2 + (n + 1.0) * inm1 * inm1 / omega + std::abs(n * inm2) + e.rhs;
             return e;
         }});

    add({.id = "km-weight",
         .kind = CheckKind::Inequality,
         .k = 1,
         .origin = OriginPolicy::AsGiven,
         .hypotheses = "star-shaped, H_1 >= 0",
         .eval = [](const CheckInput& in) {
                 const SampleSet& s = in.samples;
             CheckEval e;
             Hyp hyp;
             hyp.need_star_shaped(s);
             hyp.need_hk_nonneg(s, 1);
             e.hyp_pass = hyp.ok;
             e.hyp_detail = hyp.detail;
             if (!hyp.ok) return e;
             e.lhs = in.I(-1);
             e.rhs = wci(s, 1, [](double, double x2, int) { return x2; });
             e.term_scale = std::abs(e.lhs) + std::abs(e.rhs);
             return e;
         }});

    add({.id = "girao-weight",
         .kind = CheckKind::Inequality,
         .k = 1,
         .origin = OriginPolicy::AsGiven,
         .hypotheses = "star-shaped, H_1 >= 0",
         .eval = [n, omega](const CheckInput& in) {
                 const SampleSet& s = in.samples;
             CheckEval e;
             Hyp hyp;
             hyp.need_star_shaped(s);
             hyp.need_hk_nonneg(s, 1);
             e.hyp_pass = hyp.ok;
             e.hyp_detail = hyp.detail;
             if (!hyp.ok) return e;
             e.lhs = omega * std::pow(in.I(0) / omega, (n + 1.0) / n);
             e.rhs = wci(s, 1, [](double, double x2, int) { return x2; });
             e.term_scale = std::abs(e.lhs) + std::abs(e.rhs);
             return e;
         }});

    for (int k = 2; k <= n; ++k) {
        add({.id = "km2-weight-" + std::to_string(k),
             .kind = CheckKind::Inequality,
             .k = k,
             .origin = OriginPolicy::AsGiven,
             .hypotheses = "H_k > 0",
             .eval = [k](const CheckInput& in) {
                 const SampleSet& s = in.samples;
                 CheckEval e;
                 Hyp hyp;
                 hyp.need_hk_pos(s, k);
                 e.hyp_pass = hyp.ok;
                 e.hyp_detail = hyp.detail;
                 if (!hyp.ok) return e;
                 e.lhs = in.I(k - 2);
                 e.rhs = wci(s, k, [](double, double x2, int) { return x2; });
                 e.term_scale = std::abs(e.lhs) + std::abs(e.rhs);
                 return e;
             }});
    }

    add({.id = "steiner-min",
         .kind = CheckKind::Inequality,
         .k = n,
         .origin = OriginPolicy::AsGiven,
         .hypotheses = "convex",
         .eval = [n](const CheckInput& in) {
                 const SampleSet& s = in.samples;
             CheckEval e;
             Hyp hyp;
             hyp.need_convex(s);
             e.hyp_pass = hyp.ok;
             e.hyp_detail = hyp.detail;
             if (!hyp.ok) return e;
             const Ball bz = steiner_ball(s);
             e.lhs = delta2_sq_to_ball(s, bz);
             // 50 deterministic comparison balls around the Steiner ball.
             std::mt19937_64 rng(777);
             std::uniform_real_distribution<double> u01(0.0, 1.0);
             double best = std::numeric_limits<double>::infinity();
             for (int i = 0; i < 50; ++i) {
                 Eigen::Vector3d dir(u01(rng) - 0.5, u01(rng) - 0.5, n == 2 ? u01(rng) - 0.5 : 0.0);
                 if (dir.norm() < 1e-9) dir = Eigen::Vector3d(1, 0, 0);
                 dir.normalize();
                 Ball cand;
                 cand.center = bz.center + (0.1 + 0.6 * u01(rng)) * bz.radius * dir;
                 cand.radius = bz.radius * (0.5 + u01(rng));
                 best = std::min(best, delta2_sq_to_ball(s, cand));
             }
             e.rhs = best;
             e.term_scale = e.lhs + e.rhs;
             return e;
         }});

    add({.id = "groemer-bound",
         .kind = CheckKind::Inequality,
         .k = n,
         .origin = OriginPolicy::AsGiven,
         .hypotheses = "convex",
         .eval = [n, bc](const CheckInput& in) {
                 const SampleSet& s = in.samples;
             CheckEval e;
             Hyp hyp;
             hyp.need_convex(s);
             e.hyp_pass = hyp.ok;
             e.hyp_detail = hyp.detail;
             if (!hyp.ok) return e;
             const double vol = in.I(-1) / (n + 1.0);
             const double inm2 = in.I(n - 2);
             const double dist = delta2_sq_to_ball(s, steiner_ball(s));
             e.lhs = bc.eta_n * std::pow(vol, n) / inm2 * dist;
             e.rhs = isoperimetric_deficit(s);
             e.term_scale = e.lhs + std::abs(e.rhs) + 1.0;
             return e;
         }});

    add({.id = "cor-isop",
         .kind = CheckKind::Inequality,
         .k = n,
         .origin = OriginPolicy::SteinerPoint,
         .hypotheses = "convex, origin at the Steiner point",
         .eval = [n, bc, omega](const CheckInput& in) {
                 const SampleSet& s = in.samples;
             CheckEval e;
             Hyp hyp;
             hyp.need_convex(s);
             e.hyp_pass = hyp.ok;
             e.hyp_detail = hyp.detail;
             if (!hyp.ok) return e;
             const double inm1 = in.I(n - 1), inm2 = in.I(n - 2);
             const double hnx2 = wci(s, n, [](double, double x2, int) { return x2; });
             const double vol = in.I(-1) / (n + 1.0);
             e.lhs = hnx2 - (n + 1.0) * inm1 * inm1 / omega + n * inm2;
             e.rhs = (n + 1.0) * inm2 / (bc.eta_n * std::pow(vol, n)) * isoperimetric_deficit(s);
             e.term_scale = hnx2 + (n + 1.0) * inm1 * inm1 / omega + std::abs(n * inm2) + std::abs(e.rhs);
             return e;
         }});

    add({.id = "hausdorff-l2",
         .kind = CheckKind::Inequality,
         .k = n,
         .origin = OriginPolicy::AsGiven,
         .hypotheses = "convex",
         .eval = [n, bc](const CheckInput& in) {
                 const SampleSet& s = in.samples;
             CheckEval e;
             Hyp hyp;
             hyp.need_convex(s);
             e.hyp_pass = hyp.ok;
             e.hyp_detail = hyp.detail;
             if (!hyp.ok) return e;
             const Ball bz = steiner_ball(s);
             const double haus = hausdorff_to_ball(s, bz);
             const double dOmega = sample_diameter(s);
             const double far = [&] {
                 double f = 0.0;
                 for (const SurfaceSample& q : s.s) f = std::max(f, (q.X - bz.center).norm());
                 return f;
             }();
             const double D = std::max({dOmega, 2.0 * bz.radius, far + bz.radius});
             e.lhs = bc.c_n * std::pow(D, -n) * std::pow(haus, n + 2);
             e.rhs = delta2_sq_to_ball(s, bz);
             e.term_scale = e.lhs + e.rhs + 1.0;
             return e;
         }});

    std::sort(specs.begin(), specs.end(),
              [](const CheckSpec& a, const CheckSpec& b) { return a.id < b.id; });
    return specs;
}

}  // namespace

const std::vector<CheckSpec>& check_registry(int n) {
    if (n != 1 && n != 2) throw UsageError("check_registry: n must be 1 or 2");
    static const std::vector<CheckSpec> reg1 = build_registry(1);
    static const std::vector<CheckSpec> reg2 = build_registry(2);
    return n == 1 ? reg1 : reg2;
}

const CheckSpec& find_check(const std::string& id, int n) {
    for (const CheckSpec& s : check_registry(n))
        if (s.id == id) return s;
    throw UsageError("unknown check id '" + id + "' for dimension n = " + std::to_string(n));
}

// ---------------------------------------------------------------------------

CheckContext::CheckContext(const Shape& shape, const SphereGrid& grid,
                           const Eigen::Vector3d& pre_shift) {
    dim_ = grid.dim;
    grid_desc_ = grid.describe();
    const SphereGrid refined =
        grid.dim == 1 ? grid_s1(2 * grid.n_theta) : grid_s2(2 * grid.n_lat, 2 * grid.n_lon);
    const SphereGrid* grids[2] = {&grid, &refined};
    for (int g = 0; g < 2; ++g) {
        base_[g] = translated(sample_shape(shape, *grids[g]), pre_shift);
        const Ball cb = circumball(base_[g]);
        circumradius_[g] = cb.radius;
        recentered_[g] = translated(base_[g], -cb.center);
        steinered_[g] = translated(base_[g], -steiner_point_samples(base_[g]));
        const SampleSet* sets[3] = {&base_[g], &recentered_[g], &steinered_[g]};
        for (int p = 0; p < 3; ++p)
            for (int k = -1; k <= dim_; ++k)
                iq_[p][g][static_cast<std::size_t>(k + 1)] = quermass(*sets[p], k);
    }
}

CheckInput CheckContext::input(OriginPolicy policy, bool refined) const {
    const int g = refined ? 1 : 0;
    const int p = policy == OriginPolicy::AsGiven ? 0 : (policy == OriginPolicy::Circumcenter ? 1 : 2);
    return CheckInput{samples(policy, refined), circumradius_[g], iq_[p][g]};
}

const SampleSet& CheckContext::samples(OriginPolicy policy, bool refined) const {
    const int g = refined ? 1 : 0;
    switch (policy) {
        case OriginPolicy::AsGiven: return base_[g];
        case OriginPolicy::Circumcenter: return recentered_[g];
        default: return steinered_[g];
    }
}

double CheckContext::circumradius(bool refined) const { return circumradius_[refined ? 1 : 0]; }

CheckResult run_check(const CheckSpec& spec, CheckContext& ctx) {
    CheckResult res;
    res.id = spec.id;
    res.kind = spec.kind == CheckKind::Identity ? "identity" : "inequality";
    res.grid = ctx.grid_desc();

    CheckEval coarse;
    try {
        coarse = spec.eval(ctx.input(spec.origin, false));
    } catch (const HypothesisError& ex) {
        coarse.hyp_pass = false;
        coarse.hyp_detail = ex.what();
    }
    if (!coarse.hyp_pass) {
        res.verdict = "skipped-hypothesis";
        res.hypothesis_status = "fail: " + coarse.hyp_detail;
        return res;
    }
    res.hypothesis_status = "pass";
    res.lhs = coarse.lhs;
    res.rhs = coarse.rhs;
    res.residual_or_slack = spec.kind == CheckKind::Identity ? std::abs(coarse.lhs - coarse.rhs)
                                                             : coarse.rhs - coarse.lhs;

    double delta = 0.0;
    try {
        const CheckEval fine = spec.eval(ctx.input(spec.origin, true));
        if (fine.hyp_pass)
            delta = std::max(std::abs(coarse.lhs - fine.lhs), std::abs(coarse.rhs - fine.rhs));
    } catch (const HypothesisError&) {
        // Borderline hypothesis on the refined grid; keep the floors below.
    }
    res.refinement_delta = delta;
    const double side_scale = std::max(std::abs(coarse.lhs), std::abs(coarse.rhs));
    res.tol = std::max({1e-9 * side_scale, 4.0 * delta, 1e-12 * std::max(coarse.term_scale, 1.0)});
    const bool ok = spec.kind == CheckKind::Identity ? res.residual_or_slack <= res.tol
                                                     : res.residual_or_slack >= -res.tol;
    res.verdict = ok ? "pass" : "fail";
    return res;
}

std::vector<CheckResult> run_suite(const Shape& shape, const SphereGrid& grid,
                                   const std::vector<std::string>& selection,
                                   const Eigen::Vector3d& pre_shift) {
    const int n = grid.dim;
    std::vector<const CheckSpec*> chosen;
    if (selection.empty() || (selection.size() == 1 && selection[0] == "all")) {
        for (const CheckSpec& s : check_registry(n)) chosen.push_back(&s);
    } else {
        for (const std::string& id : selection) chosen.push_back(&find_check(id, n));
        std::sort(chosen.begin(), chosen.end(),
                  [](const CheckSpec* a, const CheckSpec* b) { return a->id < b->id; });
    }

    CheckContext ctx(shape, grid, pre_shift);
    std::vector<CheckResult> results(chosen.size());

    unsigned threads = std::thread::hardware_concurrency();
    if (const char* env = std::getenv("AFLAB_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) threads = static_cast<unsigned>(cap);
    }
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(chosen.size())));

    if (threads == 1) {
        for (std::size_t i = 0; i < chosen.size(); ++i) results[i] = run_check(*chosen[i], ctx);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex err_mutex;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= chosen.size()) return;
                try {
                    results[i] = run_check(*chosen[i], ctx);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        });
    for (std::thread& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return results;
}

std::vector<ConvergenceRow> convergence_study(const Shape& shape, const std::string& check_id,
                                              const std::vector<std::string>& grids) {
    if (grids.size() < 2) throw UsageError("convergence_study: need at least 2 grid sizes");
    const int n = shape_dim(shape);
    const CheckSpec& spec = find_check(check_id, n);
    std::vector<ConvergenceRow> rows;
    for (const std::string& gtext : grids) {
        const SphereGrid grid = parse_grid(gtext, n);
        CheckContext ctx(shape, grid);
        const CheckResult r = run_check(spec, ctx);
        rows.push_back({r.grid, r.residual_or_slack, r.verdict});
    }
    return rows;
}

}  // namespace aflab
