#include "aflab/symfun.hpp"

#include <string>

#include "aflab/errors.hpp"

namespace aflab {

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    if (k > n - k) k = n - k;
    double r = 1.0;
    for (int i = 0; i < k; ++i) r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
    return r;
}

namespace {

// All sigma_0..sigma_n by the usual one-pass recurrence.
std::vector<double> all_elem_sym(const std::vector<double>& z) {
    std::vector<double> e(z.size() + 1, 0.0);
    e[0] = 1.0;
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = i + 1; j >= 1; --j) e[j] += z[i] * e[j - 1];
    return e;
}

void require_k(int k, int lo, int hi, const char* op) {
    if (k < lo || k > hi)
        throw DomainError(std::string(op) + ": k = " + std::to_string(k) +
                          " out of range [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
}

}  // namespace

double elem_sym(const CurvatureTuple& kappa, int k) {
    require_k(k, 0, kappa.n(), "elem_sym");
    return all_elem_sym(kappa.kappa)[static_cast<std::size_t>(k)];
}

double normalized_mean_curv(const CurvatureTuple& kappa, int k) {
    require_k(k, 0, kappa.n(), "normalized_mean_curv");
    return all_elem_sym(kappa.kappa)[static_cast<std::size_t>(k)] / binomial(kappa.n(), k);
}

std::vector<double> newton_eigen(const CurvatureTuple& kappa, int k) {
    const int n = kappa.n();
    require_k(k, 0, n - 1, "newton_eigen");
    const std::vector<double> sigma = all_elem_sym(kappa.kappa);
    std::vector<double> t(static_cast<std::size_t>(n), 1.0);
    for (int j = 1; j <= k; ++j)
        for (int i = 0; i < n; ++i)
            t[static_cast<std::size_t>(i)] =
                sigma[static_cast<std::size_t>(j)] - kappa.kappa[static_cast<std::size_t>(i)] * t[static_cast<std::size_t>(i)];
    return t;
}

double newton_shape_quadratic(const CurvatureTuple& kappa, int k,
                              const std::vector<double>& comps) {
    const int n = kappa.n();
    require_k(k, 1, n, "newton_shape_quadratic");
    if (static_cast<int>(comps.size()) != n)
        throw DomainError("newton_shape_quadratic: comps has length " +
                          std::to_string(comps.size()) + ", expected " + std::to_string(n));
    const std::vector<double> t = newton_eigen(kappa, k - 1);
    double q = 0.0;
    for (int i = 0; i < n; ++i) {
        const std::size_t ui = static_cast<std::size_t>(i);
        q += kappa.kappa[ui] * t[ui] * comps[ui] * comps[ui];
    }
    return q;
}

}  // namespace aflab
