#pragma once

#include <vector>

namespace aflab {

/// Principal curvatures of an n-dimensional hypersurface at one point.
/// n is 1 or 2 for the shipped shape families; the algebra itself works
/// for any n (the property tests use up to n = 6).
struct CurvatureTuple {
    std::vector<double> kappa;

    int n() const { return static_cast<int>(kappa.size()); }
};

/// Binomial coefficient C(n, k) as a double. Requires 0 <= k <= n.
double binomial(int n, int k);

/// k-th elementary symmetric polynomial sigma_k(kappa); sigma_0 = 1.
/// Throws DomainError unless 0 <= k <= n.
double elem_sym(const CurvatureTuple& kappa, int k);

/// Normalized k-th mean curvature H_k = sigma_k / C(n, k).
double normalized_mean_curv(const CurvatureTuple& kappa, int k);

/// Eigenvalues t_k(i) of the k-th Newton tensor in the principal frame:
/// t_k(i) = sigma_k of the tuple with kappa_i removed, computed by the
/// recursion t_0(i) = 1, t_k(i) = sigma_k - kappa_i * t_{k-1}(i).
/// Requires 0 <= k <= n-1.
std::vector<double> newton_eigen(const CurvatureTuple& kappa, int k);

/// The quadratic form (T_{k-1} o A)(v, v) = sum_i kappa_i t_{k-1}(i) v_i^2
/// for a tangent vector with principal-frame components comps.
/// Requires 1 <= k <= n and comps.size() == n.
double newton_shape_quadratic(const CurvatureTuple& kappa, int k,
                              const std::vector<double>& comps);

}  // namespace aflab
