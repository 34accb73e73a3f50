#pragma once

#include <Eigen/Core>
#include <array>
#include <string>
#include <vector>

#include "aflab/grid.hpp"
#include "aflab/shape.hpp"
#include "aflab/symfun.hpp"

namespace aflab {

/// Per-node geometric state of the sampled hypersurface. dir holds the
/// ambient principal directions, tang the principal-frame components of
/// X^T = X - u nu; dmu = jac * (node weight).
struct SurfaceSample {
    Eigen::Vector3d X{0, 0, 0};
    Eigen::Vector3d nu{0, 0, 0};
    double u = 0;
    std::array<double, 2> kappa{0, 0};
    std::array<Eigen::Vector3d, 2> dir{Eigen::Vector3d::Zero(), Eigen::Vector3d::Zero()};
    std::array<double, 2> tang{0, 0};
    double jac = 0;
    double w = 0;
};

struct SampleSet {
    int n = 1;  // surface dimension
    std::string grid_desc;
    std::vector<SurfaceSample> s;

    std::size_t size() const { return s.size(); }
    CurvatureTuple curvature(std::size_t j) const {
        const SurfaceSample& q = s[j];
        if (n == 1) return CurvatureTuple{{q.kappa[0]}};
        return CurvatureTuple{{q.kappa[0], q.kappa[1]}};
    }
};

/// Sample a convex body from node values of its support function.
/// X = h xi + grad h, nu = xi, kappa_i = 1 / eigenvalue_i(Hess h + h g),
/// jac = det(Hess h + h g). Throws ShapeError if the reverse Weingarten
/// map fails positive definiteness at any node.
SampleSet sample_support_body(const Eigen::VectorXd& h, const SphereGrid& grid);

/// Sample a star-shaped body X = r(xi) xi from node values of r > 0.
SampleSet sample_radial_graph(const Eigen::VectorXd& r, const SphereGrid& grid);

/// Sample a closed curve; orientation normalized to counterclockwise.
/// Throws ShapeError when |X'(t)| < 1e-10 at a node.
SampleSet sample_parametric_curve(const ParametricCurve& curve, const SphereGrid& grid);

/// Dispatch on the shape family; validates grid/shape dimension.
SampleSet sample_shape(const Shape& shape, const SphereGrid& grid);

/// Evaluate a shape's scalar field (support or radial values) on the grid.
Eigen::VectorXd field_on_grid(const std::function<double(const Eigen::Vector3d&)>& f,
                              const SphereGrid& grid);

/// Samples of the body translated by v. Exact: curvatures, normals and
/// principal directions are translation invariant; only X, u and the
/// tangential components move.
SampleSet translated(const SampleSet& in, const Eigen::Vector3d& v);

enum class HypothesisLevel { Convex, StrictlyConvex, KConvex, StarShaped };

struct HypothesisReport {
    bool pass = false;
    int worst_node = -1;
    double min_value = 0;
    std::string detail;
};

/// Per-node minima of the quantity the level asks about (principal
/// curvatures, H_j for j <= k, or the support value u). Report-only.
HypothesisReport check_hypotheses(const SampleSet& samples, HypothesisLevel level, int k = 0);

}  // namespace aflab
