#pragma once

#include <Eigen/Core>
#include <functional>
#include <string>
#include <variant>

namespace aflab {

/// Convex body given by its support function h on S^dim. Sampling applies
/// the reverse Weingarten map W = Hess h + h g and fails if W is not
/// positive definite (convexity validation happens at sampling time).
struct SupportBody {
    int dim = 1;
    std::function<double(const Eigen::Vector3d&)> h;
};

/// Star-shaped body given by a positive radial function r on S^dim.
struct RadialGraph {
    int dim = 1;
    std::function<double(const Eigen::Vector3d&)> r;
};

/// Closed curve (x(t), y(t)), t in [0, 2 pi). Orientation is normalized to
/// counterclockwise at sampling time.
struct ParametricCurve {
    std::function<double(double)> x, y;
    std::string x_src, y_src;  // optional, for reports
};

using Shape = std::variant<SupportBody, RadialGraph, ParametricCurve>;

/// Surface dimension n of the shape (1 for curves, 2 for surfaces).
int shape_dim(const Shape& shape);

/// Translate the body by v. Support functions pick up <v, xi>; parametric
/// curves shift coordinates; an S^1 radial graph is re-expressed as a
/// parametric curve. S^2 radial graphs cannot be translated exactly in
/// this representation and are rejected (ShapeError) for v != 0.
Shape translate(const Shape& shape, const Eigen::Vector3d& v);

/// Convenience constructors for the common reference bodies.
Shape make_ball_support(int dim, double radius, const Eigen::Vector3d& center);
Shape make_ball_radial(int dim, double radius);
Shape make_ellipse_parametric(double a, double b);
Shape make_ellipse_radial(double a, double b);

}  // namespace aflab
