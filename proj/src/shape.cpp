#include "aflab/shape.hpp"

#include <cmath>

#include "aflab/errors.hpp"

namespace aflab {

int shape_dim(const Shape& shape) {
    if (const auto* sb = std::get_if<SupportBody>(&shape)) return sb->dim;
    if (const auto* rg = std::get_if<RadialGraph>(&shape)) return rg->dim;
    return 1;
}

Shape translate(const Shape& shape, const Eigen::Vector3d& v) {
    if (const auto* sb = std::get_if<SupportBody>(&shape)) {
        auto h = sb->h;
        return SupportBody{sb->dim, [h, v](const Eigen::Vector3d& xi) { return h(xi) + v.dot(xi); }};
    }
    if (const auto* pc = std::get_if<ParametricCurve>(&shape)) {
        auto x = pc->x;
        auto y = pc->y;
        return ParametricCurve{[x, v](double t) { return x(t) + v.x(); },
                               [y, v](double t) { return y(t) + v.y(); },
                               "", ""};
    }
    const auto& rg = std::get<RadialGraph>(shape);
    if (v.isZero(0.0)) return shape;
    if (rg.dim != 1)
        throw ShapeError("translate: an S^2 radial graph cannot be translated in this representation");
    auto r = rg.r;
    return ParametricCurve{[r, v](double t) {
                               const Eigen::Vector3d xi(std::cos(t), std::sin(t), 0.0);
                               return r(xi) * std::cos(t) + v.x();
                           },
                           [r, v](double t) {
                               const Eigen::Vector3d xi(std::cos(t), std::sin(t), 0.0);
                               return r(xi) * std::sin(t) + v.y();
                           },
                           "", ""};
}

Shape make_ball_support(int dim, double radius, const Eigen::Vector3d& center) {
    return SupportBody{dim, [radius, center](const Eigen::Vector3d& xi) { return radius + center.dot(xi); }};
}

Shape make_ball_radial(int dim, double radius) {
    return RadialGraph{dim, [radius](const Eigen::Vector3d&) { return radius; }};
}

Shape make_ellipse_parametric(double a, double b) {
    return ParametricCurve{[a](double t) { return a * std::cos(t); },
                           [b](double t) { return b * std::sin(t); },
                           "", ""};
}

Shape make_ellipse_radial(double a, double b) {
    return RadialGraph{1, [a, b](const Eigen::Vector3d& xi) {
                           const double c = xi.x(), s = xi.y();
                           return a * b / std::sqrt(b * b * c * c + a * a * s * s);
                       }};
}

}  // namespace aflab
