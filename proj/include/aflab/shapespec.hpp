#pragma once

#include <string>
#include <vector>

#include "aflab/shape.hpp"

namespace aflab {

struct HarmonicCoeff {
    int degree = 0;
    int order = 0;
    double amplitude = 0.0;
};

/// Declarative shape description parsed from the JSON input format.
/// Families: ball, ellipse, support_harmonic, radial_harmonic,
/// parametric_curve. Harmonic fields are base + sum a * Y_{l,m} with
/// orthonormal real (spherical or circular) harmonics; on S^1 the order
/// selects cosine (+1) or sine (-1) of degree * theta.
struct ShapeSpecFile {
    std::string family;
    int dim = 1;
    double radius = 1.0;
    double a = 1.0, b = 1.0;
    Eigen::Vector3d center = Eigen::Vector3d::Zero();
    double base = 1.0;
    std::vector<HarmonicCoeff> coeffs;
    std::string x_expr, y_expr;
};

/// Strict parse: unknown fields are rejected, required fields validated.
ShapeSpecFile parse_shape_spec(const std::string& json_text);
ShapeSpecFile load_shape_spec(const std::string& path);

/// Build the geometric shape the spec describes. Amplitude validation
/// against convexity/star-shapedness happens at sampling time.
Shape build_shape(const ShapeSpecFile& spec);

/// Harmonic field evaluator shared by the harmonic families.
std::function<double(const Eigen::Vector3d&)> harmonic_field(int dim, double base,
                                                             const std::vector<HarmonicCoeff>& coeffs);

}  // namespace aflab
