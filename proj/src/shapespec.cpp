#include "aflab/shapespec.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "aflab/errors.hpp"
#include "aflab/expr.hpp"
#include "aflab/harmonics.hpp"

namespace aflab {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            throw UsageError("shape spec: unknown field '" + it.key() + "'");
}

Eigen::Vector3d read_center(const json& obj, int dim) {
    Eigen::Vector3d c = Eigen::Vector3d::Zero();
    if (!obj.contains("center")) return c;
    const json& arr = obj.at("center");
    if (!arr.is_array() || arr.size() < static_cast<std::size_t>(dim + 1) || arr.size() > 3)
        throw UsageError("shape spec: center must be an array of " + std::to_string(dim + 1) +
                         (dim == 1 ? " (or 3)" : "") + " numbers");
    for (std::size_t i = 0; i < arr.size(); ++i) c[static_cast<Eigen::Index>(i)] = arr[i].get<double>();
    if (dim == 1 && c.z() != 0.0) throw UsageError("shape spec: planar center must have zero z");
    return c;
}

std::vector<HarmonicCoeff> read_coeffs(const json& obj, int dim) {
    std::vector<HarmonicCoeff> out;
    if (!obj.contains("coeffs")) return out;
    for (const json& e : obj.at("coeffs")) {
        if (!e.is_object()) throw UsageError("shape spec: coeffs entries must be objects");
        reject_unknown(e, {"degree", "order", "amplitude"});
        HarmonicCoeff c;
        c.degree = e.at("degree").get<int>();
        c.order = e.at("order").get<int>();
        c.amplitude = e.at("amplitude").get<double>();
        if (c.degree < 1 || c.degree > 32)
            throw UsageError("shape spec: degree must be in [1, 32]");
        if (dim == 2 && std::abs(c.order) > c.degree)
            throw UsageError("shape spec: |order| must be <= degree");
        if (dim == 1 && c.order != 1 && c.order != -1)
            throw UsageError("shape spec: on S^1 order must be +1 (cosine) or -1 (sine)");
        if (!std::isfinite(c.amplitude)) throw UsageError("shape spec: amplitude must be finite");
        out.push_back(c);
    }
    return out;
}

}  // namespace

ShapeSpecFile parse_shape_spec(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw UsageError(std::string("shape spec: invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw UsageError("shape spec: top level must be an object");
    if (!doc.contains("family")) throw UsageError("shape spec: missing family");

    ShapeSpecFile spec;
    spec.family = doc.at("family").get<std::string>();

    if (spec.family == "ball") {
        reject_unknown(doc, {"family", "dim", "radius", "center"});
        spec.dim = doc.at("dim").get<int>();
        if (spec.dim != 1 && spec.dim != 2) throw UsageError("shape spec: dim must be 1 or 2");
        spec.radius = doc.at("radius").get<double>();
        if (!(spec.radius > 0.0)) throw UsageError("shape spec: radius must be positive");
        spec.center = read_center(doc, spec.dim);
    } else if (spec.family == "ellipse") {
        reject_unknown(doc, {"family", "dim", "a", "b", "center"});
        spec.dim = 1;
        if (doc.contains("dim") && doc.at("dim").get<int>() != 1)
            throw UsageError("shape spec: ellipse is planar (dim 1)");
        spec.a = doc.at("a").get<double>();
        spec.b = doc.at("b").get<double>();
        if (!(spec.a > 0.0 && spec.b > 0.0)) throw UsageError("shape spec: semi-axes must be positive");
        spec.center = read_center(doc, 1);
    } else if (spec.family == "support_harmonic" || spec.family == "radial_harmonic") {
        reject_unknown(doc, {"family", "dim", "base", "coeffs", "center"});
        spec.dim = doc.at("dim").get<int>();
        if (spec.dim != 1 && spec.dim != 2) throw UsageError("shape spec: dim must be 1 or 2");
        spec.base = doc.contains("base") ? doc.at("base").get<double>() : 1.0;
        if (!(spec.base > 0.0)) throw UsageError("shape spec: base must be positive");
        spec.coeffs = read_coeffs(doc, spec.dim);
        spec.center = read_center(doc, spec.dim);
        if (spec.family == "radial_harmonic" && !spec.center.isZero(0.0))
            throw UsageError("shape spec: center is not supported for radial_harmonic");
    } else if (spec.family == "parametric_curve") {
        reject_unknown(doc, {"family", "dim", "x", "y", "center"});
        spec.dim = 1;
        if (doc.contains("dim") && doc.at("dim").get<int>() != 1)
            throw UsageError("shape spec: parametric_curve is planar (dim 1)");
        spec.x_expr = doc.at("x").get<std::string>();
        spec.y_expr = doc.at("y").get<std::string>();
        spec.center = read_center(doc, 1);
    } else {
        throw UsageError("shape spec: unknown family '" + spec.family + "'");
    }
    return spec;
}

ShapeSpecFile load_shape_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read shape spec file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_shape_spec(ss.str());
}

std::function<double(const Eigen::Vector3d&)> harmonic_field(
    int dim, double base, const std::vector<HarmonicCoeff>& coeffs) {
    if (dim == 1) {
        return [base, coeffs](const Eigen::Vector3d& xi) {
            const double theta = std::atan2(xi.y(), xi.x());
            double v = base;
            for (const HarmonicCoeff& c : coeffs)
                v += c.amplitude * real_circ_harmonic(c.degree, c.order > 0, theta);
            return v;
        };
    }
    return [base, coeffs](const Eigen::Vector3d& xi) {
        double v = base;
        for (const HarmonicCoeff& c : coeffs)
            v += c.amplitude * real_sph_harmonic(c.degree, c.order, xi);
        return v;
    };
}

Shape build_shape(const ShapeSpecFile& spec) {
    if (spec.family == "ball") return make_ball_support(spec.dim, spec.radius, spec.center);
    if (spec.family == "ellipse") {
        Shape e = make_ellipse_parametric(spec.a, spec.b);
        if (!spec.center.isZero(0.0)) return translate(e, spec.center);
        return e;
    }
    if (spec.family == "support_harmonic") {
        Shape s = SupportBody{spec.dim, harmonic_field(spec.dim, spec.base, spec.coeffs)};
        if (!spec.center.isZero(0.0)) return translate(s, spec.center);
        return s;
    }
    if (spec.family == "radial_harmonic")
        return RadialGraph{spec.dim, harmonic_field(spec.dim, spec.base, spec.coeffs)};
    // parametric_curve
    const Expression ex = parse_expression(spec.x_expr);
    const Expression ey = parse_expression(spec.y_expr);
    Shape c = ParametricCurve{[ex](double t) { return ex.eval(t); },
                              [ey](double t) { return ey.eval(t); }, spec.x_expr, spec.y_expr};
    if (!spec.center.isZero(0.0)) return translate(c, spec.center);
    return c;
}

}  // namespace aflab
