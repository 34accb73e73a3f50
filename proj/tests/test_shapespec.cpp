#include <doctest.h>

#include <cmath>

#include "aflab/errors.hpp"
#include "aflab/grid.hpp"
#include "aflab/sample.hpp"
#include "aflab/shapespec.hpp"

using namespace aflab;

TEST_SUITE("shapespec") {

TEST_CASE("ball and parametric examples parse") {
    const ShapeSpecFile b =
        parse_shape_spec(R"({"family":"ball","dim":2,"radius":1.0,"center":[0.3,0,0]})");
    CHECK(b.family == "ball");
    CHECK(b.dim == 2);
    CHECK(b.radius == 1.0);
    CHECK(b.center.x() == doctest::Approx(0.3));
    const Shape bs = build_shape(b);
    CHECK(shape_dim(bs) == 2);
    CHECK(std::get<SupportBody>(bs).h(Eigen::Vector3d(1, 0, 0)) == doctest::Approx(1.3));

    const ShapeSpecFile p =
        parse_shape_spec(R"json({"family":"parametric_curve","x":"2*cos(t)","y":"sin(t)"})json");
    CHECK(p.dim == 1);
    const Shape ps = build_shape(p);
    const SampleSet s = sample_shape(ps, grid_s1(64));
    CHECK(s.s[0].u == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("validation failures") {
    CHECK_THROWS_AS(parse_shape_spec(R"({"family":"ball","dim":2,"radius":-1})"), UsageError);
    CHECK_THROWS_AS(parse_shape_spec(R"({"dim":2,"radius":1})"), UsageError);
    CHECK_THROWS_AS(parse_shape_spec(R"({"family":"blob"})"), UsageError);
    CHECK_THROWS_AS(parse_shape_spec(R"({"family":"ball","dim":3,"radius":1})"), UsageError);
    CHECK_THROWS_AS(parse_shape_spec("not json"), UsageError);
    // strict mode: unknown fields rejected by name
    try {
        parse_shape_spec(R"({"family":"ball","dim":2,"radius":1,"raduis":2})");
        FAIL("expected UsageError");
    } catch (const UsageError& e) {
        CHECK(std::string(e.what()).find("raduis") != std::string::npos);
    }
}

TEST_CASE("harmonic families") {
    const ShapeSpecFile h = parse_shape_spec(
        R"({"family":"support_harmonic","dim":2,"base":1.0,
            "coeffs":[{"degree":2,"order":1,"amplitude":0.05},{"degree":3,"order":-2,"amplitude":0.02}]})");
    CHECK(h.coeffs.size() == 2);
    const Shape hs = build_shape(h);
    CHECK_NOTHROW(sample_shape(hs, grid_s2(16, 32)));

    const ShapeSpecFile r = parse_shape_spec(
        R"({"family":"radial_harmonic","dim":1,"coeffs":[{"degree":2,"order":1,"amplitude":0.1}]})");
    const SampleSet rs = sample_shape(build_shape(r), grid_s1(64));
    CHECK(rs.n == 1);

    CHECK_THROWS_AS(parse_shape_spec(
                        R"({"family":"support_harmonic","dim":2,
                            "coeffs":[{"degree":2,"order":5,"amplitude":0.1}]})"),
                    UsageError);
    CHECK_THROWS_AS(parse_shape_spec(
                        R"({"family":"radial_harmonic","dim":1,"center":[0.1,0],
                            "coeffs":[{"degree":2,"order":1,"amplitude":0.1}]})"),
                    UsageError);
    CHECK_THROWS_AS(parse_shape_spec(
                        R"({"family":"support_harmonic","dim":1,
                            "coeffs":[{"degree":2,"order":2,"amplitude":0.1}]})"),
                    UsageError);
}

TEST_CASE("ellipse family") {
    const ShapeSpecFile e = parse_shape_spec(R"({"family":"ellipse","a":2.0,"b":1.0})");
    const SampleSet s = sample_shape(build_shape(e), grid_s1(64));
    CHECK(s.s[0].kappa[0] == doctest::Approx(2.0).epsilon(1e-9));
    CHECK_THROWS_AS(parse_shape_spec(R"({"family":"ellipse","a":2.0,"b":-1.0})"), UsageError);
}

TEST_CASE("amplitude validation happens at sampling time, not parse time") {
    const ShapeSpecFile h = parse_shape_spec(
        R"({"family":"support_harmonic","dim":1,
            "coeffs":[{"degree":4,"order":1,"amplitude":0.8}]})");
    const Shape hs = build_shape(h);  // parses fine
    CHECK_THROWS_AS(sample_shape(hs, grid_s1(64)), ShapeError);
}

}  // TEST_SUITE
