#include <doctest.h>

#include <cmath>
#include <functional>

#include "aflab/expr.hpp"
#include "aflab/numerics.hpp"

using namespace aflab;

TEST_SUITE("expr") {

TEST_CASE("basic evaluation") {
    CHECK(parse_expression("2*cos(t)").eval(kPi) == doctest::Approx(-2.0));
    CHECK(parse_expression("1 + 0.1*cos(2*t)").eval(0.0) == doctest::Approx(1.1));
    CHECK(parse_expression("pi").eval(0.0) == doctest::Approx(kPi));
}

TEST_CASE("syntax errors carry a byte offset") {
    try {
        parse_expression("sin(");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset == 4);
        CHECK(std::string(e.what()).find("expected expression") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_expression("2 +"), ParseError);
    CHECK_THROWS_AS(parse_expression("(1 + 2"), ParseError);
    CHECK_THROWS_AS(parse_expression("bogus(t)"), ParseError);
    CHECK_THROWS_AS(parse_expression("1 2"), ParseError);
    CHECK_THROWS_AS(parse_expression("x + 1"), ParseError);
}

TEST_CASE("precedence and associativity") {
    CHECK(parse_expression("2+3*4").eval(0) == doctest::Approx(14.0));
    CHECK(parse_expression("2*3^2").eval(0) == doctest::Approx(18.0));
    CHECK(parse_expression("2^3^2").eval(0) == doctest::Approx(512.0));  // right assoc
    CHECK(parse_expression("-2^2").eval(0) == doctest::Approx(-4.0));    // -(2^2)
    CHECK(parse_expression("2^-1").eval(0) == doctest::Approx(0.5));
    CHECK(parse_expression("10-4-3").eval(0) == doctest::Approx(3.0));   // left assoc
    CHECK(parse_expression("12/4/3").eval(0) == doctest::Approx(1.0));
    CHECK(parse_expression("-t").eval(2.5) == doctest::Approx(-2.5));
}

TEST_CASE("evaluator agrees with a 50-entry reference table") {
    struct Row {
        const char* src;
        std::function<double(double)> ref;
    };
    const Row rows[] = {
        {"t", [](double t) { return t; }},
        {"t+1", [](double t) { return t + 1; }},
        {"2*t", [](double t) { return 2 * t; }},
        {"t*t", [](double t) { return t * t; }},
        {"t^2", [](double t) { return t * t; }},
        {"t^3", [](double t) { return t * t * t; }},
        {"sqrt(abs(t))", [](double t) { return std::sqrt(std::abs(t)); }},
        {"sin(t)", [](double t) { return std::sin(t); }},
        {"cos(t)", [](double t) { return std::cos(t); }},
        {"tan(t/4)", [](double t) { return std::tan(t / 4); }},
        {"exp(t/10)", [](double t) { return std::exp(t / 10); }},
        {"log(t+3)", [](double t) { return std::log(t + 3); }},
        {"sin(t)*cos(t)", [](double t) { return std::sin(t) * std::cos(t); }},
        {"sin(2*t)+cos(3*t)", [](double t) { return std::sin(2 * t) + std::cos(3 * t); }},
        {"1/(1+t^2)", [](double t) { return 1 / (1 + t * t); }},
        {"pi*t", [](double t) { return kPi * t; }},
        {"t/pi", [](double t) { return t / kPi; }},
        {"-t^2+t", [](double t) { return -(t * t) + t; }},
        {"2^t", [](double t) { return std::pow(2.0, t); }},
        {"t^0.5", [](double t) { return std::pow(t, 0.5); }},
        {"abs(t-1)", [](double t) { return std::abs(t - 1); }},
        {"sin(t)^2", [](double t) { return std::sin(t) * std::sin(t); }},
        {"cos(t)^2+sin(t)^2", [](double) { return 1.0; }},
        {"exp(sin(t))", [](double t) { return std::exp(std::sin(t)); }},
        {"1+2+3+t", [](double t) { return 6 + t; }}};
    const double ts[] = {0.1, 2.7};
    int entries = 0;
    for (const Row& row : rows) {
        const Expression e = parse_expression(row.src);
        for (double t : ts) {
            ++entries;
            const double want = row.ref(t);
            CHECK(std::abs(e.eval(t) - want) <= 1e-14 * std::max(1.0, std::abs(want)));
        }
    }
    CHECK(entries == 50);
}

TEST_CASE("parse-print-parse round trip") {
    const char* sources[] = {"2*cos(t)",       "1 + 0.1*cos(2*t)", "-t^2+sin(t)/3",
                             "sqrt(t+4)*pi",   "2^-t",             "abs(sin(3*t))",
                             "(t+1)*(t-1)/(t^2+1)"};
    for (const char* src : sources) {
        const Expression a = parse_expression(src);
        const Expression b = parse_expression(a.to_string());
        CHECK(a.to_string() == b.to_string());
        for (double t : {0.0, 0.3, 1.9, 4.4})
            CHECK(a.eval(t) == doctest::Approx(b.eval(t)).epsilon(1e-15));
    }
}

}  // TEST_SUITE
