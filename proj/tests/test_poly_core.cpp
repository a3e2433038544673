#include "doctest.h"

#include "elimkit/grading.hpp"
#include "elimkit/polynomial.hpp"

using namespace elimkit;

namespace {
Polynomial P(const std::string& text, int nv) { return parse_polynomial(text, nv); }
}  // namespace

TEST_CASE("parse and print round trip") {
    Polynomial f = P("3*x0^2*x1 - 1/2*x2^3", 3);
    CHECK(f.nvars() == 3);
    CHECK(f.coeff({2, 1, 0}) == 3);
    CHECK(f.coeff({0, 0, 3}) == Rat(-1) / 2);
    std::string printed = to_string(f);
    CHECK(parse_polynomial(printed, 3) == f);
    CHECK(to_string(parse_polynomial(printed, 3)) == printed);

    // bare coefficients, optional * after the coefficient, unit exponents
    CHECK(P("3x0^2", 1) == P("3*x0^2", 1));
    CHECK(P("-x0 + 2", 1) == P("2 - x0", 1));
    CHECK_THROWS_AS(parse_polynomial("x0x1", 2), ParseError);  // * is required between variables
    CHECK(to_string(Polynomial::zero(2)) == "0");
    CHECK(parse_polynomial("0", 2).is_zero());
}

TEST_CASE("parse errors carry byte offsets") {
    CHECK_THROWS_AS(parse_polynomial("x0 +", 1), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x9", 2), Error);   // out of range for nvars
    CHECK_THROWS_AS(parse_polynomial("x0^", 1), ParseError);
    try {
        parse_polynomial("x0 + @", 1);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.offset() == 5);
        CHECK(std::string(e.what()).find("byte 5") != std::string::npos);
        CHECK(!e.expected().empty());
    }
}

TEST_CASE("ring operations") {
    Polynomial x = Polynomial::variable(2, 0);
    Polynomial y = Polynomial::variable(2, 1);
    Polynomial s = x + y;
    CHECK(s.pow(2) == x * x + x * y * Rat(2) + y * y);
    CHECK((s * (x - y)) == x * x - y * y);
    CHECK((s - s).is_zero());
    CHECK(-s == s * Rat(-1));
    CHECK(Rat(3) * s == s + s + s);

    Polynomial f = P("x0^3 - 2*x0*x1^2", 2);
    CHECK(partial_derivative(f, 0) == P("3*x0^2 - 2*x1^2", 2));
    CHECK(partial_derivative(f, 1) == P("-4*x0*x1", 2));
    CHECK(evaluate(f, {Rat(2), Rat(1)}) == 4);
    CHECK(substitute_value(f, 1, Rat(1)) == P("x0^3 - 2*x0", 2));
}

TEST_CASE("degrees, valuations, homogeneity") {
    Polynomial f = P("x0^2*x1 + x1^3", 2);
    CHECK(f.degree() == 3);
    CHECK(f.is_homogeneous());
    CHECK(f.is_homogeneous_of_degree(3));
    CHECK(!f.is_homogeneous_of_degree(2));
    CHECK(f.degree_in(0) == 2);
    CHECK(f.valuation_in(1) == 1);
    CHECK(!Polynomial::zero(2).degree().has_value());
    Polynomial g = P("x0 + x0^2", 1);
    CHECK(!g.is_homogeneous());
}

TEST_CASE("Euler identity") {
    Polynomial f = P("x0^3 + 2*x0*x1*x2 - 5*x2^3", 3);
    Polynomial sum = Polynomial::zero(3);
    for (int i = 0; i < 3; ++i)
        sum = sum + Polynomial::variable(3, i) * partial_derivative(f, i);
    CHECK(sum == Rat(3) * f);
}

TEST_CASE("variable insertion and removal") {
    Polynomial f = P("x0^2 + x1^2", 2);
    Polynomial g = insert_variable(f, 2);  // now in x0, x1, x2 without x2
    CHECK(g.nvars() == 3);
    CHECK(g == P("x0^2 + x1^2", 3));
    CHECK(drop_variable(g, 2) == f);
    CHECK_THROWS_AS(drop_variable(P("x0*x1", 2), 1), PreconditionError);
}

TEST_CASE("polars and line geometry") {
    Polynomial f = P("x0^2*x2 - x1^2*x0", 3);  // cubic
    LinearPoint a = {Rat(0), Rat(0), Rat(1)};
    // polar_power(f, a, k) applies k polar steps and drops the degree by k
    Polynomial p2 = polar_power(f, a, 1);
    CHECK(p2.is_homogeneous_of_degree(2));
    CHECK(polar_power(f, a, 0) == f);

    // a double point kills the linear polar, not just the value
    Polynomial nodal = P("x1^2*x2 - x0^2*x2 - x0^3", 3);
    LinearPoint node = {Rat(0), Rat(0), Rat(1)};
    CHECK(evaluate(nodal, node) == 0);
    CHECK(polar_power(nodal, node, 2) == Polynomial::zero(3));
    CHECK(polar_power(nodal, node, 3) == Polynomial::zero(3));

    // restriction of a conic to a line
    Polynomial conic = P("x0*x2 - x1^2", 3);
    Polynomial rest = restrict_to_line(conic, {Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(1)});
    CHECK(rest == P("x0*x1", 2));  // alpha*beta: two simple intersections

    LineMultiplicity lm =
        line_intersection_multiplicity(conic, {Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)});
    CHECK(!lm.line_contained);
    CHECK(lm.multiplicity == 2);  // the tangent line at (1:0:0)

    Polynomial split = P("x0*x1", 3) * P("x0+x2", 3);
    LineMultiplicity inside =
        line_intersection_multiplicity(split, {Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(1)});
    // x1 = 0 on the whole line
    CHECK(inside.line_contained);
}

TEST_CASE("hessian of a quadric is its constant matrix determinant") {
    Polynomial q = P("x0^2 + 3*x0*x1 + 5*x1^2", 2);
    Polynomial h = hessian(q);
    CHECK(h == Polynomial::constant(2, Rat(4 * 5) - Rat(9)));
}

TEST_CASE("gradings") {
    Exponents e = {3, 1, 2};  // x0^3 x1 x2^2, degree 6
    CHECK(GradingSpec::standard().weight(e) == 6);
    CHECK(GradingSpec::coordinate_weight(0).weight(e) == 3);
    CHECK(GradingSpec::co_weight(0, 6).weight(e) == 3);
    // order-s truncations are exactly the weight-zero slots
    CHECK(GradingSpec::zariski(2, 0, 6).weight(e) == 0);       // alpha_0 = 3 <= 6-2
    CHECK(GradingSpec::zariski(4, 0, 6).weight(e) == 1);       // 3 - (6-4)
    CHECK(GradingSpec::zariski(4, 0, 6).weight({6, 0, 0}) == 4);

    Polynomial f = parse_polynomial("x0^2*x1 + x1^3", 2);
    CHECK(homogeneous_degree(f, GradingSpec::standard()) == 3);
    CHECK(!homogeneous_degree(f, GradingSpec::coordinate_weight(0)).has_value());
    CHECK(weighted_valuation(f, GradingSpec::coordinate_weight(0)) == 0);
    CHECK(weighted_top(f, GradingSpec::coordinate_weight(0)) == 2);
}

TEST_CASE("projective point comparison") {
    CHECK(projectively_equal({Rat(1), Rat(2)}, {Rat(2), Rat(4)}));
    CHECK(projectively_equal({Rat(-1), Rat(2)}, {Rat(1), Rat(-2)}));
    CHECK(!projectively_equal({Rat(1), Rat(0)}, {Rat(1), Rat(1)}));
    CHECK_THROWS_AS(projectively_equal({Rat(0), Rat(0)}, {Rat(1), Rat(1)}), PreconditionError);
}
