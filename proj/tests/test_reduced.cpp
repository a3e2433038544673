#include "doctest.h"

#include "elimkit/discriminant.hpp"
#include "elimkit/reduced.hpp"

using namespace elimkit;

namespace {
Polynomial P(const std::string& text, int nv) { return parse_polynomial(text, nv); }
}  // namespace

TEST_CASE("truncation specs validate") {
    TruncationSpec ok{3, 2, 0};
    CHECK_NOTHROW(ok.validate(2));
    CHECK(ok.strict());
    TruncationSpec full{3, 3, 0};
    CHECK(!full.strict());
    CHECK_THROWS_AS((TruncationSpec{3, 4, 0}).validate(2), PreconditionError);
    CHECK_THROWS_AS((TruncationSpec{3, 0, 0}).validate(2), PreconditionError);
    CHECK_THROWS_AS((TruncationSpec{3, 2, 5}).validate(2), PreconditionError);
}

TEST_CASE("system validation rejects deep terms and all-non-strict systems") {
    TruncatedSystem sys;
    sys.truncations = {P("x0^2", 2), P("x0*x1", 2)};  // x0^2 too deep for s=1? no: d-s=1
    sys.specs = {{2, 1, 0}, {2, 1, 0}};
    // x0^2 has x0-degree 2 > d - s = 1
    CHECK_THROWS_AS(reduced_resultant(sys, 0), PreconditionError);

    TruncatedSystem flat;
    flat.truncations = {P("x1^2", 2), P("x1^2", 2)};
    flat.specs = {{2, 2, 0}, {2, 2, 0}};  // nobody strict
    CHECK_THROWS_AS(reduced_resultant(flat, 0), PreconditionError);
}

TEST_CASE("single strict slot reduces to the small resultant of the others") {
    // degrees (2,1), orders (1,1): only the first slot is strict, so the value
    // is the resultant of the second truncation alone, i.e. its coefficient
    TruncatedSystem sys;
    sys.truncations = {P("x0*x1 + 3*x1^2", 2), P("5*x1", 2)};
    sys.specs = {{2, 1, 0}, {1, 1, 0}};
    ReducedValue rv = reduced_resultant(sys, 0);
    CHECK(rv.exponent == 1);
    CHECK(rv.valuation == 1);
    CHECK(rv.value * rv.value == 25);
    // independent of the strict slot's coefficients
    TruncatedSystem sys2 = sys;
    sys2.truncations[0] = P("7*x0*x1 - 2*x1^2", 2);
    CHECK(reduced_resultant(sys2, 0).value == rv.value);
}

TEST_CASE("curve case collapses to the stripped discriminant") {
    // h = x1^2 * (x0^2 + x0*x1 + x1^2), d = 4, s = 2
    ReducedValue rv = reduced_discriminant(P("x0^2*x1^2 + x0*x1^3 + x1^4", 2), {4, 2, 0}, 0);
    CHECK(rv.valuation == 2);  // s * (s-1)^n = 2
    Rat oracle = discriminant(P("x0^2 + x0*x1 + x1^2", 2)).value;  // 3
    CHECK(oracle == 3);
    CHECK((rv.value == oracle || rv.value == -oracle));

    // planted double root in the stripped part: x1^2*(x0 - x1)^2
    ReducedValue dbl = reduced_discriminant(P("x0^2*x1^2 - 2*x0*x1^3 + x1^4", 2), {4, 2, 0}, 0);
    CHECK(dbl.value == 0);
}

TEST_CASE("degenerate boundary factors are reported, not computed around") {
    // a_d = 0: the deepest slice vanishes
    CHECK_THROWS_AS(reduced_discriminant(P("x0^2*x1^2", 2), {4, 2, 0}, 0), ComputationError);
}

TEST_CASE("degree formulas") {
    std::vector<int> degs = {3, 2, 2};
    std::vector<int> ords = {2, 1, 1};
    // prod(d)/d_i - prod(s)/s_i
    CHECK(redres_degree(0, degs, ords) == 4 - 1);
    CHECK(redres_degree(1, degs, ords) == 6 - 2);
    CHECK(redres_degree(2, degs, ords) == 6 - 2);
    CHECK(redres_weighted_degree(degs, ords) == 2 * (12 - 2));

    // single strict slot j: zero in slot j, product of the others otherwise
    std::vector<int> sdegs = {3, 2, 2};
    std::vector<int> sords = {2, 2, 2};
    CHECK(redres_degree(0, sdegs, sords) == 0);
    CHECK(redres_degree(1, sdegs, sords) == 2);
    CHECK(redres_degree(2, sdegs, sords) == 2);
    CHECK(redres_weighted_degree(sdegs, sords) == 2 * 4);

    CHECK(rdisc_degree(1, 4, 2) == 2);
    CHECK(rdisc_degree(1, 5, 2) == 4);
    CHECK(rdisc_degree(2, 3, 2) == 5);
    CHECK(rdisc_degree(2, 4, 2) == 20);
    CHECK(rdisc_weighted_degree(1, 4, 2) == 6);
    CHECK_THROWS_AS(rdisc_degree(1, 3, 3), PreconditionError);  // s must stay below d
}

TEST_CASE("projection of a complete intersection") {
    // conic meets line: {x0*x2 - x1^2 = 0, x1 = 0} = {(1:0:0), (0:0:1)};
    // projecting away from (1,0,0) leaves one point
    Polynomial image = project_complete_intersection(P("x0*x2 - x1^2", 3), P("x1", 3),
                                                     {Rat(1), Rat(0), Rat(0)});
    CHECK(image.nvars() == 2);
    CHECK(!image.is_zero());
    CHECK(image.degree() == 1);
    CHECK(evaluate(image, {Rat(0), Rat(1)}) == 0);  // the image of (0:0:1)

    // center off both hypersurfaces: full bidegree image
    Polynomial full = project_complete_intersection(P("x0^2 + x1^2 + x2^2", 3), P("x0 + x1", 3),
                                                    {Rat(1), Rat(0), Rat(0)});
    CHECK(full.degree() == 2);
}
