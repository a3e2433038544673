#include "doctest.h"

#include "elimkit/discriminant.hpp"

using namespace elimkit;

namespace {
Polynomial P(const std::string& text, int nv) { return parse_polynomial(text, nv); }
}  // namespace

TEST_CASE("normalization exponents") {
    CHECK(a_constant(1, 2) == 0);
    CHECK(a_constant(1, 3) == 1);
    CHECK(a_constant(2, 2) == 1);
    CHECK(a_constant(2, 3) == 3);
    CHECK(a_constant(2, 4) == 7);
    CHECK(a_constant(3, 3) == 5);
}

TEST_CASE("hand-computed discriminants") {
    // binary quadric a*x^2 + b*x*y + c*y^2 has disc 4ac - b^2 in this
    // normalization (partials resultant divided by d^a(n,d))
    CHECK(discriminant(P("x0^2 + x1^2", 2)).value == 4);
    CHECK(discriminant(P("x0*x1", 2)).value == -1);
    CHECK(discriminant(P("x0^2 + 2*x0*x1 + x1^2", 2)).value == 0);  // square

    CHECK(discriminant(P("x0^3 + x1^3", 2)).value == 27);
    CHECK(discriminant(P("x0^2*x1", 2)).value == 0);  // double root

    CHECK(discriminant(P("x0*x1 - x2^2", 3)).value == 1);
    CHECK(discriminant(P("x0^2 + x1^2 + x2^2", 3)).value == 4);
    CHECK(discriminant(P("x0^2 + x1^2", 3)).value == 0);  // cone

    DiscriminantResult fermat = discriminant(P("x0^3 + x1^3 + x2^3", 3));
    CHECK(fermat.res_partials == rat_pow(Rat(3), 12));
    CHECK(fermat.value == rat_pow(Rat(3), 9));
}

TEST_CASE("smoothness test") {
    CHECK(smoothness_test(P("x0^3 + x1^3 + x2^3", 3)));
    CHECK(!smoothness_test(P("x1^2*x2 - x0^3", 3)));       // cusp at (0:0:1)
    CHECK(!smoothness_test(P("x1^2*x2 - x0^2*x2 - x0^3", 3)));  // node
    CHECK(smoothness_test(P("x0^4 + x1^4 + x2^4 + x3^4", 4)));
}

TEST_CASE("degree and weight formulas") {
    CHECK(disc_degree(1, 2) == 2);
    CHECK(disc_degree(1, 4) == 6);
    CHECK(disc_degree(2, 3) == 12);
    CHECK(disc_degree(3, 3) == 32);
    CHECK(disc_weight_degree(2, 3, WeightRule::coordinate) == 12);
    CHECK(disc_weight_degree(2, 3, WeightRule::co) == 24);
}

TEST_CASE("factorization against the coordinate slice") {
    EulerFactorizationReport rep = euler_factorization_check(P("x0^2 + x1*x2 + x2^2", 3));
    CHECK(rep.checked);
    CHECK(!rep.degenerate_slice);
    CHECK(rep.holds);
    CHECK(rep.lhs == rep.disc_f * rep.disc_fbar);

    // slice dropping degree is flagged, not silently passed
    EulerFactorizationReport degen = euler_factorization_check(P("x0^2 + x0*x1", 2));
    CHECK(degen.degenerate_slice);
    CHECK(!degen.checked);
}

TEST_CASE("parametric discriminant of a pencil") {
    // disc(x0^2 + t*x1^2) = 4t, with t carried as the last variable
    Polynomial f = P("x0^2 + x2*x1^2", 3);
    ParametricValue pv = parametric_discriminant(f, 3);
    CHECK(pv.recovered.degree() == 1);
    CHECK(pv.recovered.coeff(1) == 4);
    CHECK(pv.recovered.coeff(0) == 0);
}

TEST_CASE("discriminant validation") {
    CHECK_THROWS_AS(discriminant(P("x0 + x1", 2)), PreconditionError);  // degree 1
    CHECK_THROWS_AS(discriminant(P("x0^2 + x1", 2)), PreconditionError);  // inhomogeneous
    CHECK_THROWS_AS(discriminant(Polynomial::zero(2)), PreconditionError);
}
