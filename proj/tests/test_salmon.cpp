#include "doctest.h"

#include "elimkit/linalg.hpp"
#include "elimkit/salmon.hpp"

using namespace elimkit;

namespace {
Polynomial P(const std::string& text, int nv) { return parse_polynomial(text, nv); }

NormalFormHypersurface plane_nf(const Rat& T, const Polynomial& f2, const Polynomial& f3) {
    NormalFormHypersurface nf;
    nf.n = 2;
    nf.d = 3;
    nf.tangent_scale = T;
    nf.transform = IntMat::identity(3);
    nf.slices = {f2, f3};
    return nf;
}
}  // namespace

TEST_CASE("normal form containers") {
    NormalFormHypersurface nf = plane_nf(Rat(3), P("x0^2 + x0*x1 + 2*x1^2", 2),
                                         P("x0^3 - x1^3", 2));
    CHECK_NOTHROW(nf.validate());
    Polynomial f = nf.assemble();
    CHECK(f.nvars() == 3);
    CHECK(f.is_homogeneous_of_degree(3));
    CHECK(f.coeff({2, 0, 1}) == 3);          // T * x0^(d-1) * xn
    CHECK(f.coeff({3, 0, 0}) == 0);          // no pure x0^d term
    CHECK(nf.truncation() == f - P("3*x0^2*x2", 3));
    CHECK(nf.slice(2) == P("x0^2 + x0*x1 + 2*x1^2", 2));

    NormalFormHypersurface bad = nf;
    bad.slices[0] = P("x0", 2);  // degree 1 slice in the degree-2 slot
    CHECK_THROWS_AS(bad.validate(), PreconditionError);
}

TEST_CASE("plane expansion on a fixed instance") {
    // second slice (1/2)(A x^2 + 2 B x y + C y^2) with A=2, B=1, C=4
    NormalFormHypersurface nf = plane_nf(Rat(3), P("x0^2 + x0*x1 + 2*x1^2", 2),
                                         P("x0^3 + x0*x1^2 - x1^3", 2));
    SalmonReport rep = salmon_expansion(nf, 0);
    CHECK(rep.checked);
    CHECK(rep.valuation_in_T == 2);
    CHECK(rep.identity_holds);
    CHECK(rep.disc_f2 == 7);      // AC - B^2 = 8 - 1
    CHECK(rep.disc_f2bar == 1);   // A / 2

    PlaneSalmonCoefficients pc = plane_salmon_coefficients(nf, 0);
    CHECK(pc.A == 2);
    CHECK(pc.B == 1);
    CHECK(pc.C == 4);
    CHECK(pc.T == 3);
    CHECK(pc.pattern_check);
    // lowest coefficient of the parametric disc, as a product:
    // T^2 * A * (B^2 - AC)^2 * rdisc
    CHECK(Rat(2) * pc.T * pc.T * rep.t2_coefficient ==
          Rat(kSalmonExpansionSign) * pc.lowest_product);
}

TEST_CASE("degenerate slices are reported with a raised valuation") {
    NormalFormHypersurface nf = plane_nf(Rat(2), P("x0*x1 + x1^2", 2), P("x0^3 + x1^3", 2));
    // A = 0 here (no x0^2 term in the second slice)
    SalmonReport rep = salmon_expansion(nf, 0);
    CHECK(!rep.checked);
    CHECK(!rep.degenerate_reason.empty());
    CHECK(rep.valuation_in_T != 2);

    NormalFormHypersurface sq = plane_nf(Rat(2), P("x0^2 + 2*x0*x1 + x1^2", 2),
                                         P("x0^3 + x1^3", 2));
    // second slice is a perfect square: disc vanishes
    SalmonReport rep2 = salmon_expansion(sq, 0);
    CHECK(!rep2.checked);
    CHECK(rep2.valuation_in_T != 2);

    NormalFormHypersurface zero = plane_nf(Rat(2), Polynomial::zero(2), P("x0^3 + x1^3", 2));
    SalmonReport rep3 = salmon_expansion(zero, 0);
    CHECK(!rep3.checked);
}

TEST_CASE("normal form at a rational point of a smooth cubic") {
    Polynomial f = P("x0^3 + x1^3 - 2*x2^3", 3);
    LinearPoint p = {Rat(1), Rat(1), Rat(1)};  // hessian is -432*x0*x1*x2: not a flex
    NormalFormHypersurface nf = normal_form_at_point(f, p);
    CHECK(nf.tangent_scale != 0);
    CHECK(apply_matrix(f, nf.transform) == nf.assemble());

    // the transform is unimodular and sends e0 to the point
    MatQ m(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = Rat(nf.transform.at(i, j));
    Rat dm = det(m);
    CHECK((dm == 1 || dm == -1));
    LinearPoint col0 = {m.at(0, 0), m.at(1, 0), m.at(2, 0)};
    CHECK(projectively_equal(col0, p));

    SalmonReport rep = salmon_expansion(nf, 0);
    CHECK(rep.checked);
    CHECK(rep.valuation_in_T == 2);
    CHECK(rep.identity_holds);

    // the only rational points of the Fermat cubic are its flexes, where the
    // tangent has third-order contact and the quadratic term degenerates
    Polynomial fermat = P("x0^3 + x1^3 + x2^3", 3);
    NormalFormHypersurface flex = normal_form_at_point(fermat, {Rat(1), Rat(-1), Rat(0)});
    SalmonReport frep = salmon_expansion(flex, 0);
    CHECK(!frep.checked);
    CHECK(frep.valuation_in_T > 2);
}

TEST_CASE("normal form preconditions") {
    Polynomial cusp = P("x1^2*x2 - x0^3", 3);
    CHECK_THROWS_AS(normal_form_at_point(cusp, {Rat(0), Rat(0), Rat(1)}), PreconditionError);
    Polynomial f = P("x0^3 + x1^3 + x2^3", 3);
    CHECK_THROWS_AS(normal_form_at_point(f, {Rat(1), Rat(1), Rat(1)}), PreconditionError);
}

TEST_CASE("bitangent line form") {
    // restriction to <e0, e1> is alpha^2 beta^2: a planted bitangent
    Polynomial f = P("x0^2*x1^2 + x2^4", 3);
    BitangentLineForm bf =
        bitangent_line_form(f, {Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)});
    CHECK(!bf.line_in_surface);
    CHECK(bf.disc == 0);

    // restriction alpha * beta^3: flex contact at the second point only
    Polynomial flex = P("x0*x1^3 + x2^4", 3);
    BitangentLineForm bflex =
        bitangent_line_form(flex, {Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)});
    CHECK(!bflex.line_in_surface);
    CHECK(bflex.disc != 0);  // one extra simple contact does not produce a bitangent

    // line inside the surface
    Polynomial inside = P("x2*x0^3 + x2*x1^3", 3) + P("x2^4", 3);
    BitangentLineForm bin =
        bitangent_line_form(inside, {Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)});
    CHECK(bin.line_in_surface);
    CHECK(bin.disc == 0);

    // preconditions
    Polynomial fermat = P("x0^4 + x1^4 + x2^4", 3);
    CHECK_THROWS_AS(
        bitangent_line_form(fermat, {Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}),
        PreconditionError);  // base point not on the surface
    CHECK_THROWS_AS(
        bitangent_line_form(f, {Rat(1), Rat(0), Rat(0)}, {Rat(2), Rat(0), Rat(0)}),
        PreconditionError);  // points do not span
}

TEST_CASE("pencil intersection determinant") {
    LinearPoint a1 = {Rat(1), Rat(0)};
    LinearPoint a2 = {Rat(0), Rat(1)};
    LinearPoint p1 = {Rat(1), Rat(2)};
    LinearPoint p2 = {Rat(3), Rat(4)};
    CHECK(pencil_intersection_det(a1, a2, p1, p2) == -2);
    CHECK(pencil_intersection_det({a1, a2}, {p1, p2}) == -2);
    // a shared annihilated direction collapses the determinant
    CHECK(pencil_intersection_det(a1, a1, p1, p2) == 0);
}

TEST_CASE("elimination factor on the Fermat cubic") {
    Polynomial f = P("x0^3 + x1^3 + x2^3 + x3^3", 4);
    LinearPoint q = {Rat(3), Rat(4), Rat(5), Rat(-6)};
    CHECK(evaluate(f, q) == 0);
    Polynomial d1 = polar_power(f, q, 2);
    Polynomial d2 = polar_power(f, q, 1);
    Rat r1 = salmon_elim_r(d1, d2, f, q, 1);
    Rat r2 = salmon_elim_r(d1, d2, f, q, 2);
    CHECK(r1 != 0);       // no line through q inside the Fermat cubic
    CHECK(r1 == r2);      // independent of the auxiliary plane

    // a surface containing the line x2 = x3 = 0 through q = (1:0:0:0)
    Polynomial withline = P("x2*x0^2 + x3*x1^2 + x2^2*x3", 4);
    LinearPoint ql = {Rat(1), Rat(0), Rat(0), Rat(0)};
    Polynomial l1 = polar_power(withline, ql, 2);
    Polynomial l2 = polar_power(withline, ql, 1);
    CHECK(salmon_elim_r(l1, l2, withline, ql, 1) == 0);
}
