#include "doctest.h"

#include "elimkit/linalg.hpp"
#include "elimkit/resultant.hpp"
#include "elimkit/rng.hpp"

using namespace elimkit;

namespace {
Polynomial P(const std::string& text, int nv) { return parse_polynomial(text, nv); }

Polynomial random_form(Rng& rng, int nv, int d) {
    for (;;) {
        Polynomial f = Polynomial::zero(nv);
        for (const auto& e : monomials_of_degree(nv, d)) f.add_term(e, Rat(rng.int_in(-9, 9)));
        if (!f.is_zero()) return f;
    }
}
}  // namespace

TEST_CASE("binary resultants") {
    CHECK(sylvester_resultant(P("x0", 2), P("x1", 2)) == 1);
    CHECK(sylvester_resultant(P("x0-x1", 2), P("x0+x1", 2)) == 2);
    // shared root (1:1)
    CHECK(sylvester_resultant(P("x0-x1", 2), P("x0^2-x1^2", 2)) == 0);
    // swapping the forms of degrees (1,1) flips the sign
    CHECK(sylvester_resultant(P("x1", 2), P("x0", 2)) == -1);
}

TEST_CASE("Macaulay matches Sylvester and the linear determinant") {
    Rng rng(7);
    for (int i = 0; i < 25; ++i) {
        int d1 = static_cast<int>(rng.int_in(1, 4));
        int d2 = static_cast<int>(rng.int_in(1, 4));
        Polynomial f = random_form(rng, 2, d1);
        Polynomial g = random_form(rng, 2, d2);
        CHECK(macaulay_resultant({{f, g}, {d1, d2}}) == sylvester_resultant(f, g));
    }
    for (int i = 0; i < 10; ++i) {
        FormSystem sys;
        MatQ m(3, 3);
        for (int r = 0; r < 3; ++r) {
            Polynomial f = Polynomial::zero(3);
            for (int c = 0; c < 3; ++c) {
                Rat a(rng.int_in(-9, 9));
                m.at(r, c) = a;
                f = f + Polynomial::variable(3, c) * a;
            }
            if (f.is_zero()) f = f + Polynomial::variable(3, 0);
            sys.forms.push_back(f);
            sys.degrees.push_back(1);
        }
        if (m.at(0, 0) == 0 && m.at(0, 1) == 0 && m.at(0, 2) == 0) m.at(0, 0) = 1;
        CHECK(macaulay_resultant(sys) == det(m));
    }
}

TEST_CASE("multiplicativity in one slot") {
    Rng rng(11);
    for (int i = 0; i < 10; ++i) {
        Polynomial f = random_form(rng, 2, 2);
        Polynomial g = random_form(rng, 2, 1);
        Polynomial h = random_form(rng, 2, 2);
        CHECK(sylvester_resultant(f * g, h) ==
              sylvester_resultant(f, h) * sylvester_resultant(g, h));
    }
}

TEST_CASE("resultant scaling degree") {
    // scaling the k-th form scales the resultant by c^(product of the others)
    CHECK(resultant_scaling_degree({2, 3, 4}, 0) == 12);
    CHECK(resultant_scaling_degree({2, 3, 4}, 2) == 6);
    Polynomial f = P("x0^2+2*x1^2+x2^2", 3);
    Polynomial g = P("x0*x1 - x2^2", 3);
    Polynomial h = P("x0 + x1 + x2", 3);
    FormSystem sys{{f, g, h}, {2, 2, 1}};
    Rat base = macaulay_resultant(sys);
    FormSystem scaled{{f, g * Rat(3), h}, {2, 2, 1}};
    CHECK(macaulay_resultant(scaled) == rat_pow(Rat(3), resultant_scaling_degree({2, 2, 1}, 1)) * base);
}

TEST_CASE("common roots force zero") {
    CHECK(macaulay_resultant({{P("x0^2 - x1^2", 2), P("x0 - x1", 2)}, {2, 1}}) == 0);
    CHECK(macaulay_resultant({{P("x0^2 + x1^2", 2), P("x0^2 - x1^2", 2)}, {2, 2}}) != 0);
    // ternary: all three vanish at (0:0:1)
    CHECK(macaulay_resultant({{P("x0", 3), P("x1", 3), P("x0*x1 - x0^2", 3)}, {1, 1, 2}}) == 0);
}

TEST_CASE("parametric interpolation recovers a known polynomial") {
    auto eval = [](const Rat& t) -> Rat { return t * t * 3 - t + Rat(1) / 2; };
    ParametricValue pv = interpolate_parametric(eval, 4);
    CHECK(pv.recovered.degree() == 2);
    CHECK(pv.recovered.coeff(2) == 3);
    CHECK(pv.recovered.coeff(1) == -1);
    CHECK(pv.recovered.coeff(0) == Rat(1) / 2);
    CHECK(pv.recovered.eval(Rat(5)) == eval(Rat(5)));
}

TEST_CASE("parametric resultant specializes consistently") {
    // forms in x0, x1 with parameter t as the last variable
    ParametricSystem psys;
    psys.nvars = 2;
    psys.degrees = {1, 1};
    psys.forms = {P("x0 + x2*x1", 3), P("x0 - x1", 3)};  // x2 is the parameter
    ParametricValue pv = parametric_resultant(psys, 2);
    for (long t0 : {0L, 1L, -3L}) {
        FormSystem at = psys.specialize(Rat(t0));
        CHECK(pv.recovered.eval(Rat(t0)) == macaulay_resultant(at));
    }
}

TEST_CASE("system validation") {
    CHECK_THROWS_AS(macaulay_resultant({{P("x0", 2)}, {1}}), PreconditionError);  // count
    CHECK_THROWS_AS(macaulay_resultant({{P("x0+1", 1) /*inhomogeneous*/}, {1}}),
                    PreconditionError);
    CHECK_THROWS_AS(macaulay_resultant({{P("x0", 2), P("x1^2", 2)}, {1, 1}}),
                    PreconditionError);  // degree mismatch
}
