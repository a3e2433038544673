#pragma once

#include "elimkit/resultant.hpp"

namespace elimkit {

// Exponent in the normalization d^{a(n,d)} * Disc(f) = Res(partials):
// a(n,d) = ((d-1)^{n+1} - (-1)^{n+1}) / d, always an integer.
Int a_constant(int n, int d);

struct DiscriminantResult {
    Rat value;
    int degree_d = 0;
    int nvars = 0;
    Int divisor_constant;  // d^{a(n,d)}
    Rat res_partials;      // Res(d f/d x_0, ..., d f/d x_n)
};

// Discriminant of a homogeneous form of degree d >= 2 in nvars variables,
// normalized by the exact division above. For integer-coefficient input the
// divisibility is asserted, not assumed.
DiscriminantResult discriminant(const Polynomial& f);

// V(f) is smooth over the algebraic closure iff Disc(f) != 0.
bool smoothness_test(const Polynomial& f);

struct EulerFactorizationReport {
    bool degenerate_slice = false;  // slice f(0, x1, ..., xn) dropped degree
    bool checked = false;
    Rat lhs;        // Res(d1 f, ..., dn f, f)
    Rat disc_f;
    Rat disc_fbar;  // discriminant of the slice, in n variables
    bool holds = false;
};

// Verifies Res(d1 f, ..., dn f, f) = Disc(f) * Disc(fbar) exactly, where
// fbar = f(0, x1, ..., xn). Skipped with an explicit report when the slice
// degenerates.
EulerFactorizationReport euler_factorization_check(const Polynomial& f);

enum class WeightRule { coordinate, co };

// Weighted homogeneity degree of Disc: d(d-1)^n under a coordinate weight,
// n*d(d-1)^n under the complementary weight.
long disc_weight_degree(int n, int d, WeightRule rule);

// Standard-grading degree of Disc: (n+1)(d-1)^n.
long disc_degree(int n, int d);

// Disc of a pencil member f(tau), where f lives in nvars+1 variables with the
// parameter last; interpolated exactly from integer nodes.
ParametricValue parametric_discriminant(const Polynomial& f_with_param, long degree_bound);

}  // namespace elimkit
