#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "elimkit/linalg.hpp"
#include "elimkit/polynomial.hpp"

namespace elimkit {

// n+1 homogeneous forms in n+1 variables with declared degrees.
struct FormSystem {
    std::vector<Polynomial> forms;
    std::vector<int> degrees;

    int nvars() const { return forms.empty() ? 0 : forms.front().nvars(); }
    void validate() const;
};

// Resultant of two binary forms, normalized so Res(x0^d1, x1^d2) = 1.
// Independent of the Macaulay path; serves as the n=1 oracle.
Rat sylvester_resultant(const Polynomial& f, const Polynomial& g);

// Form resultant from coefficient vectors with declared degrees: a has size
// d1+1 with a[i] multiplying t^{d1-i} (leading entries may vanish).
Rat sylvester_resultant_coeffs(const std::vector<Rat>& a, const std::vector<Rat>& b);

// Resultant via Macaulay's quotient det(M)/det(M') at the critical degree
// sum(d_i - 1) + 1, normalized so Res(x0^d1, ..., xn^d_{n+1}) = 1. When
// det(M') = 0 the system is deformed to f_j + u*x_j^{d_j} (which turns both
// determinants into monic polynomials in u), interpolated, and read off at
// u = 0.
Rat macaulay_resultant(const FormSystem& system);

// Degree of Res in the coefficients of form k: prod_{j != k} d_j.
long resultant_scaling_degree(const std::vector<int>& degrees, int k);

// Result of interpolating a parametric value from integer nodes.
struct ParametricValue {
    std::vector<std::pair<Rat, Rat>> samples;
    Poly1 recovered;
};

// Forms live in nvars+1 variables; the last one is the parameter. Each form
// must be homogeneous of its declared degree in the x-variables (parameter
// exponents are free).
struct ParametricSystem {
    std::vector<Polynomial> forms;
    std::vector<int> degrees;
    int nvars = 0;

    void validate() const;
    FormSystem specialize(const Rat& t) const;
};

// Exact univariate polynomial in the parameter, from macaulay_resultant
// evaluations at integer nodes 0, 1, 2, ... (failing nodes skipped, bounded)
// plus one extra node used as an interpolation consistency check.
ParametricValue parametric_resultant(const ParametricSystem& system, long degree_bound);

// Generic form of the same machinery for other parametric quantities.
ParametricValue interpolate_parametric(const std::function<Rat(const Rat&)>& eval,
                                       long degree_bound);

struct DivisibilityReport {
    bool certificate_ok = false;
    bool divides = false;
    Rat res_sub;    // Res of the f-system (the divisor side)
    Rat res_super;  // Res of the g-system
    bool quotient_defined = false;
    Rat quotient;
};

// Verifies the cofactor certificate g_i = sum_j cofactors[i][j] * f_j, then
// checks divisibility of the specialized resultants: Res(f) = 0 forces
// Res(g) = 0, and otherwise the exact quotient is reported.
DivisibilityReport divisibility_check(const FormSystem& sub, const FormSystem& super,
                                      const std::vector<std::vector<Polynomial>>& cofactors);

// All degree-t monomials in nv variables, descending graded-lex.
std::vector<Exponents> monomials_of_degree(int nv, int t);

}  // namespace elimkit
