#pragma once

#include <string>

#include "elimkit/reduced.hpp"
#include "elimkit/unimodular.hpp"

namespace elimkit {

// Hypersurface in coordinates where a chosen smooth point sits at
// (1:0:...:0) with tangent hyperplane {x_n = 0}:
//   f = T x0^{d-1} x_n + sum_{k=2}^{d} x0^{d-k} f_k(x1, ..., xn).
struct NormalFormHypersurface {
    int n = 0;  // ambient P^n, so n+1 variables
    int d = 0;
    Rat tangent_scale;               // T
    std::vector<Polynomial> slices;  // f_2, ..., f_d; forms of degree k in n variables
    IntMat transform;                // x = U y

    void validate() const;
    const Polynomial& slice(int k) const { return slices[static_cast<size_t>(k - 2)]; }
    Polynomial assemble() const;    // in n+1 variables
    Polynomial truncation() const;  // h = assemble() minus the T-term
};

// Unimodular change carrying p to (1:0:...:0) and its tangent hyperplane to
// {x_n = 0}; exact, so the slice data stays rational.
NormalFormHypersurface normal_form_at_point(const Polynomial& f, const LinearPoint& p);

struct SalmonReport {
    bool checked = false;  // false when a genericity precondition failed
    std::string degenerate_reason;
    long valuation_in_T = -1;  // -1 when the expansion vanishes identically
    Rat t2_coefficient;
    Rat disc_f2bar;  // Disc(f_2(x1..x_{n-1}, 0))
    Rat disc_f2;
    Rat rdisc_h;
    bool identity_holds = false;
};

// Sign of the lowest T-term under the normalizations used here (Res equal to
// one on monomial systems, reduced values extracted by the valuation
// quotient). Validated on every instance by salmon_expansion.
extern const int kSalmonExpansionSign;

// Expands Disc of the normal form in the tangent scale T by exact
// interpolation (degree bound (n+1)(d-1)^n), asserts the valuation is at
// least 2, and compares the T^2 coefficient with
// kSalmonExpansionSign * Disc(f2bar) * Disc(f2)^2 * rDisc(h).
SalmonReport salmon_expansion(const NormalFormHypersurface& nf, unsigned long seed);

struct PlaneSalmonCoefficients {
    Rat A, B, C, T;         // f2 = (A x^2 + 2 B xy + C y^2) / 2
    bool pattern_check = false;  // Disc(T x0 x2 + f2) == -A T^2 / 2
    Rat lowest_product;          // T^2 A (B^2 - AC)^2 rDisc(h); 0 on the degenerate loci
};

// Plane-curve reading (n = 2) of the expansion's lowest term.
PlaneSalmonCoefficients plane_salmon_coefficients(const NormalFormHypersurface& nf,
                                                  unsigned long seed);

// 2x2 intersection criterion for the pencil construction: the line cut out by
// the covectors a', a'' meets the span of p', p'' iff this vanishes.
Rat pencil_intersection_det(const LinearPoint& a1, const LinearPoint& a2, const LinearPoint& p1,
                            const LinearPoint& p2);
// Generalized square version det(<a_i, p_j>).
Rat pencil_intersection_det(const std::vector<LinearPoint>& as,
                            const std::vector<LinearPoint>& ps);

struct BitangentLineForm {
    bool line_in_surface = false;
    Polynomial residual;  // degree d-2 binary form in (alpha, beta)
    Rat disc;             // 1 when the residual degree is < 2
};

// Restriction of f to the tangent line through p1 (on V(f)) and p2 (in the
// tangent hyperplane at p1), with the forced beta^2 factor stripped. Its
// discriminant vanishes exactly when the line is bitangent or worse.
BitangentLineForm bitangent_line_form(const Polynomial& f, const LinearPoint& p1,
                                      const LinearPoint& p2);

// R-factor of the elimination identity
// Res(l, fq, gq, hq) = l(q)^{l1*l2*l3} * R for three surfaces through q with
// total local multiplicity l1*l2*l3 there; computed with a seeded random
// linear form and re-verified with an independent draw.
Rat salmon_elim_r(const Polynomial& fq, const Polynomial& gq, const Polynomial& hq,
                  const LinearPoint& q, unsigned long seed);

}  // namespace elimkit
