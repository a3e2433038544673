#pragma once

#include "elimkit/discriminant.hpp"
#include "elimkit/grading.hpp"
#include "elimkit/rng.hpp"

namespace elimkit {

// A form of degree d whose multiplicity at the base point (x_k = 1, rest 0)
// is at least s; equivalently, its x_k-degree is at most d - s.
struct TruncationSpec {
    int d = 0;
    int s = 0;
    int k = 0;  // distinguished variable

    void validate(int nvars) const;
    bool strict() const { return s < d; }
    // max(0, alpha_k - d + s): zero exactly on the slots a truncation keeps.
    GradingSpec grading() const { return GradingSpec::zariski(s, k, d); }
};

// n+1 truncated forms in n+1 variables, sharing one distinguished variable.
struct TruncatedSystem {
    std::vector<Polynomial> truncations;
    std::vector<TruncationSpec> specs;

    int nvars() const { return truncations.empty() ? 0 : truncations.front().nvars(); }
    void validate() const;
};

struct ReducedValue {
    Rat value;
    int exponent = 1;             // d_j - s_j when exactly one spec is strict, else 1
    bool lower_terms_zero = false;  // parameter coefficients below s_1...s_{n+1} vanish
    std::optional<long> valuation;  // t-valuation of the parametric resultant, when computed
    Rat res_g;                      // divisor Res(g) of the successful draw
    std::optional<Rat> root;        // exact exponent-th root when it exists
};

// Reduced resultant of a specialized truncated system, extracted as the
// lowest-weight piece of a perturbed resultant: filler coefficients c in
// [-9, 9] are drawn for the truncated-away slots, f_j(t) = h_j + sum t^w c x^a
// is interpolated in t, and the coefficient at t^(s_1...s_{n+1}) is divided
// by Res(g) of the degree-s_j forms carrying the same fillers. Draws with
// Res(g) = 0 are retried a bounded number of times.
ReducedValue reduced_resultant(const TruncatedSystem& system, unsigned long seed);

// Reduced discriminant of h with truncation order s in [2, d-1]:
// rRes(d1 h, ..., dn h, h; orders s-1, ..., s-1, s) divided by
// Disc(h(0, x1, ..., xn)) * Disc(tangent-cone slice). Either discriminant
// vanishing is reported as a degenerate boundary factor.
ReducedValue reduced_discriminant(const Polynomial& h, const TruncationSpec& spec,
                                  unsigned long seed);

// Demands the exact exponent-th root of a ReducedValue; error when absent.
Rat reduced_value_root(const ReducedValue& v);

// Degree of the reduced resultant in the coefficients of form i (0-based):
// prod d / d_i - prod s / s_i when at least two specs are strict; with
// exactly one strict index j, the classical residual-resultant degree
// (0 for i = j, prod of the other degrees otherwise).
long redres_degree(int i, const std::vector<int>& degrees, const std::vector<int>& orders);

// Weighted degree (weights = degree in x1..xn): n(prod d - prod s), or
// n prod d / d_j with exactly one strict index j.
long redres_weighted_degree(const std::vector<int>& degrees, const std::vector<int>& orders);

// Degrees of the reduced discriminant, standard and weighted gradings.
long rdisc_degree(int n, int d, int s);
long rdisc_weighted_degree(int n, int d, int s);

// Equation of the projection of V(f) meet V(g) away from p0, as a form of
// degree ab - a'b' in the remaining variables (a', b' = multiplicities of p0).
Polynomial project_complete_intersection(const Polynomial& f, const Polynomial& g,
                                         const LinearPoint& p0);

}  // namespace elimkit
