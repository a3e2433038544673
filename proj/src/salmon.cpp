#include "elimkit/salmon.hpp"

#include <utility>

namespace elimkit {

namespace {

// Coefficient of x0^m, as a form in one fewer variable.
Polynomial coefficient_slice(const Polynomial& f, int m) {
    Polynomial out = Polynomial::zero(f.nvars() - 1);
    for (const auto& [e, c] : f.terms()) {
        if (e[0] != m) continue;
        Exponents rest(e.begin() + 1, e.end());
        out.add_term(rest, c);
    }
    return out;
}

long ipow_long(long b, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

Rat dot(const LinearPoint& a, const LinearPoint& b) {
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

void NormalFormHypersurface::validate() const {
    if (n < 2) throw PreconditionError("normal form needs ambient dimension at least 2");
    if (d < 3) throw PreconditionError("normal form needs degree at least 3");
    if (slices.size() != static_cast<size_t>(d - 1))
        throw PreconditionError("expected the slices f_2, ..., f_d");
    for (int k = 2; k <= d; ++k) {
        const Polynomial& fk = slice(k);
        if (fk.nvars() != n) throw PreconditionError("slice variable count mismatch");
        if (!fk.is_zero() && !fk.is_homogeneous_of_degree(k))
            throw PreconditionError("slice is not homogeneous of its index");
    }
}

Polynomial NormalFormHypersurface::truncation() const {
    validate();
    Polynomial out = Polynomial::zero(n + 1);
    for (int k = 2; k <= d; ++k) {
        for (const auto& [e, c] : slice(k).terms()) {
            Exponents full(1, d - k);
            full.insert(full.end(), e.begin(), e.end());
            out.add_term(full, c);
        }
    }
    return out;
}

Polynomial NormalFormHypersurface::assemble() const {
    Polynomial out = truncation();
    Exponents te(static_cast<size_t>(n) + 1, 0);
    te[0] = d - 1;
    te[static_cast<size_t>(n)] = 1;
    out.add_term(te, tangent_scale);
    return out;
}

NormalFormHypersurface normal_form_at_point(const Polynomial& f, const LinearPoint& p) {
    const int nv = f.nvars();
    const int n = nv - 1;
    if (n < 2) throw PreconditionError("normal form needs ambient dimension at least 2");
    auto dopt = f.degree();
    if (!dopt || !f.is_homogeneous() || *dopt < 3)
        throw PreconditionError("need a homogeneous form of degree at least 3");
    const int d = *dopt;
    if (static_cast<int>(p.size()) != nv) throw PreconditionError("point size mismatch");
    if (evaluate(f, p) != 0) throw PreconditionError("point does not lie on the hypersurface");

    // First send the point to (1:0:...:0); the gradient there is the
    // y0^{d-1}-linear slice (its y0-entry is zero by the Euler relation).
    UnimodularChange u1 = unimodular_with_first_column(primitive_integer_lift(p));
    Polynomial g1 = apply_matrix(f, u1.u);
    LinearPoint grad(static_cast<size_t>(n), Rat(0));
    bool singular = true;
    for (int i = 1; i <= n; ++i) {
        Exponents e(static_cast<size_t>(nv), 0);
        e[0] = d - 1;
        e[static_cast<size_t>(i)] = 1;
        grad[static_cast<size_t>(i - 1)] = g1.coeff(e);
        if (grad[static_cast<size_t>(i - 1)] != 0) singular = false;
    }
    if (singular) throw PreconditionError("singular point: no tangent hyperplane");

    // Then rotate the residual block so the tangent covector lands on y_n.
    UnimodularChange v = unimodular_sending_covector_last(primitive_integer_lift(grad));
    IntMat block = IntMat::identity(nv);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) block.at(i + 1, j + 1) = v.u.at(i, j);
    IntMat total = mat_mul(u1.u, block);
    Polynomial g = apply_matrix(f, total);

    NormalFormHypersurface nf;
    nf.n = n;
    nf.d = d;
    nf.transform = total;
    Exponents top(static_cast<size_t>(nv), 0);
    top[0] = d;
    if (g.coeff(top) != 0) throw ComputationError("normal form: x0^d term survived");
    Polynomial lin = coefficient_slice(g, d - 1);
    for (int i = 0; i < n - 1; ++i) {
        Exponents e(static_cast<size_t>(n), 0);
        e[static_cast<size_t>(i)] = 1;
        if (lin.coeff(e) != 0) throw ComputationError("normal form: tangent slice not aligned");
    }
    Exponents last(static_cast<size_t>(n), 0);
    last[static_cast<size_t>(n - 1)] = 1;
    nf.tangent_scale = lin.coeff(last);
    if (nf.tangent_scale == 0) throw ComputationError("normal form: vanishing tangent scale");
    for (int k = 2; k <= d; ++k) nf.slices.push_back(coefficient_slice(g, d - k));
    return nf;
}

// Fixed by our normalization of the reduced discriminant; the randomized
// plane and solid expansion suites pin it down empirically.
const int kSalmonExpansionSign = -1;

SalmonReport salmon_expansion(const NormalFormHypersurface& nf, unsigned long seed) {
    nf.validate();
    SalmonReport rep;
    const int n = nf.n;
    const int d = nf.d;
    const int nv = n + 1;

    const Polynomial& f2 = nf.slice(2);
    Polynomial f2bar = f2.is_zero() ? Polynomial::zero(n - 1)
                                    : drop_variable(substitute_value(f2, n - 1, Rat(0)), n - 1);
    rep.disc_f2 = f2.is_zero() ? Rat(0) : discriminant(f2).value;
    rep.disc_f2bar = f2bar.is_zero() ? Rat(0) : discriminant(f2bar).value;

    // The expansion itself is well defined for any slices: treat the tangent
    // scale as the parameter and interpolate Disc exactly.
    Polynomial ft = insert_variable(nf.truncation(), nv);
    Exponents te(static_cast<size_t>(nv) + 1, 0);
    te[0] = d - 1;
    te[static_cast<size_t>(n)] = 1;
    te[static_cast<size_t>(nv)] = 1;
    ft.add_term(te, Rat(1));
    long bound = static_cast<long>(n + 1) * ipow_long(d - 1, n);
    ParametricValue pv = parametric_discriminant(ft, bound);
    rep.valuation_in_T = pv.recovered.valuation();
    rep.t2_coefficient = pv.recovered.coeff(2);
    if (!pv.recovered.is_zero() && rep.valuation_in_T < 2)
        throw ComputationError("tangent-scale valuation fell below 2");

    if (rep.disc_f2 == 0 || rep.disc_f2bar == 0) {
        rep.degenerate_reason =
            rep.disc_f2 == 0 ? "degenerate second slice" : "degenerate restricted second slice";
        return rep;
    }
    ReducedValue rv;
    try {
        rv = reduced_discriminant(nf.truncation(), TruncationSpec{d, 2, 0}, seed);
    } catch (const ComputationError& err) {
        rep.degenerate_reason = err.what();
        return rep;
    }
    rep.rdisc_h = rv.value;
    Rat expected =
        Rat(kSalmonExpansionSign) * rep.disc_f2bar * rep.disc_f2 * rep.disc_f2 * rep.rdisc_h;
    rep.identity_holds = rep.t2_coefficient == expected;
    rep.checked = true;
    return rep;
}

PlaneSalmonCoefficients plane_salmon_coefficients(const NormalFormHypersurface& nf,
                                                  unsigned long seed) {
    nf.validate();
    if (nf.n != 2) throw PreconditionError("plane reading needs ambient dimension 2");
    PlaneSalmonCoefficients out;
    const Polynomial& f2 = nf.slice(2);
    out.A = Rat(2) * f2.coeff({2, 0});
    out.B = f2.coeff({1, 1});
    out.C = Rat(2) * f2.coeff({0, 2});
    out.T = nf.tangent_scale;

    Polynomial quad = Polynomial::zero(3);
    quad.add_term({1, 0, 1}, out.T);
    for (const auto& [e, c] : f2.terms()) quad.add_term({0, e[0], e[1]}, c);
    Rat disc_quad = quad.is_zero() ? Rat(0) : discriminant(quad).value;
    out.pattern_check = disc_quad == -out.A * out.T * out.T / 2;

    Rat repeated = out.B * out.B - out.A * out.C;
    if (out.A == 0 || repeated == 0) {
        out.lowest_product = Rat(0);
        return out;
    }
    ReducedValue rv = reduced_discriminant(nf.truncation(), TruncationSpec{nf.d, 2, 0}, seed);
    out.lowest_product = out.T * out.T * out.A * repeated * repeated * rv.value;
    return out;
}

Rat pencil_intersection_det(const LinearPoint& a1, const LinearPoint& a2, const LinearPoint& p1,
                            const LinearPoint& p2) {
    if (a1.size() != a2.size() || a1.size() != p1.size() || p1.size() != p2.size())
        throw PreconditionError("covector/point size mismatch");
    return dot(a1, p1) * dot(a2, p2) - dot(a1, p2) * dot(a2, p1);
}

Rat pencil_intersection_det(const std::vector<LinearPoint>& as,
                            const std::vector<LinearPoint>& ps) {
    if (as.empty() || as.size() != ps.size())
        throw PreconditionError("need as many covectors as points");
    const int m = static_cast<int>(as.size());
    const std::size_t dim = as.front().size();
    for (const auto& a : as)
        if (a.size() != dim) throw PreconditionError("covector size mismatch");
    for (const auto& p : ps)
        if (p.size() != dim) throw PreconditionError("point size mismatch");
    MatQ mat(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) mat.at(i, j) = dot(as[static_cast<size_t>(i)], ps[static_cast<size_t>(j)]);
    return det(mat);
}

BitangentLineForm bitangent_line_form(const Polynomial& f, const LinearPoint& p1,
                                      const LinearPoint& p2) {
    const int nv = f.nvars();
    auto dopt = f.degree();
    if (!dopt || !f.is_homogeneous() || *dopt < 3)
        throw PreconditionError("need a homogeneous form of degree at least 3");
    const int d = *dopt;
    if (static_cast<int>(p1.size()) != nv || static_cast<int>(p2.size()) != nv)
        throw PreconditionError("point size mismatch");
    bool spans = false;
    for (int i = 0; i < nv && !spans; ++i)
        for (int j = i + 1; j < nv; ++j)
            if (p1[static_cast<size_t>(i)] * p2[static_cast<size_t>(j)] !=
                p1[static_cast<size_t>(j)] * p2[static_cast<size_t>(i)]) {
                spans = true;
                break;
            }
    if (!spans) throw PreconditionError("points do not span a line");

    Polynomial rest = restrict_to_line(f, p1, p2);
    BitangentLineForm out;
    if (rest.is_zero()) {
        out.line_in_surface = true;
        out.residual = Polynomial::zero(2);
        out.disc = Rat(0);
        return out;
    }
    if (rest.coeff({d, 0}) != 0)
        throw PreconditionError("base point does not lie on the hypersurface");
    if (rest.coeff({d - 1, 1}) != 0)
        throw PreconditionError("line is not tangent at the base point");
    Polynomial residual = Polynomial::zero(2);
    for (const auto& [e, c] : rest.terms()) residual.add_term({e[0], e[1] - 2}, c);
    out.residual = residual;
    out.disc = d - 2 <= 1 ? Rat(1) : discriminant(residual).value;
    return out;
}

Rat salmon_elim_r(const Polynomial& fq, const Polynomial& gq, const Polynomial& hq,
                  const LinearPoint& q, unsigned long seed) {
    const Polynomial* forms[3] = {&fq, &gq, &hq};
    long degs[3];
    for (int i = 0; i < 3; ++i) {
        if (forms[i]->nvars() != 4) throw PreconditionError("expected forms in 4 variables");
        auto dopt = forms[i]->degree();
        if (!dopt || !forms[i]->is_homogeneous())
            throw PreconditionError("expected nonzero homogeneous forms");
        degs[i] = *dopt;
        if (evaluate(*forms[i], q) != 0)
            throw PreconditionError("forms must pass through the base point");
    }
    if (q.size() != 4) throw PreconditionError("expected a point with 4 coordinates");
    const long e = degs[0] * degs[1] * degs[2];

    Rng rng(seed);
    auto once = [&]() -> Rat {
        for (int tries = 0; tries < 32; ++tries) {
            Polynomial l = Polynomial::zero(4);
            for (int i = 0; i < 4; ++i) {
                Exponents ee(4, 0);
                ee[static_cast<size_t>(i)] = 1;
                l.add_term(ee, Rat(rng.int_in(-9, 9)));
            }
            Rat lq = evaluate(l, q);
            if (lq == 0) continue;
            FormSystem sys;
            sys.forms = {l, fq, gq, hq};
            sys.degrees = {1, static_cast<int>(degs[0]), static_cast<int>(degs[1]),
                           static_cast<int>(degs[2])};
            return macaulay_resultant(sys) / rat_pow(lq, e);
        }
        throw ComputationError("could not draw a linear form off the base point");
    };
    Rat r1 = once();
    Rat r2 = once();
    if (r1 != r2)
        throw ComputationError("independent draws disagree: local multiplicity is below the product");
    return r1;
}

}  // namespace elimkit
