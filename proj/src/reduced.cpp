#include "elimkit/reduced.hpp"

#include <algorithm>
#include <functional>

#include "elimkit/unimodular.hpp"

namespace elimkit {

void TruncationSpec::validate(int nvars) const {
    if (d < 1) throw PreconditionError("truncation: degree must be >= 1");
    if (s < 1 || s > d) throw PreconditionError("truncation: order must satisfy 1 <= s <= d");
    if (k < 0 || k >= nvars) throw PreconditionError("truncation: bad distinguished variable");
}

void TruncatedSystem::validate() const {
    if (truncations.empty()) throw PreconditionError("empty truncated system");
    if (truncations.size() != specs.size())
        throw PreconditionError("spec count differs from form count");
    int nv = truncations.front().nvars();
    if (nv < 2 || static_cast<int>(truncations.size()) != nv)
        throw PreconditionError("form count must equal the variable count (>= 2)");
    int kvar = specs.front().k;
    bool any_strict = false;
    for (std::size_t j = 0; j < truncations.size(); ++j) {
        const Polynomial& h = truncations[j];
        const TruncationSpec& sp = specs[j];
        sp.validate(nv);
        if (sp.k != kvar) throw PreconditionError("specs must share the distinguished variable");
        if (h.nvars() != nv) throw PreconditionError("mismatched variable counts");
        if (!h.is_homogeneous_of_degree(sp.d))
            throw PreconditionError("truncation is neither zero nor homogeneous of its degree");
        auto dk = h.degree_in(sp.k);
        if (dk && *dk > sp.d - sp.s)
            throw PreconditionError("form exceeds its declared truncation order");
        any_strict = any_strict || sp.strict();
    }
    if (!any_strict)
        throw PreconditionError("reduced system needs at least one strict truncation");
}

namespace {

Polynomial swap_vars(const Polynomial& f, int i, int j) {
    if (i == j) return f;
    Polynomial out = Polynomial::zero(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        Exponents e2 = e;
        std::swap(e2[static_cast<size_t>(i)], e2[static_cast<size_t>(j)]);
        out.add_term(e2, c);
    }
    return out;
}

// Coefficient form of x0^m, living in one fewer variable.
Polynomial slice_at(const Polynomial& h, int m) {
    Polynomial out = Polynomial::zero(h.nvars() - 1);
    for (const auto& [e, c] : h.terms()) {
        if (e[0] != m) continue;
        Exponents r(e.begin() + 1, e.end());
        out.add_term(r, c);
    }
    return out;
}

void poly_trim(std::vector<Rat>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a by b (ascending coefficients, b nonzero and trimmed).
std::vector<Rat> poly_rem(std::vector<Rat> a, const std::vector<Rat>& b) {
    poly_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rat q = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
        poly_trim(a);
    }
    return a;
}

// Do the top slices (forms in n variables x1..xn) share a projective root?
// Decidable exactly for n <= 2; larger n reports "unknown" via nullopt.
std::optional<bool> tops_share_root(const std::vector<Polynomial>& tops,
                                    const std::vector<int>& orders) {
    int n = tops.front().nvars();
    bool all_zero = true;
    for (const auto& f : tops) all_zero = all_zero && f.is_zero();
    if (all_zero) return true;
    if (n == 1) return false;  // nonzero c*x1^s never vanishes at the one point of P^0
    if (n != 2) return std::nullopt;

    bool inf_root = true;  // (0:1)
    std::vector<Rat> g;
    bool have = false;
    for (std::size_t j = 0; j < tops.size(); ++j) {
        const Polynomial& f = tops[j];
        if (f.is_zero()) continue;
        int s = orders[j];
        if (f.coeff({0, s}) != 0) inf_root = false;
        std::vector<Rat> p(static_cast<size_t>(s) + 1, Rat(0));
        for (const auto& [e, c] : f.terms()) p[static_cast<size_t>(e[1])] = c;
        poly_trim(p);
        if (!have) {
            g = std::move(p);
            have = true;
        } else {
            std::vector<Rat> a = g, b = std::move(p);
            while (!b.empty()) {
                std::vector<Rat> r = poly_rem(a, b);
                a = std::move(b);
                b = std::move(r);
            }
            g = std::move(a);
        }
    }
    if (inf_root) return true;
    return g.size() >= 2;
}

struct Slot {
    Exponents alpha;
    int weight;
};

long ipow_long(long b, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

ReducedValue reduced_resultant(const TruncatedSystem& system0, unsigned long seed) {
    system0.validate();
    int nv = system0.nvars();
    int kvar = system0.specs.front().k;

    TruncatedSystem system = system0;
    if (kvar != 0) {
        for (auto& h : system.truncations) h = swap_vars(h, 0, kvar);
        for (auto& sp : system.specs) sp.k = 0;
    }

    std::vector<int> degrees, orders;
    for (const auto& sp : system.specs) {
        degrees.push_back(sp.d);
        orders.push_back(sp.s);
    }

    std::vector<std::vector<Slot>> slots(static_cast<size_t>(nv));
    for (int j = 0; j < nv; ++j)
        for (const auto& a : monomials_of_degree(nv, degrees[static_cast<size_t>(j)]))
            if (a[0] > degrees[static_cast<size_t>(j)] - orders[static_cast<size_t>(j)])
                slots[static_cast<size_t>(j)].push_back(
                    {a, a[0] - degrees[static_cast<size_t>(j)] + orders[static_cast<size_t>(j)]});

    int strict_count = 0, strict_j = -1;
    for (int j = 0; j < nv; ++j)
        if (orders[static_cast<size_t>(j)] < degrees[static_cast<size_t>(j)]) {
            ++strict_count;
            strict_j = j;
        }

    long v = 1;
    for (int j = 0; j < nv; ++j) v *= orders[static_cast<size_t>(j)];

    Rng rng(seed);
    const int max_draws = 10;
    Rat res_g;
    std::vector<std::vector<Rat>> cvals;
    bool good = false;
    for (int attempt = 0; attempt < max_draws && !good; ++attempt) {
        std::vector<std::vector<Rat>> c(static_cast<size_t>(nv));
        for (int j = 0; j < nv; ++j)
            for (std::size_t t = 0; t < slots[static_cast<size_t>(j)].size(); ++t)
                c[static_cast<size_t>(j)].push_back(Rat(rng.int_in(-9, 9)));

        FormSystem gsys;
        gsys.degrees = orders;
        for (int j = 0; j < nv; ++j) {
            Polynomial gj = Polynomial::zero(nv);
            const auto& sl = slots[static_cast<size_t>(j)];
            for (std::size_t t = 0; t < sl.size(); ++t) {
                Exponents e;
                e.push_back(sl[t].weight);
                e.insert(e.end(), sl[t].alpha.begin() + 1, sl[t].alpha.end());
                gj.add_term(e, c[static_cast<size_t>(j)][t]);
            }
            int top = degrees[static_cast<size_t>(j)] - orders[static_cast<size_t>(j)];
            for (const auto& [e, co] : system.truncations[static_cast<size_t>(j)].terms()) {
                if (e[0] != top) continue;
                Exponents e2 = e;
                e2[0] = 0;
                gj.add_term(e2, co);
            }
            gsys.forms.push_back(std::move(gj));
        }
        Rat rg = macaulay_resultant(gsys);
        if (rg != 0) {
            res_g = rg;
            cvals = std::move(c);
            good = true;
        }
    }

    ReducedValue out;
    out.exponent = strict_count == 1
                       ? degrees[static_cast<size_t>(strict_j)] - orders[static_cast<size_t>(strict_j)]
                       : 1;

    if (!good) {
        // Res(g) = 0 identically happens exactly when the leading slices share
        // a root (the common-principal-tangent case), which forces value 0.
        std::vector<Polynomial> tops;
        for (int j = 0; j < nv; ++j)
            tops.push_back(slice_at(system.truncations[static_cast<size_t>(j)],
                                    degrees[static_cast<size_t>(j)] - orders[static_cast<size_t>(j)]));
        auto shared = tops_share_root(tops, orders);
        if (!shared.has_value() || !*shared)
            throw ComputationError("reduced_resultant: Res(g) = 0 for every filler draw");
        out.value = 0;
        out.res_g = 0;
        out.lower_terms_zero = true;
        return out;
    }

    ParametricSystem psys;
    psys.nvars = nv;
    psys.degrees = degrees;
    for (int j = 0; j < nv; ++j) {
        Polynomial fj = insert_variable(system.truncations[static_cast<size_t>(j)], nv);
        const auto& sl = slots[static_cast<size_t>(j)];
        for (std::size_t t = 0; t < sl.size(); ++t) {
            if (cvals[static_cast<size_t>(j)][t] == 0) continue;
            Exponents e = sl[t].alpha;
            e.push_back(sl[t].weight);
            fj.add_term(e, cvals[static_cast<size_t>(j)][t]);
        }
        psys.forms.push_back(std::move(fj));
    }
    long bound = 0;
    for (int j = 0; j < nv; ++j) {
        long p = orders[static_cast<size_t>(j)];
        for (int l = 0; l < nv; ++l)
            if (l != j) p *= degrees[static_cast<size_t>(l)];
        bound += p;
    }
    ParametricValue pv = parametric_resultant(psys, bound);

    bool low_ok = true;
    for (long m = 0; m < v; ++m)
        if (pv.recovered.coeff(static_cast<int>(m)) != 0) low_ok = false;
    out.lower_terms_zero = low_ok;
    if (!low_ok) throw ComputationError("reduced_resultant: valuation below s_1...s_{n+1}");
    if (!pv.recovered.is_zero()) out.valuation = pv.recovered.valuation();
    out.res_g = res_g;
    out.value = pv.recovered.coeff(static_cast<int>(v)) / res_g;
    out.value.canonicalize();
    if (out.exponent > 1) out.root = rat_root(out.value, out.exponent);
    return out;
}

ReducedValue reduced_discriminant(const Polynomial& h0, const TruncationSpec& spec,
                                  unsigned long seed) {
    int nv = h0.nvars();
    if (nv < 2) throw PreconditionError("reduced_discriminant: need >= 2 variables");
    spec.validate(nv);
    if (spec.s < 2 || spec.s > spec.d - 1)
        throw PreconditionError("reduced_discriminant: order must lie in [2, d-1]");
    Polynomial h = spec.k == 0 ? h0 : swap_vars(h0, 0, spec.k);
    if (h.is_zero() || !h.is_homogeneous_of_degree(spec.d))
        throw PreconditionError("reduced_discriminant: need a homogeneous form of the declared degree");
    auto dk = h.degree_in(0);
    if (dk && *dk > spec.d - spec.s)
        throw PreconditionError("reduced_discriminant: form exceeds its truncation order");

    Polynomial fd = slice_at(h, 0);
    Polynomial fs = slice_at(h, spec.d - spec.s);
    if (fd.is_zero() || fs.is_zero())
        throw ComputationError("reduced_discriminant: degenerate boundary factor");
    Rat disc_fd = discriminant(fd).value;
    Rat disc_fs = discriminant(fs).value;
    if (disc_fd == 0 || disc_fs == 0)
        throw ComputationError("reduced_discriminant: degenerate boundary factor");

    TruncatedSystem sys;
    for (int i = 1; i < nv; ++i) {
        sys.truncations.push_back(partial_derivative(h, i));
        sys.specs.push_back({spec.d - 1, spec.s - 1, 0});
    }
    sys.truncations.push_back(h);
    sys.specs.push_back({spec.d, spec.s, 0});

    ReducedValue rv = reduced_resultant(sys, seed);
    rv.value = rv.value / (disc_fd * disc_fs);
    rv.value.canonicalize();
    rv.root.reset();
    return rv;
}

Rat reduced_value_root(const ReducedValue& v) {
    if (v.exponent == 1) return v.value;
    if (!v.root) throw ComputationError("reduced value has no exact root of its exponent");
    return *v.root;
}

long redres_degree(int i, const std::vector<int>& degrees, const std::vector<int>& orders) {
    std::size_t m = degrees.size();
    if (orders.size() != m || m < 2)
        throw PreconditionError("redres_degree: need matching lists of length >= 2");
    if (i < 0 || i >= static_cast<int>(m)) throw PreconditionError("redres_degree: bad index");
    int strict_count = 0, strict_j = -1;
    for (std::size_t j = 0; j < m; ++j) {
        if (degrees[j] < 1 || orders[j] < 1 || orders[j] > degrees[j])
            throw PreconditionError("redres_degree: need 1 <= s_j <= d_j");
        if (orders[j] < degrees[j]) {
            ++strict_count;
            strict_j = static_cast<int>(j);
        }
    }
    if (strict_count == 0)
        throw PreconditionError("redres_degree: need at least one strict truncation");
    if (strict_count == 1) {
        if (i == strict_j) return 0;
        long p = 1;
        for (std::size_t l = 0; l < m; ++l)
            if (static_cast<int>(l) != i && static_cast<int>(l) != strict_j) p *= degrees[l];
        return p;
    }
    long pd = 1, ps = 1;
    for (std::size_t l = 0; l < m; ++l)
        if (static_cast<int>(l) != i) {
            pd *= degrees[l];
            ps *= orders[l];
        }
    return pd - ps;
}

long redres_weighted_degree(const std::vector<int>& degrees, const std::vector<int>& orders) {
    std::size_t m = degrees.size();
    if (orders.size() != m || m < 2)
        throw PreconditionError("redres_weighted_degree: need matching lists of length >= 2");
    long n = static_cast<long>(m) - 1;
    int strict_count = 0, strict_j = -1;
    for (std::size_t j = 0; j < m; ++j) {
        if (degrees[j] < 1 || orders[j] < 1 || orders[j] > degrees[j])
            throw PreconditionError("redres_weighted_degree: need 1 <= s_j <= d_j");
        if (orders[j] < degrees[j]) {
            ++strict_count;
            strict_j = static_cast<int>(j);
        }
    }
    if (strict_count == 1) {
        long p = 1;
        for (std::size_t l = 0; l < m; ++l)
            if (static_cast<int>(l) != strict_j) p *= degrees[l];
        return n * p;
    }
    long pd = 1, ps = 1;
    for (std::size_t l = 0; l < m; ++l) {
        pd *= degrees[l];
        ps *= orders[l];
    }
    return n * (pd - ps);
}

long rdisc_degree(int n, int d, int s) {
    if (n < 1) throw PreconditionError("rdisc_degree: need n >= 1");
    if (s < 2 || s > d - 1) throw PreconditionError("rdisc_degree: need 2 <= s <= d-1");
    return (n + 1) * (ipow_long(d - 1, n) - ipow_long(s - 1, n)) -
           2L * n * ipow_long(s - 1, n - 1);
}

long rdisc_weighted_degree(int n, int d, int s) {
    if (n < 1) throw PreconditionError("rdisc_weighted_degree: need n >= 1");
    if (s < 2 || s > d - 1) throw PreconditionError("rdisc_weighted_degree: need 2 <= s <= d-1");
    return n * (static_cast<long>(d) * ipow_long(d - 1, n) -
                static_cast<long>(s) * (s + 1) * ipow_long(s - 1, n - 1));
}

Polynomial project_complete_intersection(const Polynomial& f, const Polynomial& g,
                                         const LinearPoint& p0) {
    int nv = f.nvars();
    if (g.nvars() != nv || nv < 2)
        throw PreconditionError("projection: forms must share at least two variables");
    if (static_cast<int>(p0.size()) != nv) throw PreconditionError("projection: point size mismatch");
    if (f.is_zero() || g.is_zero() || !f.is_homogeneous() || !g.is_homogeneous())
        throw PreconditionError("projection: need nonzero homogeneous forms");
    int a = *f.degree(), b = *g.degree();

    UnimodularChange ch = unimodular_with_first_column(primitive_integer_lift(p0));
    Polynomial capf = apply_matrix(f, ch.u);
    Polynomial capg = apply_matrix(g, ch.u);
    int d1 = *capf.degree_in(0);  // a - a'
    int d2 = *capg.degree_in(0);
    long dstar = static_cast<long>(a) * b - static_cast<long>(a - d1) * (b - d2);

    std::vector<Polynomial> fslices, gslices;
    for (int i = 0; i <= d1; ++i) fslices.push_back(slice_at(capf, d1 - i));
    for (int i = 0; i <= d2; ++i) gslices.push_back(slice_at(capg, d2 - i));

    int m = nv - 1;  // surviving variables x1..xn
    auto value_at = [&](const std::vector<Rat>& xp) {
        std::vector<Rat> av, bv;
        av.reserve(fslices.size());
        bv.reserve(gslices.size());
        for (const auto& sl : fslices) av.push_back(evaluate(sl, xp));
        for (const auto& sl : gslices) bv.push_back(evaluate(sl, xp));
        return sylvester_resultant_coeffs(av, bv);
    };

    // Dehomogenize at x1 = 1 and interpolate on the integer grid {0..dstar}
    // per remaining variable, then rehomogenize to total degree dstar.
    int yv = m - 1;  // free variables of the dehomogenized form
    std::vector<std::vector<Polynomial>> basis(static_cast<size_t>(yv));
    for (int var = 0; var < yv; ++var) {
        for (long node = 0; node <= dstar; ++node) {
            Polynomial ell = Polynomial::constant(yv, Rat(1));
            Rat denom(1);
            for (long w = 0; w <= dstar; ++w) {
                if (w == node) continue;
                ell = ell * (Polynomial::variable(yv, var) - Polynomial::constant(yv, Rat(w)));
                denom *= Rat(node - w);
            }
            basis[static_cast<size_t>(var)].push_back(ell * (Rat(1) / denom));
        }
    }

    std::vector<Rat> point(static_cast<size_t>(m), Rat(0));
    point[0] = 1;
    std::function<Polynomial(int)> interp = [&](int pos) -> Polynomial {
        if (pos == m) return Polynomial::constant(yv, value_at(point));
        Polynomial acc = Polynomial::zero(yv);
        for (long node = 0; node <= dstar; ++node) {
            point[static_cast<size_t>(pos)] = Rat(node);
            acc = acc + interp(pos + 1) * basis[static_cast<size_t>(pos - 1)][static_cast<size_t>(node)];
        }
        return acc;
    };
    Polynomial dehom = interp(1);

    // consistency probe off the grid
    for (int i = 1; i < m; ++i) point[static_cast<size_t>(i)] = Rat(dstar + i);
    std::vector<Rat> ypoint(point.begin() + 1, point.end());
    if (evaluate(dehom, ypoint) != value_at(point))
        throw ComputationError("projection: interpolation consistency check failed");

    Polynomial out = Polynomial::zero(m);
    for (const auto& [e, c] : dehom.terms()) {
        int total = total_degree(e);
        if (total > dstar) throw ComputationError("projection: degree bound violated");
        Exponents full;
        full.push_back(static_cast<int>(dstar) - total);
        full.insert(full.end(), e.begin(), e.end());
        out.add_term(full, c);
    }
    return out;
}

}  // namespace elimkit
