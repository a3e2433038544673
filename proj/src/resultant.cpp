#include "elimkit/resultant.hpp"

#include <algorithm>
#include <map>

namespace elimkit {

void FormSystem::validate() const {
    if (forms.empty()) throw PreconditionError("empty form system");
    if (forms.size() != degrees.size())
        throw PreconditionError("degree count differs from form count");
    int nv = forms.front().nvars();
    if (static_cast<int>(forms.size()) != nv)
        throw PreconditionError("form count must equal the variable count");
    for (std::size_t j = 0; j < forms.size(); ++j) {
        if (forms[j].nvars() != nv) throw PreconditionError("mismatched variable counts");
        if (degrees[j] < 1) throw PreconditionError("form degrees must be >= 1");
        if (!forms[j].is_homogeneous_of_degree(degrees[j]))
            throw PreconditionError("form is neither zero nor homogeneous of its declared degree");
    }
}

Rat sylvester_resultant(const Polynomial& f, const Polynomial& g) {
    if (f.nvars() != 2 || g.nvars() != 2)
        throw PreconditionError("sylvester_resultant expects binary forms");
    if (f.is_zero() || g.is_zero())
        throw PreconditionError("sylvester_resultant expects nonzero forms");
    if (!f.is_homogeneous() || !g.is_homogeneous())
        throw PreconditionError("sylvester_resultant expects homogeneous forms");
    int d1 = *f.degree(), d2 = *g.degree();
    if (d1 < 1 || d2 < 1) throw PreconditionError("sylvester_resultant expects degrees >= 1");
    int n = d1 + d2;
    MatQ m(n, n);
    // row r (0 <= r < d2): coefficients of x0^(d1-i) x1^i shifted by r
    for (int r = 0; r < d2; ++r)
        for (int i = 0; i <= d1; ++i) m.at(r, r + i) = f.coeff({d1 - i, i});
    for (int r = 0; r < d1; ++r)
        for (int i = 0; i <= d2; ++i) m.at(d2 + r, r + i) = g.coeff({d2 - i, i});
    return det(m);
}

Rat sylvester_resultant_coeffs(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.empty() || b.empty())
        throw PreconditionError("sylvester_resultant_coeffs expects nonempty coefficients");
    int d1 = static_cast<int>(a.size()) - 1;
    int d2 = static_cast<int>(b.size()) - 1;
    int n = d1 + d2;
    MatQ m(n, n);
    for (int r = 0; r < d2; ++r)
        for (int i = 0; i <= d1; ++i) m.at(r, r + i) = a[static_cast<size_t>(i)];
    for (int r = 0; r < d1; ++r)
        for (int i = 0; i <= d2; ++i) m.at(d2 + r, r + i) = b[static_cast<size_t>(i)];
    return det(m);
}

std::vector<Exponents> monomials_of_degree(int nv, int t) {
    std::vector<Exponents> out;
    Exponents cur(nv, 0);
    // descending graded-lex at fixed degree == reverse lexicographic emit
    struct Gen {
        int nv;
        std::vector<Exponents>& out;
        Exponents& cur;
        void run(int pos, int rem) {
            if (pos == nv - 1) {
                cur[pos] = rem;
                out.push_back(cur);
                return;
            }
            for (int e = rem; e >= 0; --e) {
                cur[pos] = e;
                run(pos + 1, rem - e);
            }
        }
    };
    if (nv == 0) {
        if (t == 0) out.push_back({});
        return out;
    }
    Gen{nv, out, cur}.run(0, t);
    return out;
}

namespace {

struct MacaulayData {
    std::vector<Exponents> mons;       // degree-t monomials, descending grlex
    std::vector<int> row_form;         // form index used for each row
    std::vector<int> reduced_count;    // #{j : gamma_{j-1} >= d_j}
    MatQ m{0, 0};
    std::vector<int> nonreduced_rows;  // indices with reduced_count >= 2
};

MacaulayData build_macaulay(const FormSystem& sys) {
    int nv = sys.nvars();
    int t = 1;
    for (int d : sys.degrees) t += d - 1;

    MacaulayData data;
    data.mons = monomials_of_degree(nv, t);
    int n = static_cast<int>(data.mons.size());
    std::map<Exponents, int, GrlexLess> col;
    for (int i = 0; i < n; ++i) col.emplace(data.mons[i], i);

    data.m = MatQ(n, n);
    data.row_form.resize(n);
    data.reduced_count.resize(n);
    for (int r = 0; r < n; ++r) {
        const Exponents& gamma = data.mons[r];
        int cnt = 0, first = -1;
        for (int j = 0; j < nv; ++j) {
            if (gamma[j] >= sys.degrees[j]) {
                ++cnt;
                if (first < 0) first = j;
            }
        }
        // t = sum(d_j - 1) + 1 forces at least one divisor by pigeonhole
        data.reduced_count[r] = cnt;
        data.row_form[r] = first;
        if (cnt >= 2) data.nonreduced_rows.push_back(r);
        Exponents shift = gamma;
        shift[first] -= sys.degrees[first];
        for (const auto& [e, c] : sys.forms[first].terms()) {
            Exponents target(nv);
            for (int i = 0; i < nv; ++i) target[i] = e[i] + shift[i];
            data.m.at(r, col.at(target)) = c;
        }
    }
    return data;
}

Rat macaulay_quotient_or_fallback(const FormSystem& sys) {
    MacaulayData data = build_macaulay(sys);
    int n = data.m.rows();
    const auto& nr = data.nonreduced_rows;
    int k = static_cast<int>(nr.size());

    auto minor_det = [&](const Rat& u) {
        MatQ mp(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) mp.at(i, j) = data.m.at(nr[i], nr[j]);
        if (u != 0)
            for (int i = 0; i < k; ++i) mp.at(i, i) += u;
        return det(mp);
    };
    auto full_det = [&](const Rat& u) {
        if (u == 0) return det(data.m);
        MatQ mu = data.m;
        for (int i = 0; i < n; ++i) mu.at(i, i) += u;
        return det(mu);
    };

    Rat dprime = minor_det(Rat(0));
    if (dprime != 0) return full_det(Rat(0)) / dprime;

    // Deformed system f_j + u*x_j^{d_j}: both determinants become monic in u,
    // so enough good nodes always exist. Res(f(u)) has u-degree at most
    // sum_k prod_{j != k} d_j.
    long bound = 0;
    for (std::size_t j = 0; j < sys.degrees.size(); ++j)
        bound += resultant_scaling_degree(sys.degrees, static_cast<int>(j));
    std::vector<std::pair<Rat, Rat>> samples;
    long u = 1;
    long misses = 0;
    while (static_cast<long>(samples.size()) < bound + 1) {
        Rat uu(u);
        Rat dp = minor_det(uu);
        if (dp == 0) {
            ++u;
            if (++misses > static_cast<long>(n) + bound + 2)
                throw ComputationError("resultant fallback exhausted its nodes");
            continue;
        }
        samples.emplace_back(uu, full_det(uu) / dp);
        ++u;
    }
    Poly1 p = lagrange_interpolate(samples);
    return p.coeff(0);
}

}  // namespace

Rat macaulay_resultant(const FormSystem& system) {
    system.validate();
    return macaulay_quotient_or_fallback(system);
}

long resultant_scaling_degree(const std::vector<int>& degrees, int k) {
    if (k < 0 || k >= static_cast<int>(degrees.size()))
        throw PreconditionError("form index out of range");
    long p = 1;
    for (std::size_t j = 0; j < degrees.size(); ++j)
        if (static_cast<int>(j) != k) p *= degrees[j];
    return p;
}

void ParametricSystem::validate() const {
    if (forms.empty()) throw PreconditionError("empty parametric system");
    if (forms.size() != degrees.size())
        throw PreconditionError("degree count differs from form count");
    if (static_cast<int>(forms.size()) != nvars)
        throw PreconditionError("form count must equal the x-variable count");
    for (std::size_t j = 0; j < forms.size(); ++j) {
        if (forms[j].nvars() != nvars + 1)
            throw PreconditionError("parametric forms need nvars+1 variables");
        for (const auto& [e, c] : forms[j].terms())
            if (total_degree(e) - e[nvars] != degrees[j])
                throw PreconditionError("form is not x-homogeneous of its declared degree");
    }
}

FormSystem ParametricSystem::specialize(const Rat& t) const {
    FormSystem sys;
    sys.degrees = degrees;
    sys.forms.reserve(forms.size());
    for (const auto& f : forms)
        sys.forms.push_back(drop_variable(substitute_value(f, nvars, t), nvars));
    return sys;
}

ParametricValue interpolate_parametric(const std::function<Rat(const Rat&)>& eval,
                                       long degree_bound) {
    if (degree_bound < 0) throw PreconditionError("negative interpolation degree bound");
    long needed = degree_bound + 2;  // one extra node for the consistency check
    ParametricValue out;

    std::vector<Rat> values;
    bool parallel_ok = true;
    try {
        values = parallel_map(static_cast<int>(needed),
                              [&](int i) { return eval(Rat(static_cast<long>(i))); });
    } catch (const Error&) {
        parallel_ok = false;
    }
    if (parallel_ok) {
        for (long i = 0; i < needed; ++i)
            out.samples.emplace_back(Rat(i), values[static_cast<std::size_t>(i)]);
    } else {
        // sequential retry with node skipping, consecutive integers
        long node = 0, misses = 0;
        while (static_cast<long>(out.samples.size()) < needed) {
            try {
                Rat t(node);
                out.samples.emplace_back(t, eval(t));
            } catch (const Error&) {
                if (++misses > needed + 16)
                    throw ComputationError("too many failing interpolation nodes");
            }
            ++node;
        }
    }

    std::vector<std::pair<Rat, Rat>> base(out.samples.begin(), out.samples.end() - 1);
    out.recovered = lagrange_interpolate(base);
    const auto& check = out.samples.back();
    if (out.recovered.eval(check.first) != check.second)
        throw ComputationError("interpolation consistency check failed: degree bound too small");
    return out;
}

ParametricValue parametric_resultant(const ParametricSystem& system, long degree_bound) {
    system.validate();
    return interpolate_parametric(
        [&system](const Rat& t) { return macaulay_resultant(system.specialize(t)); },
        degree_bound);
}

DivisibilityReport divisibility_check(const FormSystem& sub, const FormSystem& super,
                                      const std::vector<std::vector<Polynomial>>& cofactors) {
    sub.validate();
    super.validate();
    if (sub.nvars() != super.nvars())
        throw PreconditionError("systems live in different variable counts");
    std::size_t n = super.forms.size();
    if (cofactors.size() != n)
        throw PreconditionError("cofactor matrix row count mismatch");

    DivisibilityReport rep;
    rep.certificate_ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (cofactors[i].size() != sub.forms.size())
            throw PreconditionError("cofactor matrix column count mismatch");
        Polynomial acc(sub.nvars());
        for (std::size_t j = 0; j < sub.forms.size(); ++j)
            acc = acc + cofactors[i][j] * sub.forms[j];
        if (acc != super.forms[i]) rep.certificate_ok = false;
    }
    if (!rep.certificate_ok)
        throw PreconditionError("cofactor certificate fails to reproduce the g-system");

    rep.res_sub = macaulay_resultant(sub);
    rep.res_super = macaulay_resultant(super);
    if (rep.res_sub == 0) {
        rep.divides = (rep.res_super == 0);
    } else {
        rep.divides = true;
        rep.quotient_defined = true;
        rep.quotient = rep.res_super / rep.res_sub;
    }
    return rep;
}

}  // namespace elimkit
