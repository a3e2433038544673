#include "elimkit/discriminant.hpp"

namespace elimkit {

Int a_constant(int n, int d) {
    if (n < 0 || d < 1) throw PreconditionError("a_constant: need n >= 0, d >= 1");
    Int num = int_pow(Int(d - 1), static_cast<unsigned long>(n + 1));
    Int sign = (n + 1) % 2 == 0 ? 1 : -1;
    num -= sign;
    Int q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), Int(d).get_mpz_t());
    return q;
}

namespace {

bool has_integer_coeffs(const Polynomial& f) {
    for (const auto& [e, c] : f.terms())
        if (!is_integer(c)) return false;
    return true;
}

}  // namespace

DiscriminantResult discriminant(const Polynomial& f) {
    int nv = f.nvars();
    if (nv < 1) throw PreconditionError("discriminant: need at least one variable");
    auto deg = f.degree();
    if (!deg) throw PreconditionError("discriminant: zero polynomial");
    int d = *deg;
    if (d < 2) throw PreconditionError("discriminant: need degree >= 2");
    if (!f.is_homogeneous()) throw PreconditionError("discriminant: form must be homogeneous");

    FormSystem sys;
    for (int i = 0; i < nv; ++i) sys.forms.push_back(partial_derivative(f, i));
    sys.degrees.assign(static_cast<size_t>(nv), d - 1);
    Rat res = macaulay_resultant(sys);

    DiscriminantResult out;
    out.degree_d = d;
    out.nvars = nv;
    out.res_partials = res;
    out.divisor_constant = int_pow(Int(d), a_constant(nv - 1, d).get_ui());
    if (has_integer_coeffs(f) && res != 0) {
        if (!is_integer(res))
            throw ComputationError("discriminant: resultant of partials not integral");
        Int r = res.get_num();
        Int q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), r.get_mpz_t(),
                    out.divisor_constant.get_mpz_t());
        if (rem != 0)
            throw ComputationError("discriminant: normalization constant does not divide");
        out.value = Rat(q);
    } else {
        out.value = res / Rat(out.divisor_constant);
        out.value.canonicalize();
    }
    return out;
}

bool smoothness_test(const Polynomial& f) { return discriminant(f).value != 0; }

EulerFactorizationReport euler_factorization_check(const Polynomial& f) {
    int nv = f.nvars();
    if (nv < 2) throw PreconditionError("euler_factorization_check: need >= 2 variables");
    auto deg = f.degree();
    if (!deg || *deg < 2 || !f.is_homogeneous())
        throw PreconditionError("euler_factorization_check: need a homogeneous form, degree >= 2");
    int d = *deg;

    EulerFactorizationReport rep;
    Polynomial fbar = drop_variable(substitute_value(f, 0, Rat(0)), 0);
    auto bdeg = fbar.degree();
    if (!bdeg || *bdeg != d) {
        rep.degenerate_slice = true;
        return rep;
    }

    FormSystem sys;
    for (int i = 1; i < nv; ++i) sys.forms.push_back(partial_derivative(f, i));
    sys.forms.push_back(f);
    sys.degrees.assign(static_cast<size_t>(nv - 1), d - 1);
    sys.degrees.push_back(d);
    rep.lhs = macaulay_resultant(sys);
    rep.disc_f = discriminant(f).value;
    rep.disc_fbar = discriminant(fbar).value;
    rep.holds = (rep.lhs == rep.disc_f * rep.disc_fbar);
    rep.checked = true;
    return rep;
}

long disc_weight_degree(int n, int d, WeightRule rule) {
    if (n < 0 || d < 2) throw PreconditionError("disc_weight_degree: need n >= 0, d >= 2");
    long base = d;
    for (int i = 0; i < n; ++i) base *= (d - 1);
    return rule == WeightRule::coordinate ? base : static_cast<long>(n) * base;
}

long disc_degree(int n, int d) {
    if (n < 0 || d < 2) throw PreconditionError("disc_degree: need n >= 0, d >= 2");
    long p = 1;
    for (int i = 0; i < n; ++i) p *= (d - 1);
    return static_cast<long>(n + 1) * p;
}

ParametricValue parametric_discriminant(const Polynomial& f_with_param, long degree_bound) {
    int nv = f_with_param.nvars();
    if (nv < 2) throw PreconditionError("parametric_discriminant: need >= 2 variables");
    int param = nv - 1;
    auto eval = [&](const Rat& t) {
        Polynomial ft = drop_variable(substitute_value(f_with_param, param, t), param);
        return discriminant(ft).value;
    };
    return interpolate_parametric(eval, degree_bound);
}

}  // namespace elimkit
