#include "elimkit/unimodular.hpp"

namespace elimkit {

IntMat IntMat::identity(int n) {
    IntMat m;
    m.n = n;
    m.a.assign(static_cast<size_t>(n) * n, Int(0));
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::transposed() const {
    IntMat t;
    t.n = n;
    t.a.assign(a.size(), Int(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t.at(j, i) = at(i, j);
    return t;
}

void IntMat::swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < n; ++k) std::swap(at(i, k), at(j, k));
}

void IntMat::swap_columns(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < n; ++k) std::swap(at(k, i), at(k, j));
}

IntMat mat_mul(const IntMat& lhs, const IntMat& rhs) {
    if (lhs.n != rhs.n) throw PreconditionError("mat_mul: size mismatch");
    IntMat out;
    out.n = lhs.n;
    out.a.assign(lhs.a.size(), Int(0));
    for (int i = 0; i < lhs.n; ++i)
        for (int k = 0; k < lhs.n; ++k) {
            if (lhs.at(i, k) == 0) continue;
            for (int j = 0; j < lhs.n; ++j) out.at(i, j) += lhs.at(i, k) * rhs.at(k, j);
        }
    return out;
}

UnimodularPair clear_to_first(const IntVec& v0) {
    int n = static_cast<int>(v0.size());
    if (n == 0) throw PreconditionError("clear_to_first: empty vector");
    bool nonzero = false;
    for (const auto& x : v0)
        if (x != 0) nonzero = true;
    if (!nonzero) throw PreconditionError("clear_to_first: zero vector");

    IntVec v = v0;
    IntMat w = IntMat::identity(n);
    IntMat winv = IntMat::identity(n);
    for (int i = 1; i < n; ++i) {
        if (v[i] == 0) continue;
        Int g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), v[0].get_mpz_t(),
                   v[i].get_mpz_t());
        Int p, q;
        mpz_divexact(p.get_mpz_t(), v[0].get_mpz_t(), g.get_mpz_t());
        mpz_divexact(q.get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
        // rows of w: (r0, ri) <- (s r0 + t ri, -q r0 + p ri), determinant 1
        for (int j = 0; j < n; ++j) {
            Int r0 = w.at(0, j), ri = w.at(i, j);
            w.at(0, j) = s * r0 + t * ri;
            w.at(i, j) = p * ri - q * r0;
        }
        // columns of winv pick up the inverse [[p, -t], [q, s]]
        for (int j = 0; j < n; ++j) {
            Int c0 = winv.at(j, 0), ci = winv.at(j, i);
            winv.at(j, 0) = p * c0 + q * ci;
            winv.at(j, i) = s * ci - t * c0;
        }
        v[0] = g;
        v[i] = 0;
    }
    if (v[0] < 0) {
        for (int j = 0; j < n; ++j) {
            w.at(0, j) = -w.at(0, j);
            winv.at(j, 0) = -winv.at(j, 0);
        }
        v[0] = -v[0];
    }
    return {std::move(w), std::move(winv), v[0]};
}

UnimodularChange unimodular_with_first_column(const IntVec& v) {
    UnimodularPair p = clear_to_first(v);
    if (p.gcd != 1) throw PreconditionError("unimodular_with_first_column: vector not primitive");
    return {std::move(p.inv), std::move(p.m)};
}

UnimodularChange unimodular_sending_covector_last(const IntVec& c) {
    UnimodularPair p = clear_to_first(c);
    int n = static_cast<int>(c.size());
    IntMat v = p.m.transposed();
    v.swap_columns(0, n - 1);
    IntMat vinv = p.inv.transposed();
    vinv.swap_rows(0, n - 1);
    return {std::move(v), std::move(vinv)};
}

Polynomial apply_matrix(const Polynomial& f, const IntMat& u) {
    if (f.nvars() != u.n) throw PreconditionError("apply_matrix: size mismatch");
    int n = u.n;
    std::vector<Polynomial> rows;
    rows.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        Polynomial lin = Polynomial::zero(n);
        for (int j = 0; j < n; ++j)
            if (u.at(i, j) != 0) lin = lin + Polynomial::variable(n, j) * Rat(u.at(i, j));
        rows.push_back(std::move(lin));
    }
    Polynomial out = Polynomial::zero(n);
    for (const auto& [e, c] : f.terms()) {
        Polynomial term = Polynomial::constant(n, c);
        for (int i = 0; i < n; ++i)
            if (e[static_cast<size_t>(i)] > 0)
                term = term * rows[static_cast<size_t>(i)].pow(e[static_cast<size_t>(i)]);
        out = out + term;
    }
    return out;
}

IntVec primitive_integer_lift(const LinearPoint& p) {
    if (p.empty()) throw PreconditionError("primitive_integer_lift: empty point");
    Int lcm = 1;
    for (const auto& x : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
    IntVec v(p.size());
    Int g = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        Rat s = p[i] * Rat(lcm);
        s.canonicalize();
        v[i] = s.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[i].get_mpz_t());
    }
    if (g == 0) throw PreconditionError("primitive_integer_lift: zero point");
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    for (const auto& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : v) y = -y;
        break;
    }
    return v;
}

}  // namespace elimkit
