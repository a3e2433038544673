#pragma once

#include "elimkit/polynomial.hpp"

namespace elimkit {

using IntVec = std::vector<Int>;

struct IntMat {
    int n = 0;  // square, row-major
    std::vector<Int> a;

    static IntMat identity(int n);
    Int& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
    IntMat transposed() const;
    void swap_rows(int i, int j);
    void swap_columns(int i, int j);
};

IntMat mat_mul(const IntMat& lhs, const IntMat& rhs);

struct UnimodularPair {
    IntMat m;    // W
    IntMat inv;  // W^{-1}
    Int gcd;     // W v = gcd * e0
};

// Elementary-row reduction of a nonzero integer vector: W v = g e0, g = gcd(v) > 0.
UnimodularPair clear_to_first(const IntVec& v);

struct UnimodularChange {
    IntMat u;
    IntMat uinv;
};

// U e0 = v for a primitive integer vector v.
UnimodularChange unimodular_with_first_column(const IntVec& v);

// c^T V = g e_last^T with g = gcd(c) > 0.
UnimodularChange unimodular_sending_covector_last(const IntVec& c);

// f(U y): substitute each variable by the corresponding row linear form.
Polynomial apply_matrix(const Polynomial& f, const IntMat& u);

// Scale a rational point to a primitive integer vector, first nonzero entry positive.
IntVec primitive_integer_lift(const LinearPoint& p);

}  // namespace elimkit
