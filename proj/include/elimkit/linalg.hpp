#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "elimkit/rational.hpp"

namespace elimkit {

// Dense row-major rational matrix, only used as determinant input.
class MatQ {
public:
    MatQ(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, Rat(0)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

// Exact determinant. Rows are scaled to integers, rows/columns with a single
// nonzero entry are peeled off by cofactor expansion (Macaulay matrices of
// monomial systems collapse entirely in this phase), and the remaining dense
// core goes through fraction-free Bareiss elimination.
Rat det(const MatQ& m);

// Dense univariate polynomial over Q; c[i] is the coefficient of t^i.
class Poly1 {
public:
    Poly1() = default;
    explicit Poly1(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    int valuation() const;                                          // -1 for zero
    Rat coeff(int i) const {
        return (i < 0 || i >= static_cast<int>(c_.size())) ? Rat(0) : c_[i];
    }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat eval(const Rat& t) const;

    bool operator==(const Poly1& o) const { return c_ == o.c_; }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

// Exact Lagrange interpolation through distinct nodes.
Poly1 lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& samples);

// Worker cap: ELIMKIT_THREADS when set, else hardware concurrency.
int thread_count();

// Evaluates fn(0..n-1) with results assembled in index order, so output is
// deterministic regardless of scheduling. Exceptions are rethrown (first
// index wins).
std::vector<Rat> parallel_map(int n, const std::function<Rat(int)>& fn);

}  // namespace elimkit
