#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "elimkit/rational.hpp"

namespace elimkit {

// Exponent vector alpha = (a0,...,a_{n-1}), one entry per variable.
using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

// Graded lexicographic order with x0 > x1 > ... : compare total degree first,
// then the exponent vectors lexicographically. Used ascending as the map
// order; canonical printing iterates it in reverse.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Invariants: no stored zero coefficient, every key has length nvars.
class Polynomial {
public:
    using TermMap = std::map<Exponents, Rat, GrlexLess>;

    explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

    static Polynomial zero(int nvars) { return Polynomial(nvars); }
    static Polynomial constant(int nvars, const Rat& c);
    static Polynomial variable(int nvars, int i);
    static Polynomial monomial(int nvars, const Exponents& e, const Rat& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    Rat coeff(const Exponents& e) const;
    void add_term(const Exponents& e, const Rat& c);  // accumulates, prunes zeros

    // Total degree; the zero polynomial has no degree (sentinel nullopt).
    std::optional<int> degree() const;
    // Degree in one variable (max exponent); nullopt for the zero polynomial.
    std::optional<int> degree_in(int var) const;
    // Least exponent of `var` over all terms; nullopt for zero.
    std::optional<int> valuation_in(int var) const;

    bool is_homogeneous() const;
    // True when zero or homogeneous of exactly degree d.
    bool is_homogeneous_of_degree(int d) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rat& c) const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial pow(int e) const;

private:
    void check_same_space(const Polynomial& o) const;

    int nvars_;
    TermMap terms_;
};

inline Polynomial operator*(const Rat& c, const Polynomial& f) { return f * c; }

Polynomial partial_derivative(const Polynomial& f, int i);

// Exact substitution x_i -> value (value in the same variable space).
Polynomial substitute_variable(const Polynomial& f, int i, const Polynomial& value);
Polynomial substitute_value(const Polynomial& f, int i, const Rat& value);

Rat evaluate(const Polynomial& f, const std::vector<Rat>& point);

// Remove variable i from the ambient space; f must not depend on it.
Polynomial drop_variable(const Polynomial& f, int i);
// Grow the ambient space by one unused variable inserted at index i.
Polynomial insert_variable(const Polynomial& f, int i);

// A lift of a projective point: nvars exact rational coordinates.
using LinearPoint = std::vector<Rat>;

bool projectively_equal(const LinearPoint& a, const LinearPoint& b);

// Polar form D_a f = sum_i a_i * d f / d x_i.
Polynomial polar(const Polynomial& f, const LinearPoint& a);
// k-fold iterate of the polar operator.
Polynomial polar_power(const Polynomial& f, const LinearPoint& a, int k);

// f(alpha*a + beta*b) as a binary form in (alpha, beta).
Polynomial restrict_to_line(const Polynomial& f, const LinearPoint& a, const LinearPoint& b);

// Intersection multiplicity of the line <a,b> with V(f) at a. A line lying
// inside V(f) is an explicit outcome, not a large integer.
struct LineMultiplicity {
    bool line_contained = false;
    int multiplicity = 0;  // meaningful only when !line_contained
};
LineMultiplicity line_intersection_multiplicity(const Polynomial& f, const LinearPoint& a,
                                                const LinearPoint& b);

// Determinant of the matrix of second partials, computed exactly by cofactor
// expansion over the polynomial ring.
Polynomial hessian(const Polynomial& f);

// ---- text format -------------------------------------------------------
// Terms joined by + / -; a term is [coeff][*]var^exp[*var^exp...]; coeff is an
// integer or p/q; variables are x0, x1, ... Example: 3*x0^2*x1 - 1/2*x2^3.

class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& expected, const std::string& msg)
        : Error(msg), offset_(offset), expected_(expected) {}
    std::size_t offset() const { return offset_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

Polynomial parse_polynomial(const std::string& text, int nvars);
std::string to_string(const Polynomial& f);

}  // namespace elimkit
