#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace elimkit {

// Exact unbounded rationals. mpq_class canonical form is lowest terms with
// positive denominator, which is exactly the representation contract here.
using Int = mpz_class;
using Rat = mpq_class;

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when an input violates an operation's precondition.
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

// Raised when a computation cannot proceed (degenerate data, failed retries).
class ComputationError : public Error {
public:
    explicit ComputationError(const std::string& msg) : Error(msg) {}
};

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e < 0) throw ComputationError("zero raised to a negative power");
        return Rat(0);
    }
    Rat r;
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), a);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), a);
    if (e < 0) mpq_inv(r.get_mpq_t(), r.get_mpq_t());
    // base canonical implies base^e canonical, but keep the invariant airtight
    r.canonicalize();
    return r;
}

// Exact e-th root of a rational, when one exists over Q.
inline std::optional<Rat> rat_root(const Rat& v, long e) {
    if (e <= 0) throw PreconditionError("root index must be positive");
    if (e == 1) return v;
    if (v == 0) return Rat(0);
    if (v < 0 && e % 2 == 0) return std::nullopt;
    Int num = v.get_num();
    Int den = v.get_den();
    bool neg = num < 0;
    if (neg) num = -num;
    Int rn, rd;
    bool exact_n = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(e)) != 0;
    bool exact_d = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(e)) != 0;
    if (!exact_n || !exact_d) return std::nullopt;
    Rat r(neg ? Int(-rn) : rn, rd);
    r.canonicalize();
    return r;
}

// Serialized as "p" or "p/q"; this is the JSON wire format for rationals.
inline std::string rat_str(const Rat& v) { return v.get_str(); }

inline bool is_integer(const Rat& v) { return v.get_den() == 1; }

}  // namespace elimkit
