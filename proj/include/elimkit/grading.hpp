#pragma once

#include <optional>

#include "elimkit/polynomial.hpp"

namespace elimkit {

// Weight rules on exponent vectors. `standard` weighs a term by its total
// degree; `coordinate_weight` by the exponent of x_k; `co_weight` by d minus
// that exponent; `zariski` by max(0, alpha_k - d + s), which is zero exactly
// on the slots kept by a truncation of order d - s.
struct GradingSpec {
    enum class Kind { standard, coordinate_weight, co_weight, zariski };

    Kind kind = Kind::standard;
    int k = 0;  // distinguished variable
    int s = 0;  // truncation order (zariski)
    int d = 0;  // form degree (co_weight, zariski)

    static GradingSpec standard() { return {Kind::standard, 0, 0, 0}; }
    static GradingSpec coordinate_weight(int k) { return {Kind::coordinate_weight, k, 0, 0}; }
    static GradingSpec co_weight(int k, int d) { return {Kind::co_weight, k, 0, d}; }
    static GradingSpec zariski(int s, int k, int d) { return {Kind::zariski, k, s, d}; }

    long weight(const Exponents& e) const;
};

// Returns the common weight of all terms, or nullopt when f is not
// homogeneous for the grading. The zero polynomial has no degree: error.
std::optional<long> homogeneous_degree(const Polynomial& f, const GradingSpec& g);

long weighted_valuation(const Polynomial& f, const GradingSpec& g);  // min term weight
long weighted_top(const Polynomial& f, const GradingSpec& g);        // max term weight

}  // namespace elimkit
