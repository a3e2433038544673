#include "elimkit/grading.hpp"

#include <algorithm>

namespace elimkit {

long GradingSpec::weight(const Exponents& e) const {
    switch (kind) {
        case Kind::standard:
            return total_degree(e);
        case Kind::coordinate_weight:
            return e.at(k);
        case Kind::co_weight:
            return d - e.at(k);
        case Kind::zariski:
            return std::max(0, e.at(k) - d + s);
    }
    throw Error("unreachable grading kind");
}

std::optional<long> homogeneous_degree(const Polynomial& f, const GradingSpec& g) {
    if (f.is_zero())
        throw PreconditionError("the zero polynomial has no degree (sentinel case)");
    std::optional<long> w;
    for (const auto& [e, c] : f.terms()) {
        long tw = g.weight(e);
        if (!w)
            w = tw;
        else if (*w != tw)
            return std::nullopt;
    }
    return w;
}

long weighted_valuation(const Polynomial& f, const GradingSpec& g) {
    if (f.is_zero())
        throw PreconditionError("the zero polynomial has no valuation (sentinel case)");
    long v = 0;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        long tw = g.weight(e);
        v = first ? tw : std::min(v, tw);
        first = false;
    }
    return v;
}

long weighted_top(const Polynomial& f, const GradingSpec& g) {
    if (f.is_zero())
        throw PreconditionError("the zero polynomial has no top weight (sentinel case)");
    long v = 0;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        long tw = g.weight(e);
        v = first ? tw : std::max(v, tw);
        first = false;
    }
    return v;
}

}  // namespace elimkit
