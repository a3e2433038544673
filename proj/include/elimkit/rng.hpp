#pragma once

#include <cstdint>
#include <random>

namespace elimkit {

// Deterministic seeded generator. std::uniform_int_distribution is
// implementation-defined, so ranges are mapped by hand to keep golden values
// and byte-identical CLI output stable across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform-ish integer in [lo, hi]; the modulo bias is irrelevant for
    // test-instance generation.
    long int_in(long lo, long hi) {
        if (hi < lo) return lo;
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

    // Nonzero integer in [lo, hi] (range must contain one).
    long nonzero_in(long lo, long hi) {
        for (;;) {
            long v = int_in(lo, hi);
            if (v != 0) return v;
        }
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace elimkit
