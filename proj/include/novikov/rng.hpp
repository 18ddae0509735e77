// Seeded deterministic randomness. mt19937_64 is fully specified by the
// standard and the bounded draw below avoids std::uniform_int_distribution,
// whose output is implementation-defined; identical seeds therefore produce
// identical streams on every platform.
#pragma once

#include <cstdint>
#include <random>

#include "novikov/field.hpp"

namespace novikov {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // uniform in [0, bound), bound >= 1; rejection sampling, no modulo bias
    std::uint64_t uniform(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t r;
        do {
            r = gen_();
        } while (r >= limit);
        return r % bound;
    }

    // integer in [lo, hi] inclusive
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(uniform(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // uniform residue over GF(p); small integer in [-3, 3] over Q
    Scalar scalar(const FieldDescriptor& f) {
        if (f.is_prime_field()) return Scalar::residue(f, uniform(f.modulus()));
        return Scalar::of(f, range(-3, 3));
    }

    Scalar nonzero_scalar(const FieldDescriptor& f) {
        Scalar s = scalar(f);
        while (s.is_zero()) s = scalar(f);
        return s;
    }

private:
    std::mt19937_64 gen_;
};

} // namespace novikov
