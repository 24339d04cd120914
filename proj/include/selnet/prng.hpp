#pragma once

#include <cstdint>

#include "selnet/rational.hpp"

namespace selnet {

// splitmix64: tiny deterministic generator with identical output on every
// platform, which the byte-identical report requirement depends on.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % bound);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

    long int_in(long lo, long hi) { // inclusive range
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    Rational rational_in_unit(std::uint64_t denominator_bound = 1u << 20) {
        std::uint64_t den = 1 + below(denominator_bound);
        std::uint64_t num = below(den + 1);
        Rational q(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
        q.canonicalize();
        return q;
    }

    SplitMix64 fork(std::uint64_t salt) {
        return SplitMix64(next() ^ (salt * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL));
    }

private:
    std::uint64_t state_;
};

} // namespace selnet
