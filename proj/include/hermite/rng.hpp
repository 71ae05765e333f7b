#pragma once

#include <cstdint>

namespace hermite {

// Deterministic generator (splitmix64). Output is identical across
// platforms and compilers, which keeps seeded reports byte-stable;
// the standard <random> distributions do not guarantee that.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    // Uniform value in [lo, hi], inclusive.
    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1u) != 0; }

private:
    std::uint64_t state_;
};

} // namespace hermite
