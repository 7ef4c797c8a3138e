#pragma once

#include <cstdint>
#include <random>

namespace pidisc {

// Seeded generator used by every randomized subroutine. std::uniform_int_distribution
// is implementation-defined, so draws go through engine output directly to keep
// reports byte-identical across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : eng_(seed) {}

    std::uint64_t u64() { return eng_(); }

    // uniform-ish value in [0, n); n > 0
    std::uint64_t below(std::uint64_t n) { return eng_() % n; }

    // value in [lo, hi] inclusive
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (eng_() & 1u) != 0; }

private:
    std::mt19937_64 eng_;
};

} // namespace pidisc
