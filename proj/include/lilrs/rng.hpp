#ifndef LILRS_RNG_HPP
#define LILRS_RNG_HPP

#include <cstdint>

namespace lilrs {

// Deterministic 64-bit generator (splitmix64). The standard <random>
// distributions are implementation-defined, which would break byte-identical
// reproducibility of simulation output across toolchains; this one is fully
// pinned down.
class Rng {
   public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n), n > 0, via rejection.
    uint64_t below(uint64_t n) {
        const uint64_t limit = ~0ULL - ~0ULL % n;
        uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

   private:
    uint64_t state_;
};

// Stable per-trial seed derivation: the trial outcome depends only on
// (master, point, trial), never on worker scheduling.
inline uint64_t derive_seed(uint64_t master, uint64_t point, uint64_t trial) {
    Rng mix(master ^ (point * 0x9e3779b97f4a7c15ULL) ^ (trial + 0x632be59bd9b4e019ULL));
    mix.next();
    return mix.next();
}

}  // namespace lilrs

#endif
