#pragma once

#include <cstdint>
#include <vector>

namespace lf {

// Deterministic seedable PRNG (xoshiro256++ seeded via splitmix64).
// Identical seeds produce identical draw sequences on every platform;
// no std::*_distribution is used anywhere since those are
// implementation-defined.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed);

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64();

    // uniform in [0,1)
    double uniform();
    // uniform in [lo,hi)
    double uniform(double lo, double hi);
    // standard normal via Box-Muller (second value cached)
    double normal();
    // uniform integer in [0,n), n >= 1
    std::uint64_t uniform_index(std::uint64_t n);

    // Derive an independent child stream; forking never advances this stream.
    RandomSource fork(std::uint64_t child) const;

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform_index(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::uint64_t seed_;
    std::uint64_t state_[4];
    bool has_spare_ = false;
    double spare_ = 0.0;
};

std::uint64_t splitmix64(std::uint64_t& x);

// Stable 64-bit hash, used for seed derivation and content hashing.
std::uint64_t hash_bytes(const void* data, std::size_t n, std::uint64_t seed = 0xcbf29ce484222325ULL);

} // namespace lf
