#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace automlc {

/// splitmix64 step; used both as a seed scrambler and to derive child seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Deterministic child-seed derivation: mix(master, index) differs for every index
/// and never collides with the master stream in practice.
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t salt) {
    return splitmix64(master ^ splitmix64(salt + 0x633D5D4C0D3AD1A5ULL));
}

/// FNV-1a hash of a string tag, for deriving seeds from purpose labels.
inline std::uint64_t seed_tag(const char* tag) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (const char* p = tag; *p; ++p) {
        h ^= static_cast<unsigned char>(*p);
        h *= 0x100000001B3ULL;
    }
    return h;
}

inline std::uint64_t mix_seed(std::uint64_t master, const char* tag) {
    return mix_seed(master, seed_tag(tag));
}

/// mt19937_64 wrapper with portable distributions. The std:: distributions are
/// implementation-defined; these helpers keep sampled values identical across
/// standard libraries so that seeded runs replay everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(splitmix64(seed)) {}

    std::uint64_t next() { return gen_(); }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Unbiased uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t x, r;
        do {
            x = gen_();
            r = x % n;
        } while (x - r > std::uint64_t(-1) - (n - 1));
        return r;
    }

    /// Uniform integer in [lo, hi] inclusive.
    long long uniform_int(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (gen_() >> 63) != 0; }

    /// Standard normal via Box-Muller (deterministic across platforms).
    double normal() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    /// Fisher-Yates shuffle with our own uniform; std::shuffle is not portable.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 gen_;
};

} // namespace automlc
