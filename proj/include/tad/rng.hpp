#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string_view>
#include <vector>

namespace tad {

// Deterministic random source. All randomness in the toolkit flows from one
// master seed through named derivations (see derive_seed), so a pipeline run
// is reproducible from its config alone. Floating-point draws are generated
// from raw mt19937_64 output rather than <random> distributions, whose
// sequences differ between standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed), seed_(seed) {}

    // Stage/stream derivation: mixes a tag (and optional index) into the
    // master seed with FNV-1a followed by a splitmix64 finalizer.
    static std::uint64_t derive_seed(std::uint64_t master, std::string_view tag,
                                     std::uint64_t index = 0);

    Rng fork(std::string_view tag, std::uint64_t index = 0) const {
        return Rng(derive_seed(seed_, tag, index));
    }

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 1) with 53 bits of mantissa.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Unbiased integer in [0, n) via rejection sampling.
    std::uint64_t uniform_index(std::uint64_t n);

    // Standard normal via Box-Muller (cached second draw).
    double normal();

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        // Fisher-Yates with our own bounded draw, for cross-platform stability.
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(uniform_index(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // k distinct indices drawn from [0, n), in draw order.
    std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k);

private:
    std::mt19937_64 gen_;
    std::uint64_t seed_ = 0;
    bool has_cached_normal_ = false;
    double cached_normal_ = 0.0;
};

inline std::uint64_t Rng::derive_seed(std::uint64_t master, std::string_view tag,
                                      std::uint64_t index) {
    std::uint64_t h = 14695981039346656037ULL;  // FNV offset basis
    auto mix_byte = [&h](unsigned char b) {
        h ^= b;
        h *= 1099511628211ULL;  // FNV prime
    };
    for (int i = 0; i < 8; ++i) mix_byte(static_cast<unsigned char>(master >> (8 * i)));
    for (char c : tag) mix_byte(static_cast<unsigned char>(c));
    for (int i = 0; i < 8; ++i) mix_byte(static_cast<unsigned char>(index >> (8 * i)));
    // splitmix64 finalizer
    h += 0x9e3779b97f4a7c15ULL;
    h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
    h = (h ^ (h >> 27)) * 0x94d049bb133111ebULL;
    return h ^ (h >> 31);
}

inline std::uint64_t Rng::uniform_index(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
        x = gen_();
    } while (x >= limit);
    return x % n;
}

inline double Rng::normal() {
    if (has_cached_normal_) {
        has_cached_normal_ = false;
        return cached_normal_;
    }
    double u1;
    do {
        u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    cached_normal_ = r * std::sin(theta);
    has_cached_normal_ = true;
    return r * std::cos(theta);
}

inline std::vector<std::size_t> Rng::sample_without_replacement(std::size_t n, std::size_t k) {
    if (k > n) k = n;
    // Partial Fisher-Yates over an index pool.
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    std::vector<std::size_t> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(uniform_index(n - i));
        std::swap(pool[i], pool[j]);
        out.push_back(pool[i]);
    }
    return out;
}

}  // namespace tad
