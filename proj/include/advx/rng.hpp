#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace advx {

// Stateless mixer used to derive independent child seeds from a parent seed.
inline uint64_t mix_seed(uint64_t seed, uint64_t stream) {
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic RNG. All samplers are built from the raw mt19937_64 output
// stream, which the standard specifies exactly, so sequences are identical
// across platforms and standard-library implementations.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next_u64() { return gen_(); }

    // Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n). n must be positive.
    uint64_t below(uint64_t n) { return next_u64() % n; }

    int index(size_t n) { return static_cast<int>(below(static_cast<uint64_t>(n))); }

    // Poisson sample by CDF inversion; adequate for the small means used here.
    int poisson(double mean) {
        double p = std::exp(-mean);
        double cdf = p;
        int k = 0;
        double u = uniform();
        while (u > cdf && k < 100000) {
            ++k;
            p *= mean / k;
            cdf += p;
        }
        return k;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = below(i);
            std::swap(v[i - 1], v[j]);
        }
    }

    // First k elements of a random permutation of [0, n).
    std::vector<int> sample_without_replacement(int n, int k) {
        std::vector<int> pool(n);
        for (int i = 0; i < n; ++i) pool[i] = i;
        if (k > n) k = n;
        for (int i = 0; i < k; ++i) {
            size_t j = i + below(static_cast<uint64_t>(n - i));
            std::swap(pool[i], pool[j]);
        }
        pool.resize(k);
        return pool;
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace advx
