#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace besent {

// Deterministic random source. All sampling helpers are implemented by hand on
// top of std::mt19937_64 (whose output sequence is fixed by the standard), so
// results are bit-identical across platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform double in [0, 1), 53 random bits.
    double next_unit() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double next_uniform(double lo, double hi) {
        return lo + (hi - lo) * next_unit();
    }

    // Uniform index in [0, n). n must be > 0. Unbiased via rejection.
    std::size_t next_index(std::size_t n);

    // Fisher-Yates; std::shuffle is not portable across implementations.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = next_index(i);
            std::swap(v[i - 1], v[j]);
        }
    }

    // k distinct indices from [0, n), ascending order. k must be <= n.
    std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k);

    // Independent stream seed derived from (seed, stream id); splitmix64 mixing.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

private:
    std::mt19937_64 engine_;
};

}  // namespace besent
