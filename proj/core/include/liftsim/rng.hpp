#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "liftsim/types.hpp"

namespace liftsim {

// One seeded stream of randomness. Wraps a 64-bit Mersenne twister.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

    // Uniform in [0, n). n must be positive.
    std::size_t uniform(std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
    }

    double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }

    template <typename T>
    void shuffle(std::span<T> items) {
        std::shuffle(items.begin(), items.end(), engine_);
    }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        shuffle(std::span<T>(items));
    }

    // Partial Fisher-Yates: afterwards items[0..k) is a uniform random
    // k-subset of items in uniform random order. The whole range stays a
    // permutation of its input.
    template <typename T>
    void shuffle_prefix(std::span<T> items, std::size_t k) {
        const std::size_t n = items.size();
        if (k > n) k = n;
        for (std::size_t i = 0; i < k && i + 1 < n; ++i) {
            const std::size_t j = i + uniform(n - i);
            using std::swap;
            swap(items[i], items[j]);
        }
    }

    std::mt19937_64& engine() noexcept { return engine_; }

    bool operator==(const Rng&) const = default;

private:
    std::mt19937_64 engine_;
};

// SplitMix64 finalizer applied to (seed, index); decorrelates child streams.
std::uint64_t substream(std::uint64_t seed, std::uint64_t index) noexcept;

// Randomness for a single run: one scheduler stream (node order, Byzantine
// placement) plus one substream per node for everything the node itself
// decides.
class RunRng {
public:
    RunRng(std::uint64_t run_seed, std::size_t n_nodes);

    Rng& scheduler() noexcept { return scheduler_; }
    Rng& node(NodeId id) { return nodes_.at(id); }

    std::uint64_t run_seed() const noexcept { return run_seed_; }

private:
    std::uint64_t run_seed_;
    Rng scheduler_;
    std::vector<Rng> nodes_;
};

}  // namespace liftsim
