#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "kst/bigraph.hpp"
#include "kst/solver.hpp"

namespace kst {

// Seeded deterministic RNG. All bounded draws go through explicit mappings
// of raw mt19937_64 output, so streams are reproducible across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform in [0, n), n >= 1, via rejection sampling.
    int below(int n) {
        std::uint64_t un = static_cast<std::uint64_t>(n);
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % un;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return static_cast<int>(x % un);
    }

    int in_range(int lo, int hi) { return lo + below(hi - lo + 1); }

    bool bernoulli(double p) {
        if (p >= 1.0) return true;
        if (p <= 0.0) return false;
        return static_cast<double>(next_u64()) < p * 18446744073709551616.0;
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
            std::swap(v[i], v[below(i + 1)]);
    }

private:
    std::mt19937_64 eng_;
};

// Each of the n_a * n_b potential edges included independently.
BipartiteGraph random_bipartite(int n_a, int n_b, double density, std::uint64_t seed);

// Seeded random balanced graph raised to a minimum-degree floor: edges are
// added greedily (lowest-degree vertex, A-class first on ties, to a uniformly
// chosen non-neighbor) until min degree >= floor. Errors when floor > n.
BipartiteGraph random_with_min_degree(int n, double density, int floor, std::uint64_t seed);

// Structured extremal YES instances: two near-complete crossing dense pairs
// with prescribed class sizes for the given parity of k, sparse diagonal
// blocks supplying the minimum degree, and optional seeded noise.
//   even k: four blocks of size n/2 (oversized variant shifts one A-block by
//           one and adds a star supply; s must be 1 there);
//   odd k:  blocks of sizes l(s+t)+s and l(s+t)+t with regular diagonal
//           shifts; the specials variant carves one vertex per class down to
//           an intermediate degree.
BipartiteGraph structured_even_instance(int s, int t, int k, std::uint64_t seed, bool oversized);
BipartiteGraph structured_odd_instance(int s, int t, int k, std::uint64_t seed, bool with_specials);

// Star-lemma test instance: delta superimposed random perfect matchings on
// m + m vertices, so both side degrees equal delta exactly.
BipartiteGraph star_instance(int m, int delta, std::uint64_t seed);

struct SweepParams {
    int s = 1, t = 2;
    int k_min = 2, k_max = 2;
    int trials = 0;
    std::uint64_t seed = 0;
    bool timing = false;  // default: elapsed_ms column stays 0 for reproducibility
    SearchBudget budget;
};

struct SweepRow {
    int s, t, k;
    std::string instance_kind;
    std::uint64_t seed;
    int min_degree;
    int threshold;
    std::string verdict;
    long long elapsed_ms;
};

// For each k: the matching lower-bound construction (expected NoFactor) and
// `trials` seeded random graphs with min degree at least the threshold
// (expected Found), decided by the exact solver under the given budget.
std::vector<SweepRow> run_sweep(const SweepParams& p);
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace kst
