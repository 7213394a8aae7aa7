#pragma once

#include <cstdint>
#include <utility>

#include "rainbow/coloring.hpp"
#include "rainbow/counting.hpp"
#include "rainbow/exact.hpp"

namespace rainbow {

struct SimulationReport {
    int n = 0;
    int t = 0;
    int r = 0;
    long long samples = 0;
    std::uint64_t seed = 0;
    double mean_proportion = 0.0;
    double std_error = 0.0;
    Rational baseline;
};

/// Derives the engine seed of one sample stream from the run seed and the
/// sample index, so sample i is the same no matter which worker draws it.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);

/// Colors every edge independently and uniformly from 1..r, in edge-table
/// index order, from a deterministic seeded generator. Surjectivity onto
/// the palette is not enforced.
EdgeColoring sample_uniform_coloring(int n, int r, std::uint64_t seed);

/// Mean and standard error of the rainbow K_t proportion over independent
/// uniform samples. Per-sample counts are aggregated as exact integers, so
/// the report depends only on (n, t, r, samples, seed), not on workers.
SimulationReport estimate_rainbow_proportion(int n, int t, int r, long long samples,
                                             std::uint64_t seed, int workers = 1);

/// First-improvement local search: scan edges in index order and colors in
/// 1..r order, apply the first single-edge recolor that strictly increases
/// the rainbow K_t count, and rescan; stop at a local optimum or after
/// max_steps applied moves. The scan is fixed, so the result is
/// deterministic; seed is recorded for provenance and unused by the scan.
std::pair<EdgeColoring, BigInt> hill_climb(const EdgeColoring& start, int t,
                                           long long max_steps, std::uint64_t seed);

} // namespace rainbow
