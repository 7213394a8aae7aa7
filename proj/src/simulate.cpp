#include "rainbow/simulate.hpp"

#include <cmath>
#include <exception>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace rainbow {

namespace {

// splitmix64 finalizer; full-period scrambling of the sample index.
std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Unbiased draw from 0..bound-1 by rejection below 2^64 mod bound. The
// standard distribution adapters are implementation-defined, which would
// break the cross-platform determinism contract.
std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t x = gen();
        if (x >= threshold)
            return x % bound;
    }
}

} // namespace

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
    return mix(seed + (index + 1) * 0x9e3779b97f4a7c15ULL);
}

EdgeColoring sample_uniform_coloring(int n, int r, std::uint64_t seed) {
    if (n < 2)
        throw domain_error("vertex count must be >= 2, got " + std::to_string(n));
    if (r < 1)
        throw domain_error("palette size must be >= 1, got " + std::to_string(r));
    std::mt19937_64 gen(seed);
    std::vector<ColorId> colors(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (ColorId& c : colors)
        c = static_cast<ColorId>(1 + uniform_below(gen, static_cast<std::uint64_t>(r)));
    return EdgeColoring(n, r, std::move(colors));
}

SimulationReport estimate_rainbow_proportion(int n, int t, int r, long long samples,
                                             std::uint64_t seed, int workers) {
    if (samples < 1)
        throw domain_error("sample count must be >= 1, got " + std::to_string(samples));
    if (workers < 1)
        throw domain_error("worker count must be >= 1, got " + std::to_string(workers));
    if (t < 2 || t > n)
        throw domain_error("clique order must be in 2.." + std::to_string(n) + ", got t = " +
                           std::to_string(t));

    struct Totals {
        BigInt sum;
        BigInt sum_sq;
    };
    std::vector<Totals> per_worker(static_cast<std::size_t>(workers));
    std::vector<std::exception_ptr> failures(static_cast<std::size_t>(workers));

    auto work = [&](int w) {
        try {
            Totals totals;
            for (long long i = w; i < samples; i += workers) {
                const EdgeColoring sample =
                    sample_uniform_coloring(n, r, stream_seed(seed, static_cast<std::uint64_t>(i)));
                const BigInt rainbow = count_rainbow_complete(sample, t).rainbow;
                totals.sum += rainbow;
                totals.sum_sq += rainbow * rainbow;
            }
            per_worker[static_cast<std::size_t>(w)] = std::move(totals);
        } catch (...) {
            failures[static_cast<std::size_t>(w)] = std::current_exception();
        }
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            threads.emplace_back(work, w);
        for (std::thread& th : threads)
            th.join();
    }
    for (const std::exception_ptr& failure : failures)
        if (failure)
            std::rethrow_exception(failure);

    BigInt sum = 0;
    BigInt sum_sq = 0;
    for (const Totals& totals : per_worker) {
        sum += totals.sum;
        sum_sq += totals.sum_sq;
    }

    const BigInt subsets = binomial(n, t);
    SimulationReport report;
    report.n = n;
    report.t = t;
    report.r = r;
    report.samples = samples;
    report.seed = seed;
    report.baseline = baseline_proportion(r, static_cast<long long>(t) * (t - 1) / 2);
    report.mean_proportion = Rational(sum, subsets * samples).convert_to<double>();
    if (samples >= 2) {
        // Sample variance of the per-sample proportions, from exact totals:
        // (sum of squares - square of sum / s) / (T^2 (s-1)), then /s for
        // the standard error of the mean.
        const Rational variance = (Rational(sum_sq) - Rational(sum * sum, samples)) /
                                  Rational(subsets * subsets * (samples - 1));
        report.std_error = std::sqrt((variance / samples).convert_to<double>());
    }
    return report;
}

namespace {

// Rainbow t-subsets through the edge {u,v} under the current colors.
long long rainbow_through(const EdgeColoring& c, Vertex u, Vertex v, int t) {
    const int n = c.vertex_count();
    std::vector<Vertex> pool;
    pool.reserve(static_cast<std::size_t>(n) - 2);
    for (Vertex w = 0; w < n; ++w)
        if (w != u && w != v)
            pool.push_back(w);

    const int pick = t - 2;
    std::vector<int> idx(static_cast<std::size_t>(pick));
    for (int i = 0; i < pick; ++i)
        idx[static_cast<std::size_t>(i)] = i;

    std::vector<Vertex> members(static_cast<std::size_t>(t));
    members[0] = u;
    members[1] = v;
    long long count = 0;
    for (;;) {
        for (int i = 0; i < pick; ++i)
            members[static_cast<std::size_t>(i + 2)] = pool[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        if (is_rainbow(c, members))
            ++count;
        if (pick == 0)
            break;
        int i = pick - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == static_cast<int>(pool.size()) - pick + i)
            --i;
        if (i < 0)
            break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < pick; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return count;
}

} // namespace

std::pair<EdgeColoring, BigInt> hill_climb(const EdgeColoring& start, int t, long long max_steps,
                                           std::uint64_t seed) {
    (void)seed;
    if (max_steps < 0)
        throw domain_error("step limit must be >= 0, got " + std::to_string(max_steps));
    const int n = start.vertex_count();
    const int r = start.palette_size();
    if (t < 2 || t > n)
        throw domain_error("clique order must be in 2.." + std::to_string(n) + ", got t = " +
                           std::to_string(t));

    EdgeColoring current = start;
    BigInt count = count_rainbow_complete(current, t).rainbow;
    long long steps = 0;

    while (steps < max_steps) {
        bool improved = false;
        for (Vertex u = 0; u < n - 1 && !improved; ++u) {
            for (Vertex v = u + 1; v < n && !improved; ++v) {
                const ColorId old_color = current.color(u, v);
                const long long before = rainbow_through(current, u, v, t);
                for (ColorId candidate = 1; candidate <= r; ++candidate) {
                    if (candidate == old_color)
                        continue;
                    current.set_color(u, v, candidate);
                    const long long after = rainbow_through(current, u, v, t);
                    if (after > before) {
                        count += after - before;
                        ++steps;
                        improved = true;
                        break;
                    }
                    current.set_color(u, v, old_color);
                }
            }
        }
        if (!improved)
            break;
    }
    return {std::move(current), std::move(count)};
}

} // namespace rainbow
