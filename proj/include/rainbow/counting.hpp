#pragma once

#include <span>

#include "rainbow/coloring.hpp"
#include "rainbow/exact.hpp"

namespace rainbow {

struct CountResult {
    int t = 0;
    BigInt total;   // C(n, t)
    BigInt rainbow;
    BigInt non_rainbow;
};

struct CountOptions {
    // Partial-subset visits allowed before the enumeration aborts with a
    // resource_error.
    long long visit_budget = 100'000'000;
    // The subset space is partitioned by smallest member, round-robin over
    // this many workers; totals are identical for every value.
    int workers = 1;
};

/// True iff the induced edge colors on the given vertices are pairwise
/// distinct. Sets of fewer than two vertices have no edges and count as
/// rainbow.
bool is_rainbow(const EdgeColoring& coloring, std::span<const Vertex> vertices);

/// Exact rainbow/non-rainbow counts over all t-subsets. Subsets are grown
/// in lexicographic order and a branch is abandoned as soon as an induced
/// color repeats; the result does not depend on the order or partition.
CountResult count_rainbow_complete(const EdgeColoring& coloring, int t,
                                   const CountOptions& options = {});

/// rainbow / C(n,t) in lowest terms.
Rational rainbow_proportion(const EdgeColoring& coloring, int t,
                            const CountOptions& options = {});

} // namespace rainbow
