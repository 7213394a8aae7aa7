#pragma once

#include <optional>
#include <string>

#include "rainbow/coloring.hpp"
#include "rainbow/counting.hpp"
#include "rainbow/exact.hpp"

namespace rainbow {

enum class ColoringSource { parallel, file, search };
std::string to_string(ColoringSource source);

/// Full record of one uncommonness check: the exact rainbow count in the
/// base coloring, both forms of the criterion comparison, and the verdict.
/// The two comparisons a > criterion_rhs and mrb_lower > baseline are
/// algebraically the same; both are evaluated and must agree.
struct Certificate {
    int t = 0;
    int r = 0;
    int b = 0;
    ColoringSource source = ColoringSource::parallel;
    BigInt a;
    Rational criterion_rhs;
    Rational mrb_lower;
    Rational baseline;
    // Closed-form lower bound on a (informational; vacuous when negative).
    // Present only when t >= 4, where the bound is defined.
    std::optional<Rational> count_lower_bound;
    bool verdict_uncommon = false;
};

struct AuditReport {
    int t = 0;
    int r = 0;
    BigInt exact_non_rainbow;
    BigInt lemma_bound;
    bool bound_respected = false;
};

struct RecurrenceReport {
    int b = 0;
    int t = 0;
    int depth = 0;
    BigInt a;           // rainbow count of the base
    BigInt exact_count; // rainbow count of the materialized blow-up
    Rational bound;
    bool holds = false;
};

struct CertifyOptions {
    long long materialize_cap = 500;
    long long visit_budget = 100'000'000;
    int workers = 1;
};

/// Counts rainbow K_t in parallel_coloring(r) exactly and evaluates the
/// criterion with base b = r. The verdict comes from the exact count only,
/// never from bounds.
Certificate certify_uncommon(int t, int r, const CertifyOptions& options = {});

/// Same check against an arbitrary base coloring (palette = comparison r).
Certificate certify_with_base(const EdgeColoring& base, int t, ColoringSource source,
                              const CertifyOptions& options = {});

/// Smallest r in C(t,2)..r_max from which the positivity certificate holds
/// at every tested r up to r_max; nullopt if there is none.
std::optional<int> find_min_r_semifinal(int t, int r_max);

/// Materializes the depth-k blow-up of base, counts rainbow K_t exactly,
/// and compares against the closed-form lower bound.
RecurrenceReport verify_recurrence(const EdgeColoring& base, int t, int k,
                                   const CertifyOptions& options = {});

/// Exact non-rainbow K_t count in parallel_coloring(r) against the matching
/// upper bound (t = 4 uses the K_4 bound, t >= 5 the general one).
AuditReport audit_lemma_bounds(int t, int r, const CertifyOptions& options = {});

} // namespace rainbow
