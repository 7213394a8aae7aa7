#include "rainbow/certify.hpp"

namespace rainbow {

std::string to_string(ColoringSource source) {
    switch (source) {
    case ColoringSource::parallel: return "parallel";
    case ColoringSource::file: return "file";
    case ColoringSource::search: return "search";
    }
    throw internal_error("unknown coloring source");
}

namespace {

long long edges_of(int t) {
    return static_cast<long long>(t) * (t - 1) / 2;
}

Certificate build_certificate(const EdgeColoring& base, int t, ColoringSource source,
                              const CertifyOptions& options) {
    Certificate cert;
    cert.t = t;
    cert.r = base.palette_size();
    cert.b = base.vertex_count();
    cert.source = source;

    CountOptions counting;
    counting.visit_budget = options.visit_budget;
    counting.workers = options.workers;
    try {
        cert.a = count_rainbow_complete(base, t, counting).rainbow;
    } catch (const resource_error& e) {
        throw resource_error(std::string(e.what()) +
                             "; fall back to the closed-form bound (rainbow_count_lower_bound)");
    }

    cert.criterion_rhs = criterion_rhs(cert.b, t, cert.r);
    cert.mrb_lower = mrb_lower_bound(cert.a, cert.b, t);
    cert.baseline = baseline_proportion(cert.r, edges_of(t));
    if (t >= 4 && cert.r >= edges_of(t))
        cert.count_lower_bound = rainbow_count_lower_bound(t, cert.r);

    const bool by_count = Rational(cert.a) > cert.criterion_rhs;
    const bool by_proportion = cert.mrb_lower > cert.baseline;
    if (by_count != by_proportion)
        throw internal_error("criterion comparisons disagree: count form " +
                             std::string(by_count ? "holds" : "fails") + ", proportion form " +
                             std::string(by_proportion ? "holds" : "fails"));
    if (cert.a > binomial(cert.b, t))
        throw internal_error("rainbow count exceeds the number of t-subsets");
    cert.verdict_uncommon = by_count;
    return cert;
}

} // namespace

Certificate certify_uncommon(int t, int r, const CertifyOptions& options) {
    if (t < 3)
        throw domain_error("clique order must be >= 3, got t = " + std::to_string(t));
    if (r < edges_of(t))
        throw domain_error("palette must have at least t(t-1)/2 = " + std::to_string(edges_of(t)) +
                           " colors, got r = " + std::to_string(r));
    return build_certificate(parallel_coloring(r), t, ColoringSource::parallel, options);
}

Certificate certify_with_base(const EdgeColoring& base, int t, ColoringSource source,
                              const CertifyOptions& options) {
    if (t < 3)
        throw domain_error("clique order must be >= 3, got t = " + std::to_string(t));
    if (base.vertex_count() < t)
        throw domain_error("base must have at least t vertices");
    return build_certificate(base, t, source, options);
}

std::optional<int> find_min_r_semifinal(int t, int r_max) {
    if (t < 4)
        throw domain_error("certificate needs t >= 4, got t = " + std::to_string(t));
    const long long lo = edges_of(t);
    if (r_max < lo)
        throw domain_error("r_max must be >= t(t-1)/2, got " + std::to_string(r_max));
    std::optional<int> first;
    for (int r = static_cast<int>(lo); r <= r_max; ++r) {
        if (semifinal_holds(t, r)) {
            if (!first)
                first = r;
        } else {
            first.reset();
        }
    }
    return first;
}

RecurrenceReport verify_recurrence(const EdgeColoring& base, int t, int k,
                                   const CertifyOptions& options) {
    if (k < 1)
        throw domain_error("depth must be >= 1, got " + std::to_string(k));
    CountOptions counting;
    counting.visit_budget = options.visit_budget;
    counting.workers = options.workers;

    RecurrenceReport report;
    report.b = base.vertex_count();
    report.t = t;
    report.depth = k;
    report.a = count_rainbow_complete(base, t, counting).rainbow;

    const EdgeColoring blown = materialize(BlowupColoring(base, k), options.materialize_cap);
    report.exact_count = count_rainbow_complete(blown, t, counting).rainbow;
    report.bound = blowup_lower_bound(report.a, report.b, t, k);
    report.holds = Rational(report.exact_count) >= report.bound;
    return report;
}

AuditReport audit_lemma_bounds(int t, int r, const CertifyOptions& options) {
    if (t < 4)
        throw domain_error("lemma bounds need t >= 4, got t = " + std::to_string(t));
    if (t == 4 ? r < 6 : r < edges_of(t))
        throw domain_error("palette too small for the t = " + std::to_string(t) + " bound, got r = " +
                           std::to_string(r));
    CountOptions counting;
    counting.visit_budget = options.visit_budget;
    counting.workers = options.workers;

    AuditReport report;
    report.t = t;
    report.r = r;
    report.exact_non_rainbow = count_rainbow_complete(parallel_coloring(r), t, counting).non_rainbow;
    report.lemma_bound = t == 4 ? nonrainbow_bound_k4(r) : nonrainbow_bound_kt(r, t);
    report.bound_respected = report.exact_non_rainbow <= report.lemma_bound;
    return report;
}

} // namespace rainbow
