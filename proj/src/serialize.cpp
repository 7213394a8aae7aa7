#include "rainbow/serialize.hpp"

namespace rainbow {

std::string to_decimal(const BigInt& value) {
    return value.str();
}

nlohmann::json to_json(const Rational& value) {
    return {{"num", numerator(value).str()}, {"den", denominator(value).str()}};
}

nlohmann::json to_json(const CountResult& result) {
    return {{"t", result.t},
            {"total", to_decimal(result.total)},
            {"rainbow", to_decimal(result.rainbow)},
            {"non_rainbow", to_decimal(result.non_rainbow)},
            {"proportion", to_json(Rational(result.rainbow, result.total))}};
}

nlohmann::json to_json(const Certificate& certificate) {
    nlohmann::json out{{"t", certificate.t},
                       {"r", certificate.r},
                       {"b", certificate.b},
                       {"source", to_string(certificate.source)},
                       {"a", to_decimal(certificate.a)},
                       {"criterion_rhs", to_json(certificate.criterion_rhs)},
                       {"mrb_lower", to_json(certificate.mrb_lower)},
                       {"baseline", to_json(certificate.baseline)},
                       {"verdict_uncommon", certificate.verdict_uncommon}};
    if (certificate.count_lower_bound)
        out["count_lower_bound"] = to_json(*certificate.count_lower_bound);
    return out;
}

nlohmann::json to_json(const AuditReport& report) {
    return {{"t", report.t},
            {"r", report.r},
            {"exact_non_rainbow", to_decimal(report.exact_non_rainbow)},
            {"lemma_bound", to_decimal(report.lemma_bound)},
            {"bound_respected", report.bound_respected}};
}

nlohmann::json to_json(const RecurrenceReport& report) {
    return {{"b", report.b},
            {"t", report.t},
            {"depth", report.depth},
            {"a", to_decimal(report.a)},
            {"exact_count", to_decimal(report.exact_count)},
            {"bound", to_json(report.bound)},
            {"holds", report.holds}};
}

nlohmann::json to_json(const SimulationReport& report) {
    return {{"n", report.n},
            {"t", report.t},
            {"r", report.r},
            {"samples", report.samples},
            {"seed", report.seed},
            {"mean", report.mean_proportion},
            {"std_error", report.std_error},
            {"baseline", to_json(report.baseline)}};
}

} // namespace rainbow
