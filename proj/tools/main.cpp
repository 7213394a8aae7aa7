#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rainbow/certify.hpp"
#include "rainbow/coloring.hpp"
#include "rainbow/counting.hpp"
#include "rainbow/ecg.hpp"
#include "rainbow/exact.hpp"
#include "rainbow/poly.hpp"
#include "rainbow/serialize.hpp"
#include "rainbow/simulate.hpp"

using nlohmann::json;
using namespace rainbow;

namespace {

struct Budgets {
    long long materialize_cap = 500;
    long long enumeration_cap = 100'000'000;
};

void emit(const json& object) {
    std::cout << object.dump(2) << '\n';
}

std::string show(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

json with_params(json params, const Budgets& budgets, const json& body) {
    params["materialize_cap"] = budgets.materialize_cap;
    params["enumeration_cap"] = budgets.enumeration_cap;
    json out = body;
    out["params"] = std::move(params);
    return out;
}

void print_certificate(const Certificate& cert) {
    std::cout << "certificate\n"
              << "  t                " << cert.t << '\n'
              << "  r                " << cert.r << '\n'
              << "  b                " << cert.b << '\n'
              << "  source           " << to_string(cert.source) << '\n'
              << "  a                " << cert.a.str() << '\n'
              << "  criterion_rhs    " << show(cert.criterion_rhs) << '\n'
              << "  mrb_lower        " << show(cert.mrb_lower) << '\n'
              << "  baseline         " << show(cert.baseline) << '\n';
    if (cert.count_lower_bound)
        std::cout << "  count_bound      " << show(*cert.count_lower_bound) << '\n';
    std::cout << "  verdict_uncommon " << (cert.verdict_uncommon ? "true" : "false") << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rainbow clique certificates for edge-colored complete graphs"};
    app.require_subcommand(1);

    Budgets budgets;
    app.add_option("--materialize-cap", budgets.materialize_cap,
                   "largest vertex count a blow-up may expand to")
        ->capture_default_str();
    app.add_option("--enumeration-cap", budgets.enumeration_cap,
                   "partial-subset visit budget for exact counting")
        ->capture_default_str();

    auto* construct = app.add_subcommand("construct", "write the parallel r-coloring of K_r");
    int construct_r = 0;
    std::string construct_out;
    construct->add_option("--r", construct_r, "palette size and vertex count")->required();
    construct->add_option("--out", construct_out, "output .ecg path")->required();

    auto* count = app.add_subcommand("count", "count rainbow K_t copies in a coloring file");
    std::string count_path;
    int count_t = 0;
    bool count_json = false;
    count->add_option("--coloring", count_path, "input .ecg path")->required();
    count->add_option("--t", count_t, "clique order")->required();
    count->add_flag("--json", count_json, "machine-readable output");

    auto* blowup = app.add_subcommand("blowup", "expand an iterated blow-up of a base coloring");
    std::string blowup_base;
    int blowup_depth = 0;
    std::string blowup_out;
    blowup->add_option("--base", blowup_base, "base .ecg path")->required();
    blowup->add_option("--depth", blowup_depth, "iteration depth k (size b^k)")->required();
    blowup->add_option("--out", blowup_out, "output .ecg path")->required();

    auto* certify = app.add_subcommand("certify", "certify uncommonness from exact counts");
    int certify_t = 0;
    int certify_r = 0;
    bool certify_json = false;
    certify->add_option("--t", certify_t, "clique order")->required();
    certify->add_option("--r", certify_r, "palette size (base is K_r)")->required();
    certify->add_flag("--json", certify_json, "machine-readable output");

    auto* threshold = app.add_subcommand("threshold", "first r from which the positivity certificate holds");
    int threshold_t = 0;
    int threshold_r_max = 0;
    bool threshold_json = false;
    threshold->add_option("--t", threshold_t, "clique order")->required();
    threshold->add_option("--r-max", threshold_r_max, "largest r to scan")->required();
    threshold->add_flag("--json", threshold_json, "machine-readable output");

    auto* coeff = app.add_subcommand("coeff", "leading coefficients of the certificate polynomial");
    int coeff_t = 0;
    bool coeff_json = false;
    coeff->add_option("--t", coeff_t, "clique order")->required();
    coeff->add_flag("--json", coeff_json, "machine-readable output");

    auto* audit = app.add_subcommand("audit", "exact non-rainbow count against the lemma bound");
    int audit_t = 0;
    int audit_r = 0;
    bool audit_json = false;
    audit->add_option("--t", audit_t, "clique order")->required();
    audit->add_option("--r", audit_r, "palette size")->required();
    audit->add_flag("--json", audit_json, "machine-readable output");

    auto* recurrence = app.add_subcommand("recurrence", "check the blow-up count against its lower bound");
    std::string recurrence_base;
    int recurrence_t = 0;
    int recurrence_depth = 0;
    bool recurrence_json = false;
    recurrence->add_option("--base", recurrence_base, "base .ecg path")->required();
    recurrence->add_option("--t", recurrence_t, "clique order")->required();
    recurrence->add_option("--depth", recurrence_depth, "iteration depth")->required();
    recurrence->add_flag("--json", recurrence_json, "machine-readable output");

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo rainbow proportion of uniform colorings");
    int simulate_n = 0;
    int simulate_r = 0;
    int simulate_t = 0;
    long long simulate_samples = 0;
    std::uint64_t simulate_seed = 0;
    bool simulate_json = false;
    simulate->add_option("--n", simulate_n, "host vertex count")->required();
    simulate->add_option("--r", simulate_r, "palette size")->required();
    simulate->add_option("--t", simulate_t, "clique order")->required();
    simulate->add_option("--samples", simulate_samples, "number of independent samples")->required();
    simulate->add_option("--seed", simulate_seed, "run seed")->required();
    simulate->add_flag("--json", simulate_json, "machine-readable output");

    auto* search = app.add_subcommand("search", "hill climb from a random coloring");
    int search_n = 0;
    int search_r = 0;
    int search_t = 0;
    long long search_steps = 0;
    std::uint64_t search_seed = 0;
    std::string search_out;
    bool search_json = false;
    search->add_option("--n", search_n, "host vertex count")->required();
    search->add_option("--r", search_r, "palette size")->required();
    search->add_option("--t", search_t, "clique order")->required();
    search->add_option("--steps", search_steps, "maximum applied moves")->required();
    search->add_option("--seed", search_seed, "seed of the random start")->required();
    search->add_option("--out", search_out, "write the final coloring here");
    search->add_flag("--json", search_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    const CountOptions counting{budgets.enumeration_cap, 1};
    const CertifyOptions certifying{budgets.materialize_cap, budgets.enumeration_cap, 1};

    try {
        if (*construct) {
            const EdgeColoring coloring = parallel_coloring(construct_r);
            write_coloring(coloring, construct_out);
            std::cout << "wrote parallel " << construct_r << "-coloring of K_" << construct_r << " ("
                      << coloring.edge_count() << " edges) to " << construct_out << '\n';
        } else if (*count) {
            const EdgeColoring coloring = read_coloring(count_path);
            const CountResult result = count_rainbow_complete(coloring, count_t, counting);
            if (count_json) {
                json body = to_json(result);
                body["n"] = coloring.vertex_count();
                body["r"] = coloring.palette_size();
                emit(with_params({{"command", "count"}, {"coloring", count_path}, {"t", count_t}},
                                 budgets, body));
            } else {
                std::cout << "K_" << coloring.vertex_count() << " with " << coloring.palette_size()
                          << " colors, t = " << count_t << '\n'
                          << "  total       " << result.total.str() << '\n'
                          << "  rainbow     " << result.rainbow.str() << '\n'
                          << "  non_rainbow " << result.non_rainbow.str() << '\n'
                          << "  proportion  " << show(Rational(result.rainbow, result.total)) << '\n';
            }
        } else if (*blowup) {
            const EdgeColoring base = read_coloring(blowup_base);
            const EdgeColoring expanded =
                materialize(BlowupColoring(base, blowup_depth), budgets.materialize_cap);
            write_coloring(expanded, blowup_out);
            std::cout << "wrote depth-" << blowup_depth << " blow-up of K_" << base.vertex_count()
                      << " (" << expanded.vertex_count() << " vertices) to " << blowup_out << '\n';
        } else if (*certify) {
            const Certificate cert = certify_uncommon(certify_t, certify_r, certifying);
            if (certify_json)
                emit(with_params({{"command", "certify"}, {"t", certify_t}, {"r", certify_r}},
                                 budgets, to_json(cert)));
            else
                print_certificate(cert);
        } else if (*threshold) {
            const std::optional<int> min_r = find_min_r_semifinal(threshold_t, threshold_r_max);
            if (threshold_json) {
                json body{{"t", threshold_t}, {"r_max", threshold_r_max}};
                body["min_r"] = min_r ? json(*min_r) : json(nullptr);
                emit(with_params({{"command", "threshold"}, {"t", threshold_t}, {"r_max", threshold_r_max}},
                                 budgets, body));
            } else if (min_r) {
                std::cout << "certificate holds from r = " << *min_r << " through r_max = "
                          << threshold_r_max << '\n';
            } else {
                std::cout << "certificate does not hold on a tail of r <= " << threshold_r_max << '\n';
            }
        } else if (*coeff) {
            const BigInt gap = leading_gap_coefficient(coeff_t);
            const UniPoly poly = semifinal_polynomial(coeff_t);
            const long long e = static_cast<long long>(coeff_t) * (coeff_t - 1) / 2;
            if (coeff_json) {
                emit(with_params({{"command", "coeff"}, {"t", coeff_t}}, budgets,
                                 json{{"t", coeff_t},
                                      {"degree", poly.degree()},
                                      {"top_power", e + 2},
                                      {"top_coefficient", to_decimal(poly.coeff(static_cast<std::size_t>(e) + 2))},
                                      {"gap_power", e + 1},
                                      {"gap_coefficient", to_decimal(gap)}}));
            } else {
                std::cout << "certificate polynomial for t = " << coeff_t << '\n'
                          << "  degree           " << poly.degree() << '\n'
                          << "  coeff of r^" << e + 2 << "   " << poly.coeff(static_cast<std::size_t>(e) + 2).str()
                          << '\n'
                          << "  coeff of r^" << e + 1 << "   " << gap.str() << '\n';
            }
        } else if (*audit) {
            const AuditReport report = audit_lemma_bounds(audit_t, audit_r, certifying);
            if (audit_json)
                emit(with_params({{"command", "audit"}, {"t", audit_t}, {"r", audit_r}}, budgets,
                                 to_json(report)));
            else
                std::cout << "non-rainbow K_" << audit_t << " in the parallel " << audit_r << "-coloring\n"
                          << "  exact          " << report.exact_non_rainbow.str() << '\n'
                          << "  lemma bound    " << report.lemma_bound.str() << '\n'
                          << "  respected      " << (report.bound_respected ? "true" : "false") << '\n';
            if (!report.bound_respected) {
                std::cerr << "error: exact count exceeds the lemma bound\n";
                return 3;
            }
        } else if (*recurrence) {
            const EdgeColoring base = read_coloring(recurrence_base);
            const RecurrenceReport report = verify_recurrence(base, recurrence_t, recurrence_depth, certifying);
            if (recurrence_json)
                emit(with_params({{"command", "recurrence"},
                                  {"base", recurrence_base},
                                  {"t", recurrence_t},
                                  {"depth", recurrence_depth}},
                                 budgets, to_json(report)));
            else
                std::cout << "depth-" << report.depth << " blow-up of K_" << report.b << ", t = "
                          << report.t << '\n'
                          << "  base count  " << report.a.str() << '\n'
                          << "  exact count " << report.exact_count.str() << '\n'
                          << "  lower bound " << show(report.bound) << '\n'
                          << "  holds       " << (report.holds ? "true" : "false") << '\n';
            if (!report.holds) {
                std::cerr << "error: exact count fell below the closed-form bound\n";
                return 3;
            }
        } else if (*simulate) {
            const SimulationReport report = estimate_rainbow_proportion(
                simulate_n, simulate_t, simulate_r, simulate_samples, simulate_seed);
            if (simulate_json)
                emit(with_params({{"command", "simulate"},
                                  {"n", simulate_n},
                                  {"r", simulate_r},
                                  {"t", simulate_t},
                                  {"samples", simulate_samples},
                                  {"seed", simulate_seed}},
                                 budgets, to_json(report)));
            else
                std::cout << "uniform " << report.r << "-colorings of K_" << report.n << ", t = "
                          << report.t << ", " << report.samples << " samples, seed " << report.seed
                          << '\n'
                          << "  mean      " << report.mean_proportion << '\n'
                          << "  std_error " << report.std_error << '\n'
                          << "  baseline  " << show(report.baseline) << '\n';
        } else if (*search) {
            const EdgeColoring start = sample_uniform_coloring(search_n, search_r, search_seed);
            const BigInt initial = count_rainbow_complete(start, search_t, counting).rainbow;
            auto [best, final_count] = hill_climb(start, search_t, search_steps, search_seed);
            if (!search_out.empty())
                write_coloring(best, search_out);
            if (search_json) {
                json body{{"n", search_n},
                          {"r", search_r},
                          {"t", search_t},
                          {"steps", search_steps},
                          {"seed", search_seed},
                          {"initial_count", to_decimal(initial)},
                          {"final_count", to_decimal(final_count)}};
                if (!search_out.empty())
                    body["out"] = search_out;
                emit(with_params({{"command", "search"},
                                  {"n", search_n},
                                  {"r", search_r},
                                  {"t", search_t},
                                  {"steps", search_steps},
                                  {"seed", search_seed}},
                                 budgets, body));
            } else {
                std::cout << "hill climb on K_" << search_n << " with " << search_r << " colors, t = "
                          << search_t << '\n'
                          << "  initial count " << initial.str() << '\n'
                          << "  final count   " << final_count.str() << '\n';
                if (!search_out.empty())
                    std::cout << "  wrote " << search_out << '\n';
            }
        }
        return 0;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const format_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
}
