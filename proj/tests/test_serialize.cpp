#include <doctest.h>

#include "rainbow/serialize.hpp"

using namespace rainbow;
using nlohmann::json;

TEST_CASE("big integers serialize as decimal strings") {
    CHECK(to_decimal(0) == "0");
    CHECK(to_decimal(-17) == "-17");
    CHECK(to_decimal(binomial(100, 50)) == "100891344545564193334812497256");
}

TEST_CASE("rationals serialize in lowest terms with a positive denominator") {
    CHECK(to_json(Rational(2, 4)) == json{{"num", "1"}, {"den", "2"}});
    CHECK(to_json(Rational(-3, 9)) == json{{"num", "-1"}, {"den", "3"}});
    CHECK(to_json(Rational(5)) == json{{"num", "5"}, {"den", "1"}});
    CHECK(to_json(Rational(0)) == json{{"num", "0"}, {"den", "1"}});
    CHECK(to_json(baseline_proportion(6, 6)) == json{{"num", "5"}, {"den", "324"}});
}

TEST_CASE("count results carry exact totals and the reduced proportion") {
    const CountResult res = count_rainbow_complete(parallel_coloring(6), 4);
    const json j = to_json(res);
    CHECK(j["t"] == 4);
    CHECK(j["total"] == "15");
    CHECK(j["rainbow"] == "6");
    CHECK(j["non_rainbow"] == "9");
    CHECK(j["proportion"]["num"] == "2");
    CHECK(j["proportion"]["den"] == "5");
}

TEST_CASE("certificates include the closed-form count bound only when defined") {
    const json with = to_json(certify_uncommon(4, 6));
    CHECK(with["t"] == 4);
    CHECK(with["r"] == 6);
    CHECK(with["b"] == 6);
    CHECK(with["source"] == "parallel");
    CHECK(with["a"] == "6");
    CHECK(with["criterion_rhs"] == json{{"num", "1075"}, {"den", "1296"}});
    CHECK(with["mrb_lower"] == json{{"num", "24"}, {"den", "215"}});
    CHECK(with["baseline"] == json{{"num", "5"}, {"den", "324"}});
    CHECK(with["count_lower_bound"] == json{{"num", "-3"}, {"den", "1"}});
    CHECK(with["verdict_uncommon"] == true);

    const json without = to_json(certify_uncommon(3, 7));
    CHECK_FALSE(without.contains("count_lower_bound"));
    CHECK(without["verdict_uncommon"] == true);
}

TEST_CASE("audit and recurrence reports serialize all fields") {
    const json audit = to_json(audit_lemma_bounds(5, 11));
    CHECK(audit == json{{"t", 5},
                        {"r", 11},
                        {"exact_non_rainbow", "440"},
                        {"lemma_bound", "770"},
                        {"bound_respected", true}});

    const json rec = to_json(verify_recurrence(parallel_coloring(6), 4, 2));
    CHECK(rec == json{{"b", 6},
                      {"t", 4},
                      {"depth", 2},
                      {"a", "6"},
                      {"exact_count", "7812"},
                      {"bound", json{{"num", "7812"}, {"den", "1"}}},
                      {"holds", true}});
}

TEST_CASE("simulation reports keep the baseline exact next to float statistics") {
    const SimulationReport rep = estimate_rainbow_proportion(8, 4, 10, 40, 6);
    const json j = to_json(rep);
    CHECK(j["n"] == 8);
    CHECK(j["t"] == 4);
    CHECK(j["r"] == 10);
    CHECK(j["samples"] == 40);
    CHECK(j["seed"] == 6);
    CHECK(j["mean"] == rep.mean_proportion);
    CHECK(j["std_error"] == rep.std_error);
    CHECK(j["baseline"] == to_json(baseline_proportion(10, 6)));
}
