#include <doctest.h>

#include <set>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "rainbow/coloring.hpp"

using namespace rainbow;

namespace {

std::set<std::pair<int, int>> class_edges(const EdgeColoring& c, ColorId k) {
    std::set<std::pair<int, int>> edges;
    for (int u = 0; u < c.vertex_count(); ++u)
        for (int v = u + 1; v < c.vertex_count(); ++v)
            if (c.color(u, v) == k)
                edges.insert({u, v});
    return edges;
}

} // namespace

TEST_CASE("parallel coloring classes match the construction rule") {
    const EdgeColoring c7 = parallel_coloring(7);
    CHECK(class_edges(c7, 1) == std::set<std::pair<int, int>>{{0, 2}, {3, 6}, {4, 5}});
    CHECK(c7.color(3, 6) == 1);
    CHECK(c7.color(6, 3) == 1);

    const EdgeColoring c8 = parallel_coloring(8);
    CHECK(class_edges(c8, 5) == std::set<std::pair<int, int>>{{0, 3}, {1, 2}, {4, 7}, {5, 6}});
}

TEST_CASE("parallel coloring of K_3 is the rainbow triangle") {
    const EdgeColoring c = parallel_coloring(3);
    for (ColorId k = 1; k <= 3; ++k)
        CHECK(class_edges(c, k).size() == 1);
    CHECK(c.color(0, 1) != c.color(0, 2));
    CHECK(c.color(0, 1) != c.color(1, 2));
    CHECK(c.color(0, 2) != c.color(1, 2));
}

TEST_CASE("parallel colorings are proper and surjective with the exact class profile") {
    for (int r = 3; r <= 60; ++r) {
        const EdgeColoring c = parallel_coloring(r);
        const ValidationReport report = validate(c);
        REQUIRE(report.is_proper_edge_coloring);
        REQUIRE(report.is_surjective);
        REQUIRE(report.color_class_sizes.size() == static_cast<std::size_t>(r));
        long long total = 0;
        int small = 0;
        int large = 0;
        for (long long s : report.color_class_sizes) {
            total += s;
            if (r % 2 == 1) {
                CHECK(s == (r - 1) / 2);
            } else {
                CHECK((s == r / 2 - 1 || s == r / 2));
                (s == r / 2 - 1 ? small : large) += 1;
            }
        }
        CHECK(total == static_cast<long long>(r) * (r - 1) / 2);
        if (r % 2 == 0) {
            CHECK(small == r / 2);
            CHECK(large == r / 2);
        }
    }
}

TEST_CASE("parallel coloring rejects palettes below three") {
    CHECK_THROWS_AS(parallel_coloring(2), domain_error);
    CHECK_THROWS_AS(parallel_coloring(0), domain_error);
}

TEST_CASE("color lookup is symmetric and range checked") {
    const EdgeColoring c = parallel_coloring(9);
    for (int u = 0; u < 9; ++u)
        for (int v = 0; v < 9; ++v)
            if (u != v)
                CHECK(color_of(c, u, v) == color_of(c, v, u));
    CHECK_THROWS_AS(c.color(2, 2), domain_error);
    CHECK_THROWS_AS(c.color(0, 9), domain_error);
    CHECK_THROWS_AS(c.color(-1, 3), domain_error);
}

TEST_CASE("explicit edge tables are validated") {
    CHECK_THROWS_AS(EdgeColoring(1, 1), domain_error);
    CHECK_THROWS_AS(EdgeColoring(4, 0), domain_error);
    CHECK_THROWS_AS(EdgeColoring(4, 2, std::vector<ColorId>{1, 1, 1}), domain_error);
    CHECK_THROWS_AS(EdgeColoring(3, 2, std::vector<ColorId>{1, 3, 1}), domain_error);
    CHECK_THROWS_AS(EdgeColoring(3, 2, std::vector<ColorId>{0, 1, 1}), domain_error);

    const EdgeColoring c(3, 2, {1, 2, 1});
    CHECK(c.color(0, 1) == 1);
    CHECK(c.color(0, 2) == 2);
    CHECK(c.color(1, 2) == 1);
    CHECK(c.edge_count() == 3);
}

TEST_CASE("set_color keeps class sizes current") {
    EdgeColoring c(4, 3, 1);
    CHECK(c.class_sizes() == std::vector<long long>{6, 0, 0});
    CHECK(c.used_color_count() == 1);
    c.set_color(0, 1, 3);
    c.set_color(2, 3, 2);
    CHECK(c.class_sizes() == std::vector<long long>{4, 1, 1});
    CHECK(c.uses_all_colors());
    CHECK_THROWS_AS(c.set_color(0, 1, 4), domain_error);
    CHECK_THROWS_AS(c.set_color(0, 1, 0), domain_error);
}

TEST_CASE("blow-up colors come from the first differing digit") {
    const EdgeColoring base = parallel_coloring(7);
    const BlowupColoring blown(base, 2);
    CHECK(blown.vertex_count() == 49);
    // same leading digit: the inner copy decides
    CHECK(color_of(blown, 2 * 7 + 4, 2 * 7 + 5) == base.color(4, 5));
    CHECK(base.color(4, 5) == 1);
    // different leading digits: the outer edge decides
    CHECK(color_of(blown, 2 * 7 + 4, 3 * 7 + 5) == base.color(2, 3));
    CHECK_THROWS_AS(color_of(blown, 5, 5), domain_error);
    CHECK_THROWS_AS(color_of(blown, 0, 49), domain_error);
    CHECK_THROWS_AS(BlowupColoring(base, 0), domain_error);
}

TEST_CASE("depth-1 blow-up agrees with its base edge by edge") {
    const EdgeColoring base = parallel_coloring(6);
    const BlowupColoring blown(base, 1);
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            CHECK(blown.color(u, v) == base.color(u, v));
    CHECK(materialize(blown) == base);
}

TEST_CASE("depth-2 blow-up groups inherit the base edge colors") {
    const EdgeColoring base = parallel_coloring(6);
    const EdgeColoring big = materialize(BlowupColoring(base, 2));
    REQUIRE(big.vertex_count() == 36);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (i != j)
                CHECK(big.color(6 * i + 1, 6 * j + 4) == base.color(i, j));
    for (int x = 0; x < 6; ++x)
        for (int y = x + 1; y < 6; ++y)
            CHECK(big.color(2 * 6 + x, 2 * 6 + y) == base.color(x, y));
}

TEST_CASE("blowing up a single monochromatic edge gives a monochromatic clique") {
    const EdgeColoring base(2, 1);
    const EdgeColoring k4 = materialize(BlowupColoring(base, 2));
    REQUIRE(k4.vertex_count() == 4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v)
            CHECK(k4.color(u, v) == 1);
}

TEST_CASE("materialize refuses blow-ups above the cap") {
    const BlowupColoring blown(parallel_coloring(6), 4); // 1296 vertices
    CHECK_THROWS_AS(materialize(blown), resource_error);
    CHECK_THROWS_AS(materialize(blown, 1000), resource_error);
    CHECK(materialize(blown, 1296).vertex_count() == 1296);
}

TEST_CASE("materialize agrees with implicit lookup on random bases") {
    int cases = 0;
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        oracle::TestRng rng(seed * 77);
        const int b = 2 + rng.below(5);
        const int r = 1 + rng.below(6);
        for (int k = 1; k <= 3; ++k) {
            long long size = 1;
            for (int i = 0; i < k; ++i)
                size *= b;
            if (size > 200)
                continue;
            const EdgeColoring base = oracle::random_coloring(b, r, seed);
            const BlowupColoring blown(base, k);
            const EdgeColoring dense = materialize(blown, 200);
            for (long long u = 0; u < size; ++u)
                for (long long v = u + 1; v < size; ++v)
                    REQUIRE(dense.color(static_cast<int>(u), static_cast<int>(v)) == blown.color(u, v));
            ++cases;
        }
    }
    CHECK(cases >= 20);
}

TEST_CASE("validate flags improper colorings") {
    const ValidationReport report = validate(EdgeColoring(4, 1));
    CHECK_FALSE(report.is_proper_edge_coloring);
    CHECK(report.color_class_sizes == std::vector<long long>{6});
    CHECK(report.is_surjective);
}

TEST_CASE("validate reports missing colors without failing") {
    const EdgeColoring full(3, 3, {1, 2, 3});
    CHECK(validate(full).is_surjective);
    const EdgeColoring sparse(3, 4, {1, 2, 3});
    CHECK_FALSE(validate(sparse).is_surjective);
    CHECK(sparse.used_color_count() == 3);
}
