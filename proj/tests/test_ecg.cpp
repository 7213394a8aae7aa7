#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "oracles.hpp"
#include "rainbow/ecg.hpp"

using namespace rainbow;

namespace {

long line_of(const std::string& text) {
    try {
        parse_ecg(text);
    } catch (const format_error& e) {
        return e.line();
    }
    return -1;
}

} // namespace

TEST_CASE("format_ecg emits the golden text for the K_3 parallel coloring") {
    CHECK(format_ecg(parallel_coloring(3)) == "ecg 1\n3 3\n2 1\n3\n");
}

TEST_CASE("parse_ecg reads the golden text back") {
    const EdgeColoring c = parse_ecg("ecg 1\n3 3\n2 1\n3\n");
    CHECK(c.vertex_count() == 3);
    CHECK(c.palette_size() == 3);
    CHECK(c.color(0, 1) == 2);
    CHECK(c.color(0, 2) == 1);
    CHECK(c.color(1, 2) == 3);
}

TEST_CASE("round trips are exact") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        oracle::TestRng rng(seed * 1021);
        const int n = 2 + static_cast<int>(rng.below(12));
        const int r = 1 + static_cast<int>(rng.below(9));
        const EdgeColoring c = oracle::random_coloring(n, r, seed);
        const std::string text = format_ecg(c);
        CHECK(parse_ecg(text) == c);
        CHECK(format_ecg(parse_ecg(text)) == text);
    }
    const EdgeColoring sparse(4, 1000000, 999999);
    CHECK(parse_ecg(format_ecg(sparse)) == sparse);
}

TEST_CASE("parser reports the offending 1-based line") {
    CHECK(line_of("") == 1);
    CHECK(line_of("ecg 2\n3 3\n2 1\n3\n") == 1);
    CHECK(line_of("Ecg 1\n3 3\n2 1\n3\n") == 1);
    CHECK(line_of("ecg 1\n") == 2);
    CHECK(line_of("ecg 1\n3\n2 1\n3\n") == 2);
    CHECK(line_of("ecg 1\n3 3 4\n2 1\n3\n") == 2);
    CHECK(line_of("ecg 1\n1 3\n") == 2);
    CHECK(line_of("ecg 1\n10001 3\n") == 2);
    CHECK(line_of("ecg 1\n3 0\n2 1\n3\n") == 2);
    CHECK(line_of("ecg 1\n3 1000001\n2 1\n3\n") == 2);
    CHECK(line_of("ecg 1\n3 3\n2 1\n") == 4);      // row for vertex 1 missing
    CHECK(line_of("ecg 1\n3 3\n2\n3\n") == 3);     // short row
    CHECK(line_of("ecg 1\n3 3\n2 1 3\n3\n") == 3); // long row
    CHECK(line_of("ecg 1\n3 3\n2 4\n3\n") == 3);   // color above the palette
    CHECK(line_of("ecg 1\n3 3\n2 0\n3\n") == 3);   // colors are 1-based
    CHECK(line_of("ecg 1\n3 3\n2 1\n3\n1\n") == 5); // extra row
    CHECK(line_of("ecg 1\n3 3\n2 1\n3") == 4);     // missing trailing newline
}

TEST_CASE("parser rejects loose whitespace") {
    CHECK(line_of("ecg 1\n3  3\n2 1\n3\n") == 2);   // double space
    CHECK(line_of("ecg 1\n 3 3\n2 1\n3\n") == 2);   // leading space
    CHECK(line_of("ecg 1\n3 3 \n2 1\n3\n") == 2);   // trailing space
    CHECK(line_of("ecg 1\n3 3\n2\t1\n3\n") == 3);   // tab separator
    CHECK(line_of("ecg 1\r\n3 3\n2 1\n3\n") == 1);  // CRLF
    CHECK(line_of("ecg 1\n3 3\n2 1\n\n3\n") == 5);  // blank row makes five lines
    CHECK(line_of("ecg 1\n3 3\n+2 1\n3\n") == 3);   // signs are not digits
    CHECK(line_of("ecg 1\n3 3\n2 1234567890\n3\n") == 3); // over 9 digits
}

TEST_CASE("file round trip and io errors") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "ecg-unit-tests";
    fs::create_directories(dir);
    const fs::path path = dir / "k9.ecg";

    const EdgeColoring c = parallel_coloring(9);
    write_coloring(c, path);
    CHECK(read_coloring(path) == c);

    CHECK_THROWS_AS(read_coloring(dir / "absent.ecg"), io_error);
    CHECK_THROWS_AS(write_coloring(c, dir / "no-such-dir" / "x.ecg"), io_error);

    fs::remove_all(dir);
}

TEST_CASE("largest accepted header values parse") {
    // n = 10000 would be a large file; use a small n with the palette cap.
    const std::string text = "ecg 1\n2 1000000\n1000000\n";
    const EdgeColoring c = parse_ecg(text);
    CHECK(c.palette_size() == 1000000);
    CHECK(c.color(0, 1) == 1000000);
    CHECK(format_ecg(c) == text);
}
