#include "rainbow/ecg.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace rainbow {

namespace {

constexpr int kMaxVertices = 10000;
constexpr int kMaxPalette = 1000000;

// Splits a fully terminated line into decimal fields. Exactly one space
// between fields, no leading or trailing space, digits only.
std::vector<long long> parse_fields(const std::string& line, long line_no) {
    if (line.empty())
        throw format_error(line_no, "empty line");
    std::vector<long long> out;
    std::size_t i = 0;
    for (;;) {
        std::size_t j = i;
        while (j < line.size() && line[j] >= '0' && line[j] <= '9')
            ++j;
        if (j == i)
            throw format_error(line_no, "expected a decimal number");
        if (j - i > 9)
            throw format_error(line_no, "number has more than 9 digits");
        out.push_back(std::stoll(line.substr(i, j - i)));
        if (j == line.size())
            return out;
        if (line[j] != ' ')
            throw format_error(line_no, "unexpected character after a number");
        if (j + 1 == line.size())
            throw format_error(line_no, "trailing space");
        i = j + 1;
    }
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t nl = text.find('\n', pos);
        if (nl == std::string::npos)
            throw format_error(static_cast<long>(lines.size()) + 1, "missing trailing newline");
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

} // namespace

EdgeColoring parse_ecg(const std::string& text) {
    const std::vector<std::string> lines = split_lines(text);
    if (lines.empty())
        throw format_error(1, "empty file");
    if (lines[0] != "ecg 1")
        throw format_error(1, "bad magic, expected 'ecg 1'");
    if (lines.size() < 2)
        throw format_error(2, "missing `<n> <r>` header");

    const std::vector<long long> header = parse_fields(lines[1], 2);
    if (header.size() != 2)
        throw format_error(2, "header must be exactly `<n> <r>`");
    if (header[0] < 2 || header[0] > kMaxVertices)
        throw format_error(2, "vertex count must be in 2.." + std::to_string(kMaxVertices));
    if (header[1] < 1 || header[1] > kMaxPalette)
        throw format_error(2, "palette size must be in 1.." + std::to_string(kMaxPalette));
    const int n = static_cast<int>(header[0]);
    const int r = static_cast<int>(header[1]);

    const std::size_t expected_lines = 2 + static_cast<std::size_t>(n) - 1;
    if (lines.size() < expected_lines)
        throw format_error(static_cast<long>(lines.size()) + 1,
                           "unexpected end of file, expected " + std::to_string(expected_lines) + " lines");
    if (lines.size() > expected_lines)
        throw format_error(static_cast<long>(expected_lines) + 1, "trailing content after the last row");

    std::vector<ColorId> colors;
    colors.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i <= n - 2; ++i) {
        const long line_no = 3 + i;
        const std::vector<long long> row = parse_fields(lines[static_cast<std::size_t>(line_no) - 1], line_no);
        const std::size_t want = static_cast<std::size_t>(n - 1 - i);
        if (row.size() != want)
            throw format_error(line_no, "expected " + std::to_string(want) + " colors, got " +
                                            std::to_string(row.size()));
        for (long long c : row) {
            if (c < 1 || c > r)
                throw format_error(line_no, "color " + std::to_string(c) + " outside 1.." + std::to_string(r));
            colors.push_back(static_cast<ColorId>(c));
        }
    }
    return EdgeColoring(n, r, std::move(colors));
}

std::string format_ecg(const EdgeColoring& coloring) {
    std::ostringstream out;
    const int n = coloring.vertex_count();
    out << "ecg 1\n" << n << ' ' << coloring.palette_size() << '\n';
    for (int i = 0; i <= n - 2; ++i) {
        for (int j = i + 1; j <= n - 1; ++j) {
            if (j > i + 1)
                out << ' ';
            out << coloring.color(i, j);
        }
        out << '\n';
    }
    return out.str();
}

EdgeColoring read_coloring(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw io_error("cannot open " + path.string() + " for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw io_error("read failure on " + path.string());
    return parse_ecg(buf.str());
}

void write_coloring(const EdgeColoring& coloring, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw io_error("cannot open " + path.string() + " for writing");
    out << format_ecg(coloring);
    out.flush();
    if (!out)
        throw io_error("write failure on " + path.string());
}

} // namespace rainbow
