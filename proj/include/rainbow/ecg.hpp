#pragma once

#include <filesystem>
#include <string>

#include "rainbow/coloring.hpp"

namespace rainbow {

// The .ecg text format. Line 1 is `ecg 1`, line 2 is `<n> <r>`, then one
// line per vertex i = 0..n-2 holding the colors of edges {i, i+1}..{i, n-1},
// single-space separated. Every line ends with a newline; no other
// whitespace is accepted. Violations raise format_error with the 1-based
// line number.

EdgeColoring parse_ecg(const std::string& text);
std::string format_ecg(const EdgeColoring& coloring);

EdgeColoring read_coloring(const std::filesystem::path& path);
void write_coloring(const EdgeColoring& coloring, const std::filesystem::path& path);

} // namespace rainbow
