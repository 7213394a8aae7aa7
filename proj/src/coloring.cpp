#include "rainbow/coloring.hpp"

#include <algorithm>
#include <string>

namespace rainbow {

namespace {

void check_header(int n, int r) {
    if (n < 2)
        throw domain_error("vertex count must be >= 2, got " + std::to_string(n));
    if (r < 1)
        throw domain_error("palette size must be >= 1, got " + std::to_string(r));
}

std::vector<long long> tally_classes(const std::vector<ColorId>& colors, int r) {
    std::vector<long long> sizes(static_cast<std::size_t>(r), 0);
    for (ColorId c : colors)
        ++sizes[static_cast<std::size_t>(c - 1)];
    return sizes;
}

} // namespace

EdgeColoring::EdgeColoring(int vertex_count, int palette_size, ColorId fill)
    : n_(vertex_count), r_(palette_size) {
    check_header(n_, r_);
    if (fill < 1 || fill > r_)
        throw domain_error("fill color " + std::to_string(fill) + " outside 1.." + std::to_string(r_));
    colors_.assign(static_cast<std::size_t>(edge_count()), fill);
    class_sizes_ = tally_classes(colors_, r_);
}

EdgeColoring::EdgeColoring(int vertex_count, int palette_size, std::vector<ColorId> colors)
    : n_(vertex_count), r_(palette_size), colors_(std::move(colors)) {
    check_header(n_, r_);
    if (colors_.size() != static_cast<std::size_t>(edge_count()))
        throw domain_error("color table has " + std::to_string(colors_.size()) + " entries, expected " +
                           std::to_string(edge_count()));
    for (ColorId c : colors_)
        if (c < 1 || c > r_)
            throw domain_error("edge color " + std::to_string(c) + " outside 1.." + std::to_string(r_));
    class_sizes_ = tally_classes(colors_, r_);
}

std::size_t EdgeColoring::index_of(Vertex u, Vertex v) const {
    if (u == v)
        throw domain_error("edge endpoints must differ, got vertex " + std::to_string(u) + " twice");
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw domain_error("vertex out of range 0.." + std::to_string(n_ - 1));
    if (u > v)
        std::swap(u, v);
    auto row = static_cast<std::size_t>(u);
    auto nn = static_cast<std::size_t>(n_);
    return row * (2 * nn - row - 1) / 2 + static_cast<std::size_t>(v - u - 1);
}

ColorId EdgeColoring::color(Vertex u, Vertex v) const {
    return colors_[index_of(u, v)];
}

void EdgeColoring::set_color(Vertex u, Vertex v, ColorId c) {
    if (c < 1 || c > r_)
        throw domain_error("edge color " + std::to_string(c) + " outside 1.." + std::to_string(r_));
    ColorId& slot = colors_[index_of(u, v)];
    --class_sizes_[static_cast<std::size_t>(slot - 1)];
    ++class_sizes_[static_cast<std::size_t>(c - 1)];
    slot = c;
}

int EdgeColoring::used_color_count() const noexcept {
    return static_cast<int>(std::count_if(class_sizes_.begin(), class_sizes_.end(),
                                          [](long long s) { return s > 0; }));
}

bool EdgeColoring::uses_all_colors() const noexcept {
    return used_color_count() == r_;
}

BlowupColoring::BlowupColoring(EdgeColoring base, int depth)
    : base_(std::move(base)), depth_(depth) {
    if (depth_ < 1)
        throw domain_error("blow-up depth must be >= 1, got " + std::to_string(depth_));
    std::int64_t size = 1;
    const auto b = static_cast<std::int64_t>(base_.vertex_count());
    for (int i = 0; i < depth_; ++i) {
        if (size > (std::int64_t{1} << 62) / b)
            throw domain_error("b^k overflows the vertex index type");
        size *= b;
    }
    size_ = size;
}

ColorId BlowupColoring::color(std::int64_t u, std::int64_t v) const {
    if (u == v)
        throw domain_error("edge endpoints must differ, got vertex " + std::to_string(u) + " twice");
    if (u < 0 || v < 0 || u >= size_ || v >= size_)
        throw domain_error("vertex out of range 0.." + std::to_string(size_ - 1));
    const auto b = static_cast<std::int64_t>(base_.vertex_count());
    // Scan digits most-significant first; the first difference decides.
    std::int64_t place = size_ / b;
    while (place > 0) {
        const auto du = static_cast<Vertex>((u / place) % b);
        const auto dv = static_cast<Vertex>((v / place) % b);
        if (du != dv)
            return base_.color(du, dv);
        place /= b;
    }
    throw internal_error("distinct vertices with identical digit strings");
}

EdgeColoring parallel_coloring(int r) {
    if (r < 3)
        throw domain_error("parallel coloring is undefined below 3 colors, got r = " + std::to_string(r));
    EdgeColoring c(r, r);
    auto wrap = [r](int x) { return ((x % r) + r) % r; };
    if (r % 2 == 1) {
        for (int k = 1; k <= r; ++k)
            for (int i = 1; i <= (r - 1) / 2; ++i)
                c.set_color(wrap(k + i), wrap(k - i), k);
    } else {
        for (int k = 1; k <= r / 2; ++k)
            for (int i = 1; i <= r / 2 - 1; ++i)
                c.set_color(wrap(k + i), wrap(k - i), k);
        for (int k = r / 2 + 1; k <= r; ++k)
            for (int i = 1; i <= r / 2; ++i)
                c.set_color(wrap(k + i), wrap(k - i + 1), k);
    }
    return c;
}

ColorId color_of(const EdgeColoring& c, Vertex u, Vertex v) {
    return c.color(u, v);
}

ColorId color_of(const BlowupColoring& c, std::int64_t u, std::int64_t v) {
    return c.color(u, v);
}

EdgeColoring materialize(const BlowupColoring& blowup, long long max_vertices) {
    const std::int64_t n = blowup.vertex_count();
    if (n > max_vertices)
        throw resource_error("blow-up has " + std::to_string(n) + " vertices, above the cap of " +
                             std::to_string(max_vertices));
    const int nn = static_cast<int>(n);
    std::vector<ColorId> table;
    table.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < nn; ++u)
        for (int v = u + 1; v < nn; ++v)
            table.push_back(blowup.color(u, v));
    return EdgeColoring(nn, blowup.base().palette_size(), std::move(table));
}

ValidationReport validate(const EdgeColoring& coloring) {
    ValidationReport report;
    report.color_class_sizes = coloring.class_sizes();
    report.is_surjective = coloring.uses_all_colors();
    report.is_proper_edge_coloring = true;
    const int n = coloring.vertex_count();
    std::vector<char> seen(static_cast<std::size_t>(coloring.palette_size()) + 1);
    for (int v = 0; v < n && report.is_proper_edge_coloring; ++v) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int u = 0; u < n; ++u) {
            if (u == v)
                continue;
            const ColorId c = coloring.color(u, v);
            if (seen[static_cast<std::size_t>(c)]) {
                report.is_proper_edge_coloring = false;
                break;
            }
            seen[static_cast<std::size_t>(c)] = 1;
        }
    }
    return report;
}

} // namespace rainbow
