#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rainbow/errors.hpp"

namespace rainbow {

using Vertex = int;
using ColorId = int; // colors are 1-based: 1..r

/// An edge coloring of the complete graph K_n with palette {1..r}.
///
/// Every edge carries exactly one color; lookups are symmetric. Colors are
/// stored in a dense row-major upper-triangular table, so lookup is O(1).
/// Surjectivity onto the palette is a checkable property (see validate()),
/// never a construction-time requirement.
class EdgeColoring {
public:
    /// K_n with every edge set to `fill`.
    EdgeColoring(int vertex_count, int palette_size, ColorId fill = 1);

    /// K_n from an explicit upper-triangle table: entry for edge {u,v} with
    /// u < v lives at row u, i.e. colors[u*(2n-u-1)/2 + (v-u-1)].
    EdgeColoring(int vertex_count, int palette_size, std::vector<ColorId> colors);

    int vertex_count() const noexcept { return n_; }
    int palette_size() const noexcept { return r_; }
    long long edge_count() const noexcept { return static_cast<long long>(n_) * (n_ - 1) / 2; }

    ColorId color(Vertex u, Vertex v) const;
    void set_color(Vertex u, Vertex v, ColorId c);

    /// Row-major upper triangle, edge {u,v} with u < v at index(u,v).
    std::span<const ColorId> colors() const noexcept { return colors_; }

    /// Number of edges per color, indexed by color-1.
    const std::vector<long long>& class_sizes() const noexcept { return class_sizes_; }

    int used_color_count() const noexcept;
    bool uses_all_colors() const noexcept;

    bool operator==(const EdgeColoring& other) const noexcept {
        return n_ == other.n_ && r_ == other.r_ && colors_ == other.colors_;
    }

private:
    std::size_t index_of(Vertex u, Vertex v) const;

    int n_ = 0;
    int r_ = 0;
    std::vector<ColorId> colors_;
    std::vector<long long> class_sizes_;
};

/// An implicit coloring of K_{b^k}: each vertex is a length-k string of
/// base-b digits (most significant digit = outermost level), and the color
/// of {u,v} is the base color of the first digit pair at which they differ.
class BlowupColoring {
public:
    BlowupColoring(EdgeColoring base, int depth);

    const EdgeColoring& base() const noexcept { return base_; }
    int depth() const noexcept { return depth_; }
    std::int64_t vertex_count() const noexcept { return size_; }

    ColorId color(std::int64_t u, std::int64_t v) const;

private:
    EdgeColoring base_;
    int depth_;
    std::int64_t size_;
};

struct ValidationReport {
    bool is_proper_edge_coloring = false; // no vertex sees a repeated color
    std::vector<long long> color_class_sizes;
    bool is_surjective = false;
};

/// The explicit coloring of K_r in which every color class is a matching,
/// so no vertex sees a repeated color and every triangle is rainbow.
/// Vertices are 0..r-1; vertex arithmetic is mod r. For odd r, class k
/// (k = 1..r) is {{k+i, k-i} : i = 1..(r-1)/2}; for even r, classes
/// k = 1..r/2 use pairs {k+i, k-i} for i = 1..r/2-1 and classes
/// k = r/2+1..r use pairs {k+i, k-i+1} for i = 1..r/2.
EdgeColoring parallel_coloring(int r);

ColorId color_of(const EdgeColoring& c, Vertex u, Vertex v);
ColorId color_of(const BlowupColoring& c, std::int64_t u, std::int64_t v);

/// Expand an implicit blow-up into a dense EdgeColoring.
/// Rejects sizes above `max_vertices` with a resource_error.
EdgeColoring materialize(const BlowupColoring& blowup, long long max_vertices = 500);

ValidationReport validate(const EdgeColoring& coloring);

} // namespace rainbow
