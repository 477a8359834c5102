#pragma once

#include "tetgs/fields.hpp"
#include "tetgs/types.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace tetgs {

using Tet = std::array<int, 4>;

// Local vertex pairs of the six tet edges.
inline constexpr std::array<std::array<int, 2>, 6> kTetEdges = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

// Canonical 64-bit key of an undirected vertex pair.
inline std::uint64_t edge_key(int a, int b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
}
inline std::array<int, 2> edge_from_key(std::uint64_t key) {
    return {static_cast<int>(key >> 32), static_cast<int>(key & 0xffffffffu)};
}

// Tetrahedral grid with per-vertex signed distance values.
//
// Tets are stored positively oriented: det(v1-v0, v2-v0, v3-v0) > 0.
// `frozen` marks vertices whose sdf is held fixed during adaptation and
// `reference_sdf` holds the values recorded when they were frozen (empty
// until a freeze happens).
struct TetGrid {
    std::vector<Vec3> vertices;
    std::vector<Tet> tets;
    std::vector<double> sdf;
    std::vector<std::uint8_t> frozen;
    std::vector<double> reference_sdf;
    double cell_size = 0.0;

    std::size_t vertex_count() const { return vertices.size(); }
    std::size_t tet_count() const { return tets.size(); }
    bool has_reference() const { return reference_sdf.size() == vertices.size(); }

    // Throws StructuralError on any invariant violation.
    void validate() const;
};

double signed_volume(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d);
double tet_volume(const TetGrid& grid, int tet);
double total_volume(const TetGrid& grid);

// Kuhn six-tet split of a `resolution`^3 cube lattice spanning `bbox`.
// cell_size is the largest per-axis lattice spacing.
TetGrid build_grid(const Aabb& bbox, int resolution);

// sdf[i] = field(vertices[i]). Throws EvaluationError naming the first vertex
// with a non-finite value.
TetGrid sample_field(TetGrid grid, const ScalarField& field);

// Red refinement (8 children) of the selected tets, closed conformingly:
// unselected tets with one split edge are bisected, those with the three edges
// of one face split go to four children, any other pattern is promoted to red.
// Untouched tets keep their index; each refined tet's first child takes its
// slot and the rest are appended. New midpoint vertices are appended with the
// mean sdf of their endpoints, frozen iff both endpoints are frozen.
TetGrid subdivide(const TetGrid& grid, std::span<const int> tet_subset);

// Edges that `subdivide(grid, tet_subset)` would split, sorted by key.
std::vector<std::uint64_t> refinement_edges(const TetGrid& grid, std::span<const int> tet_subset);

// Sorted unique edge keys of all tets.
std::vector<std::uint64_t> grid_edges(const TetGrid& grid);

}  // namespace tetgs
