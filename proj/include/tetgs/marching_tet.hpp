#pragma once

#include "tetgs/tet_grid.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace tetgs {

// Grid edge carrying a sign change; a < b.
struct SignChangeEdge {
    int a = 0;
    int b = 0;
    bool operator==(const SignChangeEdge&) const = default;
};

using Face = std::array<int, 3>;

// Zero level set of a TetGrid with provenance: every vertex remembers the grid
// edge it was interpolated on, every face remembers the tet it came from.
struct ExtractedMesh {
    std::vector<Vec3> positions;
    std::vector<SignChangeEdge> source_edges;  // per vertex
    std::vector<Face> faces;
    std::vector<int> parent_tets;              // per face
    std::vector<double> areas;                 // per face
    std::vector<Vec3> normals;                 // per face, unit, negative -> positive sdf

    std::size_t vertex_count() const { return positions.size(); }
    std::size_t face_count() const { return faces.size(); }
    bool empty() const { return faces.empty(); }
    Vec3 centroid(int face) const {
        const auto& f = faces[face];
        return (positions[f[0]] + positions[f[1]] + positions[f[2]]) / 3.0;
    }
};

// Interpolated zero crossing on edge (pa, pb) with endpoint values (sa, sb).
inline Vec3 interpolate_edge(const Vec3& pa, const Vec3& pb, double sa, double sb) {
    return (pa * sb - pb * sa) / (sb - sa);
}

// Derivatives of interpolate_edge with respect to sa and sb.
struct EdgeJacobian {
    Vec3 d_sa;
    Vec3 d_sb;
};
inline EdgeJacobian interpolate_edge_jacobian(const Vec3& pa, const Vec3& pb, double sa, double sb) {
    const double inv = 1.0 / ((sb - sa) * (sb - sa));
    return {sb * (pa - pb) * inv, sa * (pb - pa) * inv};
}

// Values used for extraction: exact zeros are lifted to +1e-8 * cell_size.
std::vector<double> extraction_sdf(const TetGrid& grid);

// Bit i set iff vertex i of the tet is negative.
std::uint8_t tet_configuration(const TetGrid& grid, std::span<const double> sdf, int tet);
std::vector<std::uint8_t> tet_configurations(const TetGrid& grid, std::span<const double> sdf);

// Marching tetrahedra over the whole grid. Validates the grid first.
ExtractedMesh extract(const TetGrid& grid);
// Same, with explicit per-vertex values (no validation, perturbation applied).
ExtractedMesh extract(const TetGrid& grid, std::span<const double> sdf);

SignChangeEdge vertex_source_edge(const ExtractedMesh& mesh, int vertex);
int face_parent_tet(const ExtractedMesh& mesh, int face);

// Recomputes areas and normals from positions and faces.
void update_face_geometry(ExtractedMesh& mesh);

// Undirected mesh edge with its incident faces (face1 = -1 for a border edge;
// edges with more than two faces report count > 2).
struct MeshEdge {
    int a = 0, b = 0;
    int face0 = -1, face1 = -1;
    int count = 0;
};
std::vector<MeshEdge> mesh_edges(const ExtractedMesh& mesh);

bool is_watertight(const ExtractedMesh& mesh);
long euler_characteristic(const ExtractedMesh& mesh);

}  // namespace tetgs
