#pragma once

#include "tetgs/camera.hpp"
#include "tetgs/gauss_embed.hpp"
#include "tetgs/image.hpp"
#include "tetgs/marching_tet.hpp"
#include "tetgs/tet_grid.hpp"

#include <span>
#include <vector>

namespace tetgs {

// A camera with a binary mask; pixels > 0.5 mark the preserved region.
struct MaskView {
    Camera camera;
    MaskImage mask;
};

inline constexpr double kDefaultAgreement = 0.5;

struct FaceSplit {
    std::vector<int> keep_faces;
    std::vector<int> edit_faces;
};

// Majority-style vote over the views in which a face centroid is visible
// (z-buffer test with 0.5 * cell_size tolerance). Faces never visible are keep.
FaceSplit classify_faces(const ExtractedMesh& mesh, std::span<const MaskView> views, double agreement, double cell_size);

// All index lists are sorted ascending.
struct PartitionResult {
    std::vector<int> keep_faces, edit_faces;
    std::vector<int> keep_tets, edit_tets;
    std::vector<int> keep_verts, edit_verts;

    std::vector<std::uint8_t> keep_tet_mask(std::size_t tet_count) const;
    std::vector<std::uint8_t> keep_vertex_mask(std::size_t vertex_count) const;
};

PartitionResult partition_tets(const ExtractedMesh& mesh, std::span<const int> keep_faces, const TetGrid& grid);

// frozen = keep_verts, reference_sdf = current sdf.
TetGrid freeze(TetGrid grid, const PartitionResult& partition);

// Kernels whose parent tet is a keep tet.
std::vector<int> keep_kernels(const GaussianSet& set, const PartitionResult& partition, std::size_t tet_count);

}  // namespace tetgs
