#pragma once

#include "tetgs/camera.hpp"
#include "tetgs/image.hpp"
#include "tetgs/marching_tet.hpp"

#include <array>
#include <vector>

namespace tetgs {

// Z-buffer of a triangle mesh sampled at pixel centers. Empty pixels have
// infinite depth and face -1.
struct MeshRaster {
    DepthImage depth;
    Image<int> face;
};

MeshRaster rasterize_mesh(const ExtractedMesh& mesh, const Camera& camera);

// Per-face centroid visibility: the centroid projects inside the image and its
// depth is within `tolerance` of the z-buffer at the nearest pixel.
struct CentroidVisibility {
    std::vector<std::uint8_t> visible;
    std::vector<std::array<int, 2>> pixel;  // nearest pixel of the centroid (valid when visible)
};

CentroidVisibility centroid_visibility(const ExtractedMesh& mesh, const Camera& camera, const MeshRaster& raster,
                                       double tolerance);

}  // namespace tetgs
