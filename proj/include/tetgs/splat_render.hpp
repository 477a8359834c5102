#pragma once

#include "tetgs/camera.hpp"
#include "tetgs/gauss_embed.hpp"
#include "tetgs/image.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace tetgs {

inline constexpr double kFootprintCutoff = 3.0;     // in standard deviations
inline constexpr double kMinFootprintSigma = 0.3;   // pixels
inline constexpr double kTransmittanceStop = 1e-4;
inline constexpr double kNearPlane = 1e-2;
inline constexpr int kTileSize = 16;
inline constexpr double kShC0 = 0.28209479177387814;  // degree-0 SH basis value

enum Channel : unsigned {
    kChannelColor = 1u << 0,
    kChannelAlpha = 1u << 1,
    kChannelNormal = 1u << 2,
    kChannelDepth = 1u << 3,
    kChannelUncolored = 1u << 4,
    kChannelFrontFace = 1u << 5,
    kChannelAll = 0x3fu,
};

struct RenderOptions {
    Vec3 background = Vec3::Zero();
    unsigned channels = kChannelAll;
    // Per-face label, 1 = uncolored. Empty means every face is colored.
    std::span<const std::uint8_t> face_labels;
    // Depth slack of the centroid test that also marks the centroid pixel of
    // every visible label-1 face (keeps sub-pixel faces in the mask).
    double visibility_tolerance = 0.0;
};

struct RenderCache;

// Images not requested in RenderOptions::channels are left empty.
struct RenderResult {
    ColorImage color;
    MaskImage alpha;
    NormalImage normal;     // composited face normals, renormalized; zero where empty
    DepthImage depth;       // alpha-normalized kernel depth; 0 where empty
    MaskImage uncolored;    // 1 where the z-buffered front-most mesh face has label 1
    Image<int> front_face;  // face of the dominant (largest weight) kernel, -1 where empty
    std::shared_ptr<const RenderCache> cache;
};

RenderResult render(const GaussianSet& gaussians, const ExtractedMesh& mesh, const Camera& camera,
                    const RenderOptions& options = {});

// Gradients of a scalar loss given dL/dcolor per pixel of the forward color image.
// `color` is with respect to each kernel's evaluated color (rgb for restricted
// disks), `sh` with respect to the SH coefficients (free kernels only, zero otherwise).
struct ColorGradients {
    std::vector<Vec3> color;
    std::vector<double> opacity;
    std::vector<ShCoeffs> sh;
};

// Throws StaleCacheError if gaussians/mesh/camera differ from the forward pass
// that produced `forward`, DimensionError if loss_grad has the wrong size.
ColorGradients backward_color(const GaussianSet& gaussians, const ExtractedMesh& mesh, const Camera& camera,
                              const RenderResult& forward, const ColorImage& loss_grad);

// Real SH basis up to degree 3 for a unit direction.
std::array<double, kShCoeffs> sh_basis(const Vec3& dir);
// Color of a kernel seen from `eye`: rgb for restricted disks, clamp(SH + 0.5) for free kernels.
Vec3 kernel_color(const GaussianKernel& kernel, const Vec3& position, const Vec3& eye);

// World-space covariance R diag(scale)^2 R^T.
Mat3 kernel_covariance(const GaussianKernel& kernel);

// Hash of everything a render depends on.
std::uint64_t scene_fingerprint(const GaussianSet& gaussians, const ExtractedMesh& mesh, const Camera& camera,
                                const Vec3& background);

}  // namespace tetgs
