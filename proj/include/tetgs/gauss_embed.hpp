#pragma once

#include "tetgs/marching_tet.hpp"

#include <array>
#include <memory>
#include <span>
#include <vector>

namespace tetgs {

enum class KernelMode : std::uint8_t { restricted_disk = 0, free_3d = 1 };

inline constexpr int kShDegree = 3;
inline constexpr int kShCoeffs = (kShDegree + 1) * (kShDegree + 1);
inline constexpr double kRestrictedOpacity = 0.95;
inline constexpr double kInitialScaleFactor = 0.8;

using ShCoeffs = std::array<Vec3, kShCoeffs>;

// Eigen leaves default-constructed vectors uninitialized, so `ShCoeffs{}` is not zero.
inline ShCoeffs zero_sh() {
    ShCoeffs sh;
    sh.fill(Vec3::Zero());
    return sh;
}

// One splatting kernel bound to a mesh face.
//
// Restricted disks live in the face plane: tau = 0, scale.z() = 0, opacity is
// kRestrictedOpacity and `rgb` is the (view-independent) color. Free kernels
// use `sh` for color and may move along the normal by tau.
struct GaussianKernel {
    int face = 0;
    std::array<double, 3> weights = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
    double tau = 0.0;
    Vec3 scale = Vec3::Zero();
    Quat rotation = Quat::Identity();  // world-space; local z is the face normal at allocation
    Vec3 rgb = Vec3::Constant(0.5);
    ShCoeffs sh = zero_sh();
    double opacity = kRestrictedOpacity;
    int parent_tet = 0;
    KernelMode mode = KernelMode::restricted_disk;
};

// Bitwise equality of every attribute; `face` is skipped when compare_face is false.
bool bitwise_equal(const GaussianKernel& a, const GaussianKernel& b, bool compare_face = true);

struct GaussianSet {
    std::vector<GaussianKernel> kernels;
    std::shared_ptr<const ExtractedMesh> mesh;

    std::size_t size() const { return kernels.size(); }
};

// Kernels per face: 3 when the face area is strictly above the mesh mean, else 1.
int kernels_for_face(double area, double mean_area);

// Unit-length orthonormal frame (tangent, bitangent, normal) of a face.
Quat face_frame(const ExtractedMesh& mesh, int face);

// Area-driven allocation over all faces.
GaussianSet allocate(std::shared_ptr<const ExtractedMesh> mesh);
// Same policy (mean taken over the whole mesh) restricted to `faces`, appended in their order.
GaussianSet allocate(std::shared_ptr<const ExtractedMesh> mesh, std::span<const int> faces);

// Barycentric point of the kernel's face plus tau along the face normal.
Vec3 position(const GaussianKernel& kernel, const ExtractedMesh& mesh);

// Keep kernels carried over bit-identically (face index remapped to the face of
// `new_mesh` with the same parent tet and bitwise-equal vertex positions),
// followed by fresh kernels on `edit_faces`. Throws IntegrityError when a keep
// kernel's face geometry is not present in `new_mesh`.
GaussianSet reallocate(const GaussianSet& keep, std::shared_ptr<const ExtractedMesh> new_mesh,
                       std::span<const int> edit_faces);

// Kernels of `set` whose parent tet is flagged in `tet_mask`.
std::vector<int> kernels_in_tets(const GaussianSet& set, std::span<const std::uint8_t> tet_mask);
GaussianSet subset(const GaussianSet& set, std::span<const int> kernel_indices);

}  // namespace tetgs
