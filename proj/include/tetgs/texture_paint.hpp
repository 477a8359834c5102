#pragma once

#include "tetgs/camera.hpp"
#include "tetgs/gauss_embed.hpp"
#include "tetgs/image.hpp"
#include "tetgs/marching_tet.hpp"
#include "tetgs/splat_render.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace tetgs {

// Gaussian blur with sigma = radius (truncated at 3 sigma, zero padded), clamped to [0,1].
MaskImage blur_mask(const MaskImage& mask, double radius);

// m * paint + (1 - m) * rendered, per pixel.
ColorImage blend(const ColorImage& paint, const ColorImage& rendered, const MaskImage& blurred);

// mean |a - b| + lambda * (1 - SSIM(a, b)); SSIM over an 11x11 Gaussian window
// (sigma 1.5), zero padded, averaged over pixels and channels. `grad` receives
// the derivative with respect to `rendered`.
double loss_recon(const ColorImage& rendered, const ColorImage& target, double lambda_ssim, ColorImage* grad = nullptr);

// Painting progress over the edit faces of one mesh.
struct PaintState {
    std::vector<int> edit_faces;       // sorted mesh face ids
    std::vector<std::uint8_t> labels;  // parallel to edit_faces, 1 = uncolored
    std::vector<Camera> schedule;
    int iteration = 0;

    // Label per mesh face (0 for faces outside the edit set).
    std::vector<std::uint8_t> face_labels(std::size_t face_count) const;
    // Position of `face` in edit_faces or -1.
    int label_index(int face) const;
    std::size_t uncolored() const;
};

PaintState make_paint_state(std::vector<int> edit_faces, std::vector<Camera> schedule);

class ViewPainter {
  public:
    virtual ~ViewPainter() = default;
    // Painted image with the dimensions of `rendered`, values in [0,1].
    virtual ColorImage paint(const ColorImage& rendered, const NormalImage& normals, const MaskImage& uncolored,
                             const Camera& camera) const = 0;
};

using TextureFn = std::function<Vec3(const Vec3&)>;

// Ground-truth appearance: a mesh colored by a procedural texture, rendered by
// z-buffer with `supersample`^2 samples per pixel.
class ReferenceScene {
  public:
    ReferenceScene(std::shared_ptr<const ExtractedMesh> mesh, TextureFn texture, Vec3 background, int supersample = 3);
    ColorImage render(const Camera& camera) const;
    const TextureFn& texture() const { return texture_; }
    const Vec3& background() const { return background_; }

  private:
    std::shared_ptr<const ExtractedMesh> mesh_;
    TextureFn texture_;
    Vec3 background_;
    int supersample_;
};

// Smooth multi-frequency color pattern used by the synthetic scenes.
Vec3 procedural_texture(const Vec3& p);

// Sets rgb of the listed kernels (all when empty) to the texture at their position.
void color_from_texture(GaussianSet& set, const TextureFn& texture, std::span<const int> indices = {});

class OraclePainter final : public ViewPainter {
  public:
    explicit OraclePainter(const ReferenceScene& scene) : scene_(scene) {}
    ColorImage paint(const ColorImage& rendered, const NormalImage& normals, const MaskImage& uncolored,
                     const Camera& camera) const override;

  private:
    const ReferenceScene& scene_;
};

// Oracle plus uniform noise in [-amplitude, amplitude], clamped to [0,1].
class NoisePainter final : public ViewPainter {
  public:
    NoisePainter(const ReferenceScene& scene, double amplitude, std::uint64_t seed)
        : scene_(scene), amplitude_(amplitude), rng_(seed) {}
    ColorImage paint(const ColorImage& rendered, const NormalImage& normals, const MaskImage& uncolored,
                     const Camera& camera) const override;

  private:
    const ReferenceScene& scene_;
    double amplitude_;
    mutable std::mt19937_64 rng_;
};

// Returns `rendered` unchanged.
class IdentityPainter final : public ViewPainter {
  public:
    ColorImage paint(const ColorImage& rendered, const NormalImage&, const MaskImage&, const Camera&) const override {
        return rendered;
    }
};

struct PaintOptions {
    double blur_radius = 4.0;
    double threshold = 0.5;
    int inner_steps = 60;
    double learning_rate = 0.03;
    double final_lr_fraction = 0.1;  // exponential decay over the inner loop
    double lambda_ssim = 0.2;
    Vec3 background = Vec3::Constant(0.5);
    double cell_size = 0.0;  // visibility tolerance is half of this
};

// Mesh faces whose centroid is visible from `camera` and lands on a pixel with mask > threshold.
std::vector<int> masked_faces(const ExtractedMesh& mesh, const MaskImage& mask, const Camera& camera, double threshold,
                              double cell_size);

// Edit-face kernels on the faces selected by masked_faces.
std::vector<int> trainable_subset(const GaussianSet& gaussians, const PaintState& state, const MaskImage& blurred,
                                  const Camera& camera, double threshold, double cell_size);

struct PaintViewLog {
    int iteration = 0;
    int view = 0;
    double loss_first = 0.0;
    double loss_last = 0.0;
    std::size_t trainable = 0;
    std::size_t faces_painted = 0;
};

struct PaintStepResult {
    GaussianSet gaussians;
    PaintState state;
    std::vector<PaintViewLog> log;  // one row per view of the step
};

// One progressive painting step over one or more simultaneous views (their
// losses are summed in a single inner loop).
PaintStepResult paint_step(const PaintState& state, const GaussianSet& gaussians, const ViewPainter& painter,
                           std::span<const Camera> cameras, const PaintOptions& options);

// Runs the full schedule: the first two cameras (front and back) together, the rest one by one.
PaintStepResult paint_schedule(const PaintState& state, const GaussianSet& gaussians, const ViewPainter& painter,
                               const PaintOptions& options);

struct ScheduleOptions {
    double focal = 300.0;
    int width = 256;
    int height = 256;
};

// Azimuths 0 and 180 first, then the remaining 30-degree stops alternating
// around the front, for each elevation in turn. Up is +z; azimuth 0 views from -y.
std::vector<Camera> view_schedule(const Vec3& center, double radius, std::span<const double> elevations_deg,
                                  const ScheduleOptions& options = {});
inline constexpr double kDefaultElevations[] = {0.0, 20.0, -20.0};

// Lifts restricted disks to free kernels without changing the render.
// Only the listed kernels are touched (all kernels when `indices` is empty).
GaussianSet activate_attributes(const GaussianSet& gaussians, std::span<const int> indices = {});

struct RefineOptions {
    int steps = 300;
    double sh_lr = 0.01;
    double opacity_lr = 0.01;
    double lambda_ssim = 0.2;
    int geometry_every = 4;          // random-search step on tau and scale every k steps (0 = off)
    double tau_step = 0.0;           // world units; 0 = 0.05 * cell_size
    double log_scale_step = 0.05;
    double converged_loss = 1e-12;  // a view already this close is skipped
    double cell_size = 0.0;
    Vec3 background = Vec3::Constant(0.5);
    std::uint64_t seed = 0;
};

// Optimizes SH, opacity (Adam) and tau, scale (accept-if-better random search)
// of the listed free kernels against the given views; other kernels are not touched.
GaussianSet refine(const GaussianSet& gaussians, std::span<const std::pair<Camera, ColorImage>> images,
                   std::span<const int> trainable, const RefineOptions& options);

}  // namespace tetgs
