#pragma once

#include "tetgs/image.hpp"
#include "tetgs/marching_tet.hpp"
#include "tetgs/tet_grid.hpp"

#include <span>
#include <vector>

namespace tetgs {

inline constexpr double kLambdaNorm = 0.03;
inline constexpr double kLambdaMask = 1.0;

// Sum over frozen vertices of (predicted - reference)^2. If `grad` is given it
// is resized to the vertex count and receives the derivative.
double loss_sa(std::span<const double> predicted, const TetGrid& grid, std::vector<double>* grad = nullptr);

// Mean over interior mesh edges (exactly two incident faces) of 1 - n1.n2,
// normals recomputed from positions. Throws InvalidArgument when the mesh has
// no interior edge. `grad_positions` receives dL/dposition per mesh vertex;
// faces flagged in `frozen_faces` contribute to the value but not to the gradient.
double loss_nc(const ExtractedMesh& mesh, std::vector<Vec3>* grad_positions = nullptr,
               std::span<const std::uint8_t> frozen_faces = {});

// sum_i w_i |n_i - n'_i|^2
double loss_p(std::span<const double> weights, std::span<const Vec3> grad_normals, std::span<const Vec3> pred_normals);

// sum_i w_i max(0, n_i . d)^2
double loss_o(std::span<const double> weights, std::span<const Vec3> normals, const Vec3& ray_dir);

// lambda_norm * (mse(front normals) + mse(back normals)) + lambda_mask * mse(front mask),
// where the normal mse averages the squared vector difference over pixels.
double loss_vton(const NormalImage& rendered_front, const NormalImage& rendered_back, const NormalImage& target_front,
                 const NormalImage& target_back, const MaskImage& rendered_mask, const MaskImage& target_mask,
                 double lambda_norm = kLambdaNorm, double lambda_mask = kLambdaMask);

}  // namespace tetgs
