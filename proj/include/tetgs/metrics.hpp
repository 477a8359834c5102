#pragma once

#include "tetgs/image.hpp"

namespace tetgs {

inline constexpr double kPsnrCap = 99.0;
inline constexpr int kSsimWindow = 11;
inline constexpr double kSsimSigma = 1.5;
inline constexpr double kSsimC1 = 0.01 * 0.01;
inline constexpr double kSsimC2 = 0.03 * 0.03;

// 10 log10(1 / MSE) over pixels and channels, capped at kPsnrCap.
double psnr(const ColorImage& a, const ColorImage& b);

// Mean SSIM over pixels and channels with an 11x11 Gaussian window (sigma 1.5),
// zero padding at the borders. `grad_a` receives d(mean SSIM)/d(a).
double ssim(const ColorImage& a, const ColorImage& b, ColorImage* grad_a = nullptr);

double mean_abs_error(const ColorImage& a, const ColorImage& b);

}  // namespace tetgs
