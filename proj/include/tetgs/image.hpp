#pragma once

#include "tetgs/types.hpp"

#include <string>
#include <vector>

namespace tetgs {

// Row-major pixel grid.
template <typename T>
class Image {
  public:
    Image() = default;
    Image(int width, int height, const T& fill = T()) : width_(width), height_(height), pixels_(std::size_t(width) * height, fill) {}

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t size() const { return pixels_.size(); }
    bool same_shape(const Image& other) const { return width_ == other.width_ && height_ == other.height_; }
    template <typename U>
    bool same_shape(const Image<U>& other) const { return width_ == other.width() && height_ == other.height(); }

    T& operator()(int x, int y) { return pixels_[std::size_t(y) * width_ + x]; }
    const T& operator()(int x, int y) const { return pixels_[std::size_t(y) * width_ + x]; }
    T& operator[](std::size_t i) { return pixels_[i]; }
    const T& operator[](std::size_t i) const { return pixels_[i]; }

    std::vector<T>& pixels() { return pixels_; }
    const std::vector<T>& pixels() const { return pixels_; }

  private:
    int width_ = 0;
    int height_ = 0;
    std::vector<T> pixels_;
};

using ColorImage = Image<Vec3>;   // rgb in [0,1]
using NormalImage = Image<Vec3>;  // unit vectors (zero where empty)
using MaskImage = Image<double>;  // binary or soft in [0,1]
using DepthImage = Image<double>; // camera-space z, world units

// Throws DimensionError unless a and b have the same shape.
template <typename A, typename B>
void require_same_shape(const Image<A>& a, const Image<B>& b, const char* what) {
    if (a.width() != b.width() || a.height() != b.height())
        throw DimensionError(std::string(what) + ": image dimensions differ (" + std::to_string(a.width()) + "x" +
                             std::to_string(a.height()) + " vs " + std::to_string(b.width()) + "x" +
                             std::to_string(b.height()) + ")");
}

// Box-filter downsampling by an integer factor.
ColorImage downsample(const ColorImage& image, int factor);

}  // namespace tetgs
