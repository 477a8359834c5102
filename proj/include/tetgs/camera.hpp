#pragma once

#include "tetgs/types.hpp"

#include <optional>

namespace tetgs {

// Pinhole camera, OpenCV convention (x right, y down, z forward). Pixel
// (i, j) has its center at (i, j).
struct Camera {
    double fx = 1.0, fy = 1.0, cx = 0.0, cy = 0.0;
    int width = 1, height = 1;
    Quat rotation = Quat::Identity();   // world -> camera
    Vec3 translation = Vec3::Zero();    // world -> camera

    Mat3 rotation_matrix() const { return rotation.toRotationMatrix(); }
    Vec3 to_camera(const Vec3& world) const { return rotation * world + translation; }
    Vec3 center() const { return -(rotation.conjugate() * translation); }
    Vec3 forward() const { return rotation.conjugate() * Vec3::UnitZ(); }
    std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }

    // Throws InvalidArgument when fx, fy <= 0 or the image is empty.
    void validate() const;
};

struct Projection {
    Vec2 pixel;
    double depth;
};

// Returns nullopt for points at or behind the camera plane.
std::optional<Projection> project(const Camera& camera, const Vec3& world);
Vec3 unproject(const Camera& camera, const Vec2& pixel, double depth);

// Camera at `eye` looking at `target` with `up` hinting the image's upward direction.
Camera look_at(const Vec3& eye, const Vec3& target, const Vec3& up, double focal, int width, int height);

// Same intrinsics at `factor` times the resolution; subpixel centers line up
// with the original pixel footprints.
Camera supersampled(const Camera& camera, int factor);

}  // namespace tetgs
