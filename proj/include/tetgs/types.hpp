#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tetgs {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Quat = Eigen::Quaterniond;

// Axis-aligned box.
struct Aabb {
    Vec3 min = Vec3::Zero();
    Vec3 max = Vec3::Ones();

    Vec3 extent() const { return max - min; }
    double volume() const { return extent().prod(); }
};

// Base of all library errors. `kind()` is the machine-readable category used
// by the CLI error JSON.
class Error : public std::runtime_error {
  public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

  private:
    std::string kind_;
};

class InvalidArgument : public Error {
  public:
    explicit InvalidArgument(const std::string& what) : Error("invalid_argument", what) {}
};

// Mismatched image/array sizes.
class DimensionError : public Error {
  public:
    explicit DimensionError(const std::string& what) : Error("dimension_mismatch", what) {}
};

// Scalar field returned a non-finite value.
class EvaluationError : public Error {
  public:
    EvaluationError(std::size_t vertex, const std::string& what)
        : Error("evaluation", what), vertex_(vertex) {}
    std::size_t vertex() const noexcept { return vertex_; }

  private:
    std::size_t vertex_;
};

// Grid or mesh invariant violated.
class StructuralError : public Error {
  public:
    explicit StructuralError(const std::string& what) : Error("structural", what) {}
};

// Keep-region data changed where it must not.
class IntegrityError : public Error {
  public:
    explicit IntegrityError(const std::string& what) : Error("integrity", what) {}
};

// Optimization produced a non-finite loss.
class DivergenceError : public Error {
  public:
    DivergenceError(int step, const std::string& what) : Error("divergence", what), step_(step) {}
    int step() const noexcept { return step_; }

  private:
    int step_;
};

// Backward pass called with a scene that differs from the forward cache.
class StaleCacheError : public Error {
  public:
    explicit StaleCacheError(const std::string& what) : Error("stale_cache", what) {}
};

class IoError : public Error {
  public:
    explicit IoError(const std::string& what) : Error("io", what) {}
};

}  // namespace tetgs
