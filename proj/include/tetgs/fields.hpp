#pragma once

#include "tetgs/types.hpp"

#include <functional>
#include <memory>
#include <vector>

namespace tetgs {

// Point -> signed distance (negative inside). Implementations must be pure.
class ScalarField {
  public:
    virtual ~ScalarField() = default;
    virtual double operator()(const Vec3& p) const = 0;
};

using FieldPtr = std::shared_ptr<const ScalarField>;

class SphereField final : public ScalarField {
  public:
    SphereField(Vec3 center, double radius) : center_(std::move(center)), radius_(radius) {}
    double operator()(const Vec3& p) const override { return (p - center_).norm() - radius_; }
    const Vec3& center() const { return center_; }
    double radius() const { return radius_; }

  private:
    Vec3 center_;
    double radius_;
};

// n·p - offset with n normalized.
class PlaneField final : public ScalarField {
  public:
    PlaneField(const Vec3& normal, double offset) : normal_(normal.normalized()), offset_(offset) {}
    double operator()(const Vec3& p) const override { return normal_.dot(p) - offset_; }

  private:
    Vec3 normal_;
    double offset_;
};

class ConstantField final : public ScalarField {
  public:
    explicit ConstantField(double value) : value_(value) {}
    double operator()(const Vec3&) const override { return value_; }

  private:
    double value_;
};

// Axis-aligned box, exact distance outside and inside.
class BoxField final : public ScalarField {
  public:
    BoxField(Vec3 center, Vec3 half_extent) : center_(std::move(center)), half_(std::move(half_extent)) {}
    double operator()(const Vec3& p) const override;

  private:
    Vec3 center_;
    Vec3 half_;
};

// min over children (set union).
class UnionField final : public ScalarField {
  public:
    explicit UnionField(std::vector<FieldPtr> children);
    double operator()(const Vec3& p) const override;
    const std::vector<FieldPtr>& children() const { return children_; }

  private:
    std::vector<FieldPtr> children_;
};

// Wraps an arbitrary callable; handy in tests.
class FunctionField final : public ScalarField {
  public:
    explicit FunctionField(std::function<double(const Vec3&)> fn) : fn_(std::move(fn)) {}
    double operator()(const Vec3& p) const override { return fn_(p); }

  private:
    std::function<double(const Vec3&)> fn_;
};

}  // namespace tetgs
