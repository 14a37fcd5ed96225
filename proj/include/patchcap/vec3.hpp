#pragma once

#include <array>
#include <cmath>

namespace patchcap {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3() = default;
  constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }

  constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  constexpr Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm() const { return std::sqrt(dot(*this)); }

  constexpr std::array<double, 3> to_array() const { return {x, y, z}; }
  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double distance(const Vec3& a, const Vec3& b) { return (a - b).norm(); }

/// Point on the unit sphere. Construction normalizes or validates; the norm is
/// 1 within 1e-12.
class UnitVector3 {
 public:
  /// Normalizes v; DomainError for the zero vector or non-finite input.
  static UnitVector3 normalized(const Vec3& v);
  /// Accepts v only if | |v| - 1 | <= tol; otherwise DomainError.
  static UnitVector3 checked(const Vec3& v, double tol = 1e-12);

  const Vec3& vec() const { return v_; }
  double x() const { return v_.x; }
  double y() const { return v_.y; }
  double z() const { return v_.z; }

  friend bool operator==(const UnitVector3&, const UnitVector3&) = default;

 private:
  explicit UnitVector3(const Vec3& v) : v_(v) {}
  Vec3 v_;
};

/// 3x3 rotation stored row-major; used to move vectors between a local frame
/// whose north pole is a given direction and the global frame.
struct Rotation3 {
  std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

  Vec3 apply(const Vec3& v) const {
    return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
            m[3] * v.x + m[4] * v.y + m[5] * v.z,
            m[6] * v.x + m[7] * v.y + m[8] * v.z};
  }
  /// Rotation by `angle` radians about the unit axis (Rodrigues).
  static Rotation3 about_axis(const Vec3& axis, double angle);
};

/// Orthonormal frame (e1, e2, pole) with `pole` as the local north pole.
struct LocalFrame {
  Vec3 e1;
  Vec3 e2;
  Vec3 pole;

  static LocalFrame around(const Vec3& unit_pole);
  /// Global point for local spherical angles (theta from the pole, phi azimuth).
  Vec3 point(double cos_theta, double sin_theta, double phi) const {
    return pole * cos_theta + (e1 * std::cos(phi) + e2 * std::sin(phi)) * sin_theta;
  }
};

}  // namespace patchcap
