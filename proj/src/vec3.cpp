#include "patchcap/vec3.hpp"

#include <cmath>

#include "patchcap/errors.hpp"

namespace patchcap {

UnitVector3 UnitVector3::normalized(const Vec3& v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw DomainError("cannot normalize a zero or non-finite vector");
  }
  return UnitVector3(v / n);
}

UnitVector3 UnitVector3::checked(const Vec3& v, double tol) {
  const double n = v.norm();
  if (!(std::abs(n - 1.0) <= tol)) {
    throw DomainError("vector is not of unit length (norm " + std::to_string(n) + ")");
  }
  return UnitVector3(v);
}

Rotation3 Rotation3::about_axis(const Vec3& axis, double angle) {
  const Vec3 u = UnitVector3::normalized(axis).vec();
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const double t = 1.0 - c;
  Rotation3 r;
  r.m = {t * u.x * u.x + c,       t * u.x * u.y - s * u.z, t * u.x * u.z + s * u.y,
         t * u.x * u.y + s * u.z, t * u.y * u.y + c,       t * u.y * u.z - s * u.x,
         t * u.x * u.z - s * u.y, t * u.y * u.z + s * u.x, t * u.z * u.z + c};
  return r;
}

LocalFrame LocalFrame::around(const Vec3& unit_pole) {
  // Pick the global axis least aligned with the pole to seed Gram-Schmidt.
  const Vec3 seed = std::abs(unit_pole.x) < 0.6 ? Vec3{1, 0, 0}
                    : std::abs(unit_pole.y) < 0.6 ? Vec3{0, 1, 0}
                                                  : Vec3{0, 0, 1};
  Vec3 e1 = seed - unit_pole * seed.dot(unit_pole);
  e1 = e1 / e1.norm();
  const Vec3 e2 = unit_pole.cross(e1);
  return {e1, e2, unit_pole};
}

}  // namespace patchcap
