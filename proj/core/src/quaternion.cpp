#include "slicefock/quaternion.hpp"

#include <algorithm>
#include <numbers>

#include "slicefock/errors.hpp"

namespace slicefock {

ImaginaryUnit ImaginaryUnit::from_vector(double x, double y, double z) {
  const double n = std::hypot(x, std::hypot(y, z));
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw DomainError("imaginary unit requires a finite nonzero vector");
  }
  return ImaginaryUnit(x / n, y / n, z / n);
}

ImaginaryUnit perpendicular_unit(const ImaginaryUnit& I) {
  const double ax = std::abs(I.x());
  const double ay = std::abs(I.y());
  const double az = std::abs(I.z());
  // I x e for the axis e with the smallest |component|.
  if (ax <= ay && ax <= az) {
    return ImaginaryUnit::from_vector(0.0, I.z(), -I.y());  // e = (1,0,0)
  }
  if (ay <= az) {
    return ImaginaryUnit::from_vector(-I.z(), 0.0, I.x());  // e = (0,1,0)
  }
  return ImaginaryUnit::from_vector(I.y(), -I.x(), 0.0);  // e = (0,0,1)
}

ImaginaryUnit cross(const ImaginaryUnit& I, const ImaginaryUnit& J) {
  return ImaginaryUnit::from_vector(I.y() * J.z() - I.z() * J.y(), I.z() * J.x() - I.x() * J.z(),
                                    I.x() * J.y() - I.y() * J.x());
}

SliceUnit slice_unit(const Quaternion& q) {
  if (q.is_real()) return {ImaginaryUnit::i(), true};
  return {ImaginaryUnit::from_vector(q.x, q.y, q.z), false};
}

Quaternion TrigForm::reconstruct() const {
  return unit.embed(r * std::cos(a), r * std::sin(a));
}

TrigForm trig_form(const Quaternion& q) {
  const double r = q.norm();
  if (r == 0.0) throw DomainError("no trigonometric form for q = 0");
  const SliceUnit su = slice_unit(q);
  TrigForm t;
  t.r = r;
  t.unit = su.unit;
  t.real_axis = su.real_axis;
  if (su.real_axis) {
    t.a = q.w > 0.0 ? 0.0 : std::numbers::pi;
  } else {
    t.a = std::atan2(q.imag_norm(), q.w);
  }
  return t;
}

Quaternion slice_exp(const ImaginaryUnit& I, double t) { return I.embed(std::cos(t), std::sin(t)); }

std::complex<double> slice_coordinates(const Quaternion& q, const ImaginaryUnit& I) {
  return {q.w, q.x * I.x() + q.y * I.y() + q.z * I.z()};
}

Quaternion qexp(const Quaternion& q) {
  const double e = std::exp(q.w);
  const double v = q.imag_norm();
  if (v == 0.0) return {e};
  const double s = e * std::sin(v) / v;
  return {e * std::cos(v), s * q.x, s * q.y, s * q.z};
}

std::vector<ImaginaryUnit> sphere_grid(std::size_t M) {
  if (M == 0) throw DomainError("sphere_grid requires M >= 1");
  std::vector<ImaginaryUnit> out;
  out.reserve(M);
  const ImaginaryUnit axes[] = {ImaginaryUnit::i(), ImaginaryUnit::j(), ImaginaryUnit::k()};
  for (std::size_t a = 0; a < std::min<std::size_t>(M, 3); ++a) out.push_back(axes[a]);
  if (M <= 3) return out;

  // Fibonacci spiral with a half-step offset in height; its points never hit
  // the poles, so they stay distinct from i, j, k.
  const std::size_t n = M - 3;
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (std::size_t s = 0; s < n; ++s) {
    const double h = 1.0 - (2.0 * static_cast<double>(s) + 1.0) / static_cast<double>(n);
    const double rho = std::sqrt(std::max(0.0, 1.0 - h * h));
    const double phi = golden * static_cast<double>(s) + 0.5;
    out.push_back(ImaginaryUnit::from_vector(rho * std::cos(phi), rho * std::sin(phi), h));
  }
  return out;
}

}  // namespace slicefock
