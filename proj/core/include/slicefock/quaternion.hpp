#pragma once

// Quaternion arithmetic, the sphere of imaginary units, trigonometric form and
// slice exponentials.
//
// Components are (w, x, y, z) with q = w + x i + y j + z k; w is the real part.
// Literature that indexes components as x0..x3 or x1..x4 maps onto (w, x, y, z)
// in that order.

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace slicefock {

struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0)
      : w(w_), x(x_), y(y_), z(z_) {}

  constexpr double real() const { return w; }
  constexpr Quaternion imag() const { return {0.0, x, y, z}; }
  constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
  constexpr double norm2() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::hypot(std::hypot(w, x), std::hypot(y, z)); }
  double imag_norm() const { return std::hypot(x, std::hypot(y, z)); }
  constexpr bool is_real() const { return x == 0.0 && y == 0.0 && z == 0.0; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w;
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w;
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s;
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }
  constexpr Quaternion& operator/=(double s) {
    w /= s;
    x /= s;
    y /= s;
    z /= s;
    return *this;
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a /= s; }

/// Hamilton product: ij = k, jk = i, ki = j.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

inline Quaternion inverse(const Quaternion& q) { return q.conj() / q.norm2(); }

/// Euclidean inner product of the coefficient 4-vectors, equal to Re(conj(a) b).
constexpr double dot4(const Quaternion& a, const Quaternion& b) {
  return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

/// A unit-length purely imaginary quaternion, an element of the sphere S.
class ImaginaryUnit {
 public:
  /// Normalizes (x, y, z); throws DomainError for the zero vector or non-finite input.
  static ImaginaryUnit from_vector(double x, double y, double z);

  static constexpr ImaginaryUnit i() { return ImaginaryUnit(1.0, 0.0, 0.0); }
  static constexpr ImaginaryUnit j() { return ImaginaryUnit(0.0, 1.0, 0.0); }
  static constexpr ImaginaryUnit k() { return ImaginaryUnit(0.0, 0.0, 1.0); }

  constexpr double x() const { return x_; }
  constexpr double y() const { return y_; }
  constexpr double z() const { return z_; }
  constexpr Quaternion as_quaternion() const { return {0.0, x_, y_, z_}; }
  constexpr ImaginaryUnit operator-() const { return ImaginaryUnit(-x_, -y_, -z_); }

  constexpr double dot(const ImaginaryUnit& o) const { return x_ * o.x_ + y_ * o.y_ + z_ * o.z_; }

  /// The point a + b I of the slice C_I.
  constexpr Quaternion embed(double a, double b) const { return {a, b * x_, b * y_, b * z_}; }
  constexpr Quaternion embed(std::complex<double> c) const { return embed(c.real(), c.imag()); }

  friend constexpr bool operator==(const ImaginaryUnit&, const ImaginaryUnit&) = default;

 private:
  constexpr ImaginaryUnit(double x, double y, double z) : x_(x), y_(y), z_(z) {}
  double x_;
  double y_;
  double z_;
};

/// Deterministic unit perpendicular to I: normalize(I x e) for the canonical axis e
/// least aligned with I.
ImaginaryUnit perpendicular_unit(const ImaginaryUnit& I);

/// Third member of the right-handed frame (I, J, IJ); requires I perpendicular to J.
ImaginaryUnit cross(const ImaginaryUnit& I, const ImaginaryUnit& J);

struct SliceUnit {
  ImaginaryUnit unit = ImaginaryUnit::i();
  /// True when the input was real and `unit` is the default choice i.
  bool real_axis = false;
};

/// I_q = Im(q)/|Im(q)|. Real input yields the default unit i with `real_axis` set.
SliceUnit slice_unit(const Quaternion& q);

struct TrigForm {
  double r = 0.0;
  double a = 0.0;
  ImaginaryUnit unit = ImaginaryUnit::i();
  bool real_axis = false;

  Quaternion reconstruct() const;
};

/// q = r (cos a + I sin a) with a in [0, pi]. Throws DomainError for q = 0.
TrigForm trig_form(const Quaternion& q);

/// cos t + I sin t.
Quaternion slice_exp(const ImaginaryUnit& I, double t);

/// Coordinates (a, b) of q = a + b I within the slice C_I. The caller guarantees q is in C_I.
std::complex<double> slice_coordinates(const Quaternion& q, const ImaginaryUnit& I);

/// Quaternionic exponential, exp(w + v) = e^w (cos|v| + v/|v| sin|v|).
Quaternion qexp(const Quaternion& q);

/// M deterministic, approximately equidistributed units. The first min(M, 3) are
/// i, j, k; the rest follow a Fibonacci spiral. Throws DomainError for M = 0.
std::vector<ImaginaryUnit> sphere_grid(std::size_t M);

}  // namespace slicefock
