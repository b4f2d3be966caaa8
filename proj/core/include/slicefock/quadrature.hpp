#pragma once

// Gaussian-weighted quadrature on a slice C_I and on H.
//
// Radial integrals use Gauss-Laguerre in s = c r^2. Slice mode uses the plain
// Laguerre weight e^{-s} (r dr = ds / 2c); volume mode the generalized weight
// s e^{-s} (rho^3 drho = s ds / 2c^2). Node weights are stored as logarithms of
// w_i e^{s_i} times the measure factor, so a caller can assemble
// exp(p (log|f| - alpha r^2 / 2) + log_weight) without forming e^{s} itself.

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "slicefock/quaternion.hpp"

namespace slicefock {

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Componentwise compensated sum of quaternions.
class QuaternionSum {
 public:
  void add(const Quaternion& q) {
    w_.add(q.w);
    x_.add(q.x);
    y_.add(q.y);
    z_.add(q.z);
  }
  Quaternion value() const { return {w_.value(), x_.value(), y_.value(), z_.value()}; }

 private:
  CompensatedSum w_, x_, y_, z_;
};

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre rule on [-1, 1].
GaussRule gauss_legendre(std::size_t n);

struct LaguerreRule {
  std::vector<double> nodes;
  /// log(w_i e^{s_i}) for the weight s^a e^{-s} on [0, inf).
  std::vector<double> log_scaled_weights;
};

/// Generalized Gauss-Laguerre rule (Golub-Welsch nodes, Newton-polished).
LaguerreRule gauss_laguerre(std::size_t n, double a);

enum class GridMode { kSlice, kVolume };

struct GridSizes {
  std::size_t radial = 64;
  std::size_t angular = 128;
  std::size_t sphere = 64;
};

struct RadialNode {
  double r;
  /// s = scale * r^2.
  double s;
  /// log of w e^{s} times the radial measure factor (1/2c or 1/2c^2).
  double log_weight;
};

struct SphereNode {
  ImaginaryUnit u;
  double weight;
};

class QuadratureGrid {
 public:
  /// `scale` is c in s = c r^2 and must be positive.
  QuadratureGrid(GridMode mode, double scale, GridSizes sizes = {});

  GridMode mode() const { return mode_; }
  double scale() const { return scale_; }
  const GridSizes& sizes() const { return sizes_; }

  const std::vector<RadialNode>& radial() const { return radial_; }
  /// e^{i theta_l} with theta_l = -pi + 2 pi l / N.
  const std::vector<std::complex<double>>& directions() const { return directions_; }
  double theta(std::size_t l) const;
  /// 2 pi / N in slice mode; pi / N sin^2(theta_l) in volume mode, where the full
  /// periodic circle counts every point of H twice.
  double angular_weight(std::size_t l) const;
  /// Sphere rule (volume mode only); weights sum to 4 pi.
  const std::vector<SphereNode>& sphere() const { return sphere_; }

  /// Grid with radial and angular counts doubled.
  QuadratureGrid refined() const;

 private:
  GridMode mode_;
  double scale_;
  GridSizes sizes_;
  std::vector<RadialNode> radial_;
  std::vector<std::complex<double>> directions_;
  std::vector<SphereNode> sphere_;
};

/// Polar-angle Gauss-Legendre times uniform azimuth; round(sqrt(M/2)) polar nodes
/// and twice as many azimuths.
std::vector<SphereNode> sphere_rule(std::size_t M);

/// Integral of g over C_I with plain area measure. g must include its own decay.
/// Throws IntegrandOverflow on non-finite samples.
double integrate_slice(const std::function<double(const Quaternion&)>& g, const ImaginaryUnit& I,
                       const QuadratureGrid& grid);
Quaternion integrate_slice_q(const std::function<Quaternion(const Quaternion&)>& g,
                             const ImaginaryUnit& I, const QuadratureGrid& grid);

/// Integral of g over H with Lebesgue measure, q = rho (cos theta + u sin theta).
double integrate_volume(const std::function<double(const Quaternion&)>& g,
                        const QuadratureGrid& grid);
Quaternion integrate_volume_q(const std::function<Quaternion(const Quaternion&)>& g,
                              const QuadratureGrid& grid);

/// Periodic trapezoid rule for the integral of h over [-pi, pi] with N nodes.
double circle_average(const std::function<double(double)>& h, std::size_t N);

}  // namespace slicefock
