#include "slicefock/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "slicefock/errors.hpp"

namespace slicefock {
namespace {

constexpr double kPi = std::numbers::pi;

/// Eigenvalues and first eigenvector components of a symmetric tridiagonal matrix.
void tridiagonal_eigen(const std::vector<double>& diag, const std::vector<double>& off,
                       std::vector<double>& values, std::vector<double>& first) {
  const std::size_t n = diag.size();
  Eigen::VectorXd d(n);
  Eigen::VectorXd e(n > 0 ? n - 1 : 0);
  for (std::size_t i = 0; i < n; ++i) d(i) = diag[i];
  for (std::size_t i = 0; i + 1 < n; ++i) e(i) = off[i];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(d, e, Eigen::ComputeEigenvectors);
  values.resize(n);
  first.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    values[i] = solver.eigenvalues()(i);
    first[i] = solver.eigenvectors()(0, i);
  }
}

struct LaguerreEval {
  double log_sum_sq;  // log sum_{j<n} ptilde_j(s)^2
  double ratio;       // ptilde_n(s) / ptilde_n'(s)
};

/// Orthonormal generalized Laguerre recurrence with rescaling against overflow.
LaguerreEval laguerre_eval(std::size_t n, double a, double s) {
  auto diag = [a](std::size_t j) { return 2.0 * static_cast<double>(j) + a + 1.0; };
  auto off = [a](std::size_t j) {
    const double jd = static_cast<double>(j);
    return std::sqrt(jd * (jd + a));
  };
  double p_prev = 0.0;
  double p = std::exp(-0.5 * std::lgamma(a + 1.0));
  double d_prev = 0.0;
  double d = 0.0;
  double log_scale = 0.0;
  double sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    sum += p * p;
    const double b_next = off(j + 1);
    const double b_j = off(j);
    const double p_next = ((s - diag(j)) * p - b_j * p_prev) / b_next;
    const double d_next = (p + (s - diag(j)) * d - b_j * d_prev) / b_next;
    p_prev = p;
    p = p_next;
    d_prev = d;
    d = d_next;
    const double m = std::max(std::abs(p), std::abs(d));
    if (m > 1e100) {
      p /= m;
      p_prev /= m;
      d /= m;
      d_prev /= m;
      sum /= m * m;
      log_scale += std::log(m);
    }
  }
  return {std::log(sum) + 2.0 * log_scale, p / d};
}

}  // namespace

GaussRule gauss_legendre(std::size_t n) {
  if (n == 0) throw DomainError("gauss_legendre needs n >= 1");
  std::vector<double> diag(n, 0.0);
  std::vector<double> off(n > 0 ? n - 1 : 0);
  for (std::size_t j = 1; j < n; ++j) {
    const double jd = static_cast<double>(j);
    off[j - 1] = jd / std::sqrt(4.0 * jd * jd - 1.0);
  }
  GaussRule rule;
  std::vector<double> first;
  tridiagonal_eigen(diag, off, rule.nodes, first);
  rule.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) rule.weights[i] = 2.0 * first[i] * first[i];
  return rule;
}

LaguerreRule gauss_laguerre(std::size_t n, double a) {
  if (n == 0) throw DomainError("gauss_laguerre needs n >= 1");
  if (!(a > -1.0)) throw DomainError("gauss_laguerre needs a > -1");
  std::vector<double> diag(n);
  std::vector<double> off(n - 1);
  for (std::size_t j = 0; j < n; ++j) diag[j] = 2.0 * static_cast<double>(j) + a + 1.0;
  for (std::size_t j = 1; j < n; ++j) {
    const double jd = static_cast<double>(j);
    off[j - 1] = std::sqrt(jd * (jd + a));
  }
  LaguerreRule rule;
  std::vector<double> first;
  tridiagonal_eigen(diag, off, rule.nodes, first);
  rule.log_scaled_weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = rule.nodes[i];
    for (int it = 0; it < 3; ++it) {
      const double step = laguerre_eval(n, a, s).ratio;
      if (!std::isfinite(step) || std::abs(step) > 1e-6 * std::max(1.0, s)) break;
      s -= step;
    }
    rule.nodes[i] = s;
    rule.log_scaled_weights[i] = s - laguerre_eval(n, a, s).log_sum_sq;
  }
  return rule;
}

std::vector<SphereNode> sphere_rule(std::size_t M) {
  if (M == 0) throw DomainError("sphere rule needs at least one node");
  const std::size_t np = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(M) / 2.0))));
  const std::size_t na = 2 * np;
  const GaussRule polar = gauss_legendre(np);
  std::vector<SphereNode> out;
  out.reserve(np * na);
  for (std::size_t i = 0; i < np; ++i) {
    const double h = polar.nodes[i];
    const double rho = std::sqrt(std::max(0.0, 1.0 - h * h));
    for (std::size_t l = 0; l < na; ++l) {
      const double phi = 2.0 * kPi * (static_cast<double>(l) + 0.5) / static_cast<double>(na);
      out.push_back({ImaginaryUnit::from_vector(rho * std::cos(phi), rho * std::sin(phi), h),
                     polar.weights[i] * 2.0 * kPi / static_cast<double>(na)});
    }
  }
  return out;
}

QuadratureGrid::QuadratureGrid(GridMode mode, double scale, GridSizes sizes)
    : mode_(mode), scale_(scale), sizes_(sizes) {
  if (!(scale > 0.0) || !std::isfinite(scale)) throw DomainError("grid scale must be positive");
  if (sizes.radial == 0 || sizes.angular == 0) throw DomainError("grid sizes must be positive");
  const bool volume = mode == GridMode::kVolume;
  const LaguerreRule rule = gauss_laguerre(sizes.radial, volume ? 1.0 : 0.0);
  const double log_measure = volume ? -std::log(2.0 * scale * scale) : -std::log(2.0 * scale);
  radial_.reserve(sizes.radial);
  for (std::size_t i = 0; i < sizes.radial; ++i) {
    const double s = rule.nodes[i];
    radial_.push_back({std::sqrt(s / scale), s, rule.log_scaled_weights[i] + log_measure});
  }
  directions_.reserve(sizes.angular);
  for (std::size_t l = 0; l < sizes.angular; ++l) directions_.push_back(std::polar(1.0, theta(l)));
  if (volume) sphere_ = sphere_rule(sizes.sphere);
}

double QuadratureGrid::theta(std::size_t l) const {
  return -kPi + 2.0 * kPi * static_cast<double>(l) / static_cast<double>(sizes_.angular);
}

double QuadratureGrid::angular_weight(std::size_t l) const {
  const double base = 2.0 * kPi / static_cast<double>(sizes_.angular);
  if (mode_ == GridMode::kSlice) return base;
  const double st = directions_[l].imag();
  return 0.5 * base * st * st;
}

QuadratureGrid QuadratureGrid::refined() const {
  GridSizes s = sizes_;
  s.radial *= 2;
  s.angular *= 2;
  return QuadratureGrid(mode_, scale_, s);
}

namespace {

double weighted(double g, double log_weight, double r, double angle) {
  if (!std::isfinite(g)) throw IntegrandOverflow("integrand overflow", r, angle);
  if (g == 0.0) return 0.0;
  return std::copysign(std::exp(std::log(std::abs(g)) + log_weight), g);
}

Quaternion weighted(const Quaternion& g, double log_weight, double r, double angle) {
  return {weighted(g.w, log_weight, r, angle), weighted(g.x, log_weight, r, angle),
          weighted(g.y, log_weight, r, angle), weighted(g.z, log_weight, r, angle)};
}

void require_mode(const QuadratureGrid& grid, GridMode mode) {
  if (grid.mode() != mode) throw DomainError("quadrature grid has the wrong mode");
}

template <typename Value, typename Sum>
Value slice_sum(const std::function<Value(const Quaternion&)>& g, const ImaginaryUnit& I,
                const QuadratureGrid& grid) {
  require_mode(grid, GridMode::kSlice);
  Sum acc;
  const auto& dirs = grid.directions();
  for (const auto& node : grid.radial()) {
    for (std::size_t l = 0; l < dirs.size(); ++l) {
      const Quaternion z = I.embed(dirs[l] * node.r);
      acc.add(weighted(g(z), node.log_weight + std::log(grid.angular_weight(l)), node.r,
                       grid.theta(l)));
    }
  }
  return acc.value();
}

template <typename Value, typename Sum>
Value volume_sum(const std::function<Value(const Quaternion&)>& g, const QuadratureGrid& grid) {
  require_mode(grid, GridMode::kVolume);
  Sum acc;
  const auto& dirs = grid.directions();
  for (const auto& node : grid.radial()) {
    for (std::size_t l = 0; l < dirs.size(); ++l) {
      const double aw = grid.angular_weight(l);
      if (aw == 0.0) continue;
      for (const auto& sn : grid.sphere()) {
        const Quaternion q = sn.u.embed(dirs[l] * node.r);
        acc.add(weighted(g(q), node.log_weight + std::log(aw * sn.weight), node.r, grid.theta(l)));
      }
    }
  }
  return acc.value();
}

}  // namespace

double integrate_slice(const std::function<double(const Quaternion&)>& g, const ImaginaryUnit& I,
                       const QuadratureGrid& grid) {
  return slice_sum<double, CompensatedSum>(g, I, grid);
}

Quaternion integrate_slice_q(const std::function<Quaternion(const Quaternion&)>& g,
                             const ImaginaryUnit& I, const QuadratureGrid& grid) {
  return slice_sum<Quaternion, QuaternionSum>(g, I, grid);
}

double integrate_volume(const std::function<double(const Quaternion&)>& g,
                        const QuadratureGrid& grid) {
  return volume_sum<double, CompensatedSum>(g, grid);
}

Quaternion integrate_volume_q(const std::function<Quaternion(const Quaternion&)>& g,
                              const QuadratureGrid& grid) {
  return volume_sum<Quaternion, QuaternionSum>(g, grid);
}

double circle_average(const std::function<double(double)>& h, std::size_t N) {
  if (N == 0) throw DomainError("circle_average needs N >= 1");
  CompensatedSum acc;
  const double step = 2.0 * kPi / static_cast<double>(N);
  for (std::size_t l = 0; l < N; ++l) acc.add(h(-kPi + step * static_cast<double>(l)));
  return acc.value() * step;
}

}  // namespace slicefock
