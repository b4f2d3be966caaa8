#pragma once

// Fock norms of the first kind (over H) and of the second kind (over one slice,
// or the sup over sampled slices), inner products, growth bounds and order/type.
//
//   first kind:  ||f||_{p,alpha}^p   = (alpha p / 2 pi)^2 int_H   (|f| e^{-alpha|q|^2/2})^p dm
//   second kind: ||f||_{p,alpha,I}^p = (alpha p / 2 pi)   int_C_I (|f| e^{-alpha|z|^2/2})^p dm_I
//
// dm_I is plain area measure on C_I.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "slicefock/quadrature.hpp"
#include "slicefock/quaternion.hpp"
#include "slicefock/slice_series.hpp"

namespace slicefock {

enum class FockKind { kFirst, kSecond };

/// Share of an integral carried by the outer quarter of radial nodes above which
/// the grid is refined.
inline constexpr double kQuadratureTailTolerance = 1e-10;

struct NormSpec {
  FockKind kind = FockKind::kSecond;
  double p = 2.0;
  double alpha = 1.0;
  /// Second kind: the slice. Empty means the max over sphere_grid(sphere_samples).
  std::optional<ImaginaryUnit> slice = ImaginaryUnit::i();
  std::size_t sphere_samples = 32;
  GridSizes grid;
};

struct NormResult {
  double value = 0.0;
  /// Outer-quarter radial share of the integral on the accepted grid.
  double tail_bound = 0.0;
  GridSizes grid;
  /// Slice attaining the value (second kind).
  std::optional<ImaginaryUnit> slice;
};

/// Radius up to which split coefficients must be available for the radial rule of
/// `sizes` at exponent p. Pairs extend on demand past it.
double split_radius(double p, double alpha, GridSizes sizes = {});

/// Raw weighted integral int_C_I (|F + G J| e^{-alpha|z|^2/2})^p dm_I of a split pair
/// (no prefactor, no p-th root), behind the divergence gate.
/// Throws NotInSpaceError when refinement shows unbounded growth and
/// TailToleranceError when the tail share stays above tolerance without growth.
NormResult slice_integral(const SplitPair& pair, double p, double alpha, GridSizes sizes = {});

/// Raw weighted integral over H of (|f| e^{-alpha|q|^2/2})^p, gated as above.
NormResult volume_integral(const SliceSeries& f, double p, double alpha, GridSizes sizes = {});

NormResult norm(const SliceSeries& f, const NormSpec& spec);
/// Second-kind norm on a fixed slice.
double slice_norm(const SliceSeries& f, double p, double alpha, const ImaginaryUnit& I,
                  GridSizes sizes = {});

/// <f, g> = (alpha/pi) int_C_I conj(g) f e^{-alpha|z|^2} dm_I; right-linear in f.
Quaternion inner_second(const SliceSeries& f, const SliceSeries& g, double alpha,
                        const ImaginaryUnit& I, GridSizes sizes = {});
/// <f, g> = (alpha/pi)^2 int_H conj(g) f e^{-alpha|q|^2} dm.
Quaternion inner_first(const SliceSeries& f, const SliceSeries& g, double alpha,
                       GridSizes sizes = {});

/// Matrix of <f_n, f_m> (row m, column n) for the second-kind inner product.
std::vector<std::vector<Quaternion>> gram_second(const std::vector<SliceSeries>& fs, double alpha,
                                                 const ImaginaryUnit& I, GridSizes sizes = {});
/// Matrix of <f_n, f_m> (row m, column n) for the first-kind inner product.
std::vector<std::vector<Quaternion>> gram_first(const std::vector<SliceSeries>& fs, double alpha,
                                                GridSizes sizes = {});

/// Pointwise growth constant: 4 (2 pi / (alpha p))^{1/p} for the first kind, 4 for the second.
double growth_constant(FockKind kind, double p, double alpha);

struct GrowthCheck {
  double norm = 0.0;
  double constant = 0.0;
  /// max over samples of |f(q)| e^{-alpha|q|^2/2} / ||f||.
  double max_ratio = 0.0;
  std::vector<Quaternion> violations;
  bool passed() const { return violations.empty(); }
};

GrowthCheck growth_bound_check(const SliceSeries& f, const NormSpec& spec,
                               const std::vector<Quaternion>& samples);

/// ||f||_{p,alpha,I} / ||f||_{p,alpha,J}. Throws DomainError for f = 0.
double slice_norm_ratio(const SliceSeries& f, double p, double alpha, const ImaginaryUnit& I,
                        const ImaginaryUnit& J, GridSizes sizes = {});

/// ||h||_{p,alpha} / ||h||_{2,beta} (both first kind), for 0 < beta < alpha.
double embedding_ratio(const SliceSeries& h, double beta, double alpha, double p,
                       GridSizes sizes = {});

struct GrowthReport {
  double order = 0.0;
  /// Reported only when |order - 2| <= 0.1.
  std::optional<double> type;
  std::vector<double> radii;
  /// log M_f(r) at each radius.
  std::vector<double> log_max_modulus;
  /// RMS residual of the order regression.
  double residual = 0.0;
};

/// Geometric radius grid from r_min to r_max.
std::vector<double> geometric_radii(double r_min, double r_max, std::size_t count);

/// Order and type from log M_f(r) sampled over angles a in [0, pi] and sphere_grid(units).
GrowthReport order_type(const SliceSeries& f, const std::vector<double>& radii,
                        std::size_t angles = 33, std::size_t units = 16);

}  // namespace slicefock
