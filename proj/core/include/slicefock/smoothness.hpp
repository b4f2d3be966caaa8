#pragma once

// Rotational moduli of smoothness, best polynomial approximation and the two
// quantitative estimates for the Jackson-type and de la Vallee Poussin operators.

#include <cstddef>
#include <string>
#include <vector>

#include "slicefock/fock.hpp"
#include "slicefock/quaternion.hpp"
#include "slicefock/slice_series.hpp"

namespace slicefock {

/// Delta_h^k f(z) = sum_{s=0}^k (-1)^{k+s} C(k, s) f(z e^{I s h}) for z in C_I.
/// The rotation uses the given I, not I_z, so the direction is fixed across the slice.
/// Throws DomainError when z is off C_I.
Quaternion finite_difference(const SliceSeries& f, int k, double h, const Quaternion& z,
                             const ImaginaryUnit& I);

struct ModulusQuery {
  int k = 1;
  double delta = 0.1;
  double p = 2.0;
  double alpha = 1.0;
  ImaginaryUnit slice = ImaginaryUnit::i();
  /// Step sizes h = delta j / h_grid for j = 1..h_grid.
  std::size_t h_grid = 16;
  GridSizes grid;
};

/// (int_C_I |Delta_h^k f(z)|^p e^{-p alpha |z|^2 / 2} dm_I)^{1/p} at a single step h,
/// with no normalizing prefactor.
double difference_norm(const SliceSeries& f, int k, double h, double p, double alpha,
                       const ImaginaryUnit& I, GridSizes sizes = {});

/// omega_k(f; delta): max of difference_norm over the h grid. Negative steps give the same
/// values, since Delta_{-h}^k f(z e^{I k h}) = (-1)^k Delta_h^k f(z).
double modulus(const SliceSeries& f, const ModulusQuery& q);

enum class ApproxMethod { kProjection, kGram, kDescent };

std::string method_name(ApproxMethod m);

struct BestApproxResult {
  std::size_t n = 0;
  double value = 0.0;
  SliceSeries minimizer;
  ApproxMethod method = ApproxMethod::kProjection;
  std::size_t iterations = 0;
};

/// E_n in the Hilbert space of the second kind: P* is the Taylor polynomial and
/// E_n^2 = sum_{k>n} |a_k|^2 k!/alpha^k.
BestApproxResult best_approx_second(const SliceSeries& f, std::size_t n, double alpha,
                                    const ImaginaryUnit& I = ImaginaryUnit::i());

/// Condition number of the Jacobi-scaled monomial Gram matrix above which
/// best_approx_first refuses to solve.
inline constexpr double kGramConditionLimit = 1e12;

/// E_n for the first-kind norm at p = 2, by the normal equations of the monomial Gram
/// matrix (entries with |m - k| odd or >= 4 vanish and are not assembled).
BestApproxResult best_approx_first(const SliceSeries& f, std::size_t n, double alpha,
                                   GridSizes sizes = {});

struct DescentOptions {
  double tol = 1e-8;
  std::size_t max_iterations = 10000;
};

/// E_n in ||.||_{p,alpha,I} for p >= 1 by descent with Armijo backtracking from the
/// p = 2 projection, over the slice rule of `sizes`. Each step tries the Newton
/// direction, the reweighted least-squares direction (p < 2) and the gradient.
/// Stops when an accepted step improves the norm by at most tol relative; throws
/// SolverFailure when the iteration cap is reached first.
BestApproxResult best_approx_lp(const SliceSeries& f, std::size_t n, double p, double alpha,
                                const ImaginaryUnit& I, DescentOptions options = {},
                                GridSizes sizes = {});

/// Dispatch: projection at p = 2, descent otherwise.
BestApproxResult best_approx(const SliceSeries& f, std::size_t n, double p, double alpha,
                             const ImaginaryUnit& I, GridSizes sizes = {});

/// 2^{(p-1)/p} (2^p + 1)^{1/p} + 1.
double vdp_constant(double p);

struct EstimateReport {
  /// "jackson" or "vdp".
  std::string theorem;
  int n = 0;
  int m = 0;
  int r = 0;
  double p = 2.0;
  double alpha = 1.0;
  ImaginaryUnit slice = ImaginaryUnit::i();
  /// ||op(f) - f||_{p,alpha,I}.
  double lhs = 0.0;
  /// jackson: omega_{m+1}(f; 1/n). vdp: constant * E_n.
  double rhs = 0.0;
  /// lhs / rhs (jackson), NaN when degenerate.
  double ratio = 0.0;
  /// rhs - lhs (vdp).
  double slack = 0.0;
  double constant = 0.0;
  double best_approx = 0.0;
  std::string method;
  /// Both sides vanish to rounding.
  bool degenerate = false;
  bool passed = false;
  GridSizes grid;
  std::size_t h_grid = 0;
};

EstimateReport verify_jackson(const SliceSeries& f, int n, int m, double p, double alpha,
                              const ImaginaryUnit& I, std::size_t h_grid = 16,
                              GridSizes sizes = {});

EstimateReport verify_vdp(const SliceSeries& f, int n, double p, double alpha,
                          const ImaginaryUnit& I, GridSizes sizes = {});

}  // namespace slicefock
