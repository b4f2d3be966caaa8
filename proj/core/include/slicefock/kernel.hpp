#pragma once

// Reproducing-kernel sections K_alpha(r, q0) = sum_k alpha^k r^k conj(q0)^k / k! and
// least-squares fits of a function by finite right-linear combinations of them.

#include <cstddef>
#include <vector>

#include "slicefock/quaternion.hpp"
#include "slicefock/slice_series.hpp"

namespace slicefock {

/// r -> K_alpha(r, q0) as a series in the free variable r.
SliceSeries kernel_section(const Quaternion& q0, double alpha);

/// K_alpha(r, q0) by series summation.
Quaternion kernel_eval(const Quaternion& q0, double alpha, const Quaternion& r);

/// Condition number of the weighted section matrix above which fits are refused.
inline constexpr double kSectionConditionLimit = 1e12;

struct SectionFit {
  /// Right coefficients b_j of sum_j K_alpha(., q_j) b_j.
  std::vector<Quaternion> weights;
  /// ||f - sum_j K_alpha(., q_j) b_j||_{2,alpha,I}.
  double residual = 0.0;
  /// sigma_max / sigma_min of the weighted coefficient matrix.
  double condition = 1.0;
  /// Coefficients 0..degree enter the least-squares system; the rest of f is in residual.
  std::size_t degree = 0;
};

/// Least squares in the p = 2 space of the second kind, on coefficients: the squared
/// norm is sum_k |c_k|^2 k!/alpha^k on every slice, so the fit does not depend on I.
/// Throws DomainError for p != 2, no centers or repeated centers, and
/// IllConditionedError (leading minor = number of centers) above kSectionConditionLimit.
SectionFit fit_with_sections(const SliceSeries& f, const std::vector<Quaternion>& centers,
                             double alpha, double p = 2.0,
                             const ImaginaryUnit& I = ImaginaryUnit::i());

/// N centers -1 + (2j + 1)/N, j = 0..N-1: midpoints of N equal cells of [-1, 1].
std::vector<Quaternion> equispaced_real_centers(std::size_t N);

}  // namespace slicefock
