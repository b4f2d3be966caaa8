#pragma once

// Convolution operators on the circle acting on slice-regular functions through
// q -> q e^{I_q t}. Since (q e^{I_q t})^k = q^k e^{I_q k t} and the kernels are even,
// each operator is a real multiplier sequence on the right Taylor coefficients.

#include <cstddef>
#include <string>
#include <vector>

#include "slicefock/slice_series.hpp"

namespace slicefock {

enum class KernelFamily { kFejer, kJackson };

struct TrigKernel {
  KernelFamily family = KernelFamily::kFejer;
  int n = 1;
  int r = 1;
  /// Normalization: the kernel is (sin(n t/2) / sin(t/2))^{2r} / lambda.
  double lambda = 1.0;

  /// (1 / 2 pi n) (sin(n t/2) / sin(t/2))^2.
  static TrigKernel fejer(int n);
  /// (1 / lambda_{n,r}) (sin(n t/2) / sin(t/2))^{2r}, lambda from normalize_jackson.
  static TrigKernel jackson(int n, int r);

  /// Trigonometric degree r (n - 1).
  std::size_t degree() const;
  std::string name() const;
};

/// sin(n x) / sin(x), with a series guard for |x| < 5e-7.
double sin_ratio(int n, double x);

double kernel_eval(const TrigKernel& K, double t);

/// Node count used for kernel moments: 8 r n, at least 2 degree + 2.
std::size_t kernel_nodes(const TrigKernel& K);

/// lambda_{n,r} = integral of (sin(n t/2)/sin(t/2))^{2r} over [-pi, pi].
double normalize_jackson(int n, int r);

/// rho_k = int cos(k t) K(t) dt for k = 0..degree(K).
std::vector<double> multipliers(const TrigKernel& K);

struct MultiplierOperator {
  /// rho_0..rho_D; rho_k = 0 for k > D.
  std::vector<double> rho;
  std::string family;
  int n = 0;
  int m = 0;
  int r = 0;

  std::size_t degree_bound() const { return rho.empty() ? 0 : rho.size() - 1; }
  double at(std::size_t k) const { return k < rho.size() ? rho[k] : 0.0; }
};

/// Smallest integer r with r >= (p (m + 1) + 2) / 2.
int jackson_power(int m, double p);

MultiplierOperator fejer_op(int n);
/// V_n = 2 F_{2n} - F_n.
MultiplierOperator vdp_op(int n);
/// I_{n,m,r} with r = jackson_power(m, p):
/// tau_j = -sum_{k=1}^{m+1} (-1)^k C(m+1, k) c_{jk}, c_{jk} = int cos(j k t) K_{n,r}(t) dt.
MultiplierOperator jackson_op(int n, int m, double p);
/// Taylor truncation at degree n.
MultiplierOperator taylor_op(int n);

SliceSeries apply(const MultiplierOperator& op, const SliceSeries& f);

/// int (n|t| + 1)^{(m+1) p} K_{n,r}(t) dt with r = jackson_power(m, p).
double moment_bound(int n, int m, double p);

}  // namespace slicefock
