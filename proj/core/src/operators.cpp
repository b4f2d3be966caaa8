#include "slicefock/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "slicefock/errors.hpp"
#include "slicefock/quadrature.hpp"

namespace slicefock {
namespace {

constexpr double kPi = std::numbers::pi;

void require_degree(int n) {
  if (n < 1) throw DomainError("operator degree parameter n must be >= 1");
}

double binomial(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
  return c;
}

}  // namespace

TrigKernel TrigKernel::fejer(int n) {
  require_degree(n);
  TrigKernel K;
  K.family = KernelFamily::kFejer;
  K.n = n;
  K.r = 1;
  K.lambda = 2.0 * kPi * static_cast<double>(n);
  return K;
}

TrigKernel TrigKernel::jackson(int n, int r) {
  require_degree(n);
  if (r < 1) throw DomainError("kernel power r must be >= 1");
  TrigKernel K;
  K.family = KernelFamily::kJackson;
  K.n = n;
  K.r = r;
  K.lambda = normalize_jackson(n, r);
  return K;
}

std::size_t TrigKernel::degree() const {
  return static_cast<std::size_t>(r) * static_cast<std::size_t>(n - 1);
}

std::string TrigKernel::name() const {
  return family == KernelFamily::kFejer ? "fejer" : "jackson";
}

double sin_ratio(int n, double x) {
  if (std::abs(x) < 5e-7) {
    const double nd = static_cast<double>(n);
    const double n2 = nd * nd;
    const double x2 = x * x;
    return nd * (1.0 + x2 * (1.0 - n2) / 6.0 + x2 * x2 * (3.0 * n2 * n2 - 10.0 * n2 + 7.0) / 360.0);
  }
  return std::sin(static_cast<double>(n) * x) / std::sin(x);
}

double kernel_eval(const TrigKernel& K, double t) {
  return std::pow(sin_ratio(K.n, 0.5 * t), 2 * K.r) / K.lambda;
}

std::size_t kernel_nodes(const TrigKernel& K) {
  return std::max<std::size_t>(8 * static_cast<std::size_t>(K.r) * static_cast<std::size_t>(K.n),
                               2 * K.degree() + 2);
}

double normalize_jackson(int n, int r) {
  require_degree(n);
  if (r < 1) throw DomainError("kernel power r must be >= 1");
  TrigKernel raw;
  raw.family = KernelFamily::kJackson;
  raw.n = n;
  raw.r = r;
  raw.lambda = 1.0;
  return circle_average([&](double t) { return kernel_eval(raw, t); }, kernel_nodes(raw));
}

std::vector<double> multipliers(const TrigKernel& K) {
  const std::size_t D = K.degree();
  const std::size_t N = kernel_nodes(K);
  // Kernel samples are shared across k.
  std::vector<double> samples(N);
  const double step = 2.0 * kPi / static_cast<double>(N);
  for (std::size_t l = 0; l < N; ++l) samples[l] = kernel_eval(K, -kPi + step * static_cast<double>(l));
  std::vector<double> rho(D + 1);
  for (std::size_t k = 0; k <= D; ++k) {
    CompensatedSum acc;
    for (std::size_t l = 0; l < N; ++l) {
      const double t = -kPi + step * static_cast<double>(l);
      acc.add(std::cos(static_cast<double>(k) * t) * samples[l]);
    }
    rho[k] = acc.value() * step;
  }
  return rho;
}

int jackson_power(int m, double p) {
  if (m < 0) throw DomainError("smoothness order m must be >= 0");
  if (!(p >= 1.0)) throw DomainError("jackson operator needs p >= 1");
  return static_cast<int>(std::ceil((p * static_cast<double>(m + 1) + 2.0) / 2.0 - 1e-12));
}

MultiplierOperator fejer_op(int n) {
  MultiplierOperator op;
  op.rho = multipliers(TrigKernel::fejer(n));
  op.family = "fejer";
  op.n = n;
  op.r = 1;
  return op;
}

MultiplierOperator vdp_op(int n) {
  const std::vector<double> a = multipliers(TrigKernel::fejer(2 * n));
  const std::vector<double> b = multipliers(TrigKernel::fejer(n));
  MultiplierOperator op;
  op.rho.resize(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) op.rho[k] = 2.0 * a[k] - (k < b.size() ? b[k] : 0.0);
  op.family = "vdp";
  op.n = n;
  op.r = 1;
  return op;
}

MultiplierOperator jackson_op(int n, int m, double p) {
  const int r = jackson_power(m, p);
  const std::vector<double> c = multipliers(TrigKernel::jackson(n, r));
  const std::size_t D = c.size() - 1;
  MultiplierOperator op;
  op.rho.assign(D + 1, 0.0);
  for (std::size_t j = 0; j <= D; ++j) {
    double tau = 0.0;
    for (int k = 1; k <= m + 1; ++k) {
      const std::size_t jk = j * static_cast<std::size_t>(k);
      if (jk > D) continue;
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      tau -= sign * binomial(m + 1, k) * c[jk];
    }
    op.rho[j] = tau;
  }
  op.family = "jackson";
  op.n = n;
  op.m = m;
  op.r = r;
  return op;
}

MultiplierOperator taylor_op(int n) {
  if (n < 0) throw DomainError("taylor degree must be >= 0");
  MultiplierOperator op;
  op.rho.assign(static_cast<std::size_t>(n) + 1, 1.0);
  op.family = "taylor";
  op.n = n;
  return op;
}

SliceSeries apply(const MultiplierOperator& op, const SliceSeries& f) {
  return scale_coefficients(f, op.rho);
}

double moment_bound(int n, int m, double p) {
  const int r = jackson_power(m, p);
  const TrigKernel K = TrigKernel::jackson(n, r);
  const double e = static_cast<double>(m + 1) * p;
  const std::size_t N = 8 * kernel_nodes(K);
  return circle_average(
      [&](double t) { return std::pow(static_cast<double>(n) * std::abs(t) + 1.0, e) * kernel_eval(K, t); },
      N);
}

}  // namespace slicefock
