#include <gtest/gtest.h>

#include <numbers>

#include "oracles.hpp"
#include "slicefock/errors.hpp"
#include "slicefock/fock.hpp"
#include "slicefock/operators.hpp"
#include "slicefock/quadrature.hpp"

using namespace slicefock;

namespace {

constexpr double kPi = std::numbers::pi;

/// -int K(t) sum_{k=1}^{m+1} (-1)^k C(m+1,k) f(q e^{I_q k t}) dt by the trapezoid rule,
/// componentwise. m = 0 gives L_n(f)(q) = int f(q e^{I_q t}) K(t) dt.
Quaternion direct_integral(const SliceSeries& f, const TrigKernel& K, int m, const Quaternion& q,
                           std::size_t N) {
  const ImaginaryUnit I = slice_unit(q).unit;
  Quaternion acc;
  for (int comp = 0; comp < 4; ++comp) {
    const double v = circle_average(
        [&](double t) {
          Quaternion s;
          double binom = 1.0;
          for (int k = 1; k <= m + 1; ++k) {
            binom = binom * (m + 2 - k) / k;
            const double sign = (k % 2 == 0) ? 1.0 : -1.0;
            s -= evaluate(f, q * slice_exp(I, k * t)) * (sign * binom);
          }
          const double kt = kernel_eval(K, t);
          const double c[4] = {s.w, s.x, s.y, s.z};
          return c[comp] * kt;
        },
        N);
    (comp == 0 ? acc.w : comp == 1 ? acc.x : comp == 2 ? acc.y : acc.z) = v;
  }
  return acc;
}

}  // namespace

TEST(Kernel, FejerValues) {
  const TrigKernel K = TrigKernel::fejer(5);
  EXPECT_NEAR(kernel_eval(K, 0.0), 5.0 / (2 * kPi), 1e-15);
  EXPECT_NEAR(kernel_eval(K, 1e-8), 5.0 / (2 * kPi), 1e-13);
  EXPECT_NEAR(kernel_eval(K, 2 * kPi / 5), 0.0, 1e-15);
  for (double t : {0.1, 0.7, 2.9}) EXPECT_EQ(kernel_eval(K, t), kernel_eval(K, -t));
  EXPECT_NEAR(sin_ratio(7, 4e-7), std::sin(7 * 4e-7) / std::sin(4e-7), 1e-12);
}

TEST(Kernel, NormalizationAndPositivity) {
  for (int n : {1, 3, 8}) EXPECT_NEAR(normalize_jackson(n, 1), 2 * kPi * n, 1e-10 * n);
  for (int n : {2, 5, 16}) {
    for (int r : {1, 2, 3, 4}) {
      const TrigKernel K = TrigKernel::jackson(n, r);
      EXPECT_GT(K.lambda, 0.0);
      EXPECT_NEAR(circle_average([&](double t) { return kernel_eval(K, t); }, 4 * kernel_nodes(K)), 1.0, 1e-12);
      for (double t : {-3.0, -1.0, 0.0, 0.5, 2.0}) EXPECT_GE(kernel_eval(K, t), 0.0);
    }
  }
}

TEST(Multipliers, FejerClosedForm) {
  for (int n : {1, 2, 4, 9, 32}) {
    const MultiplierOperator op = fejer_op(n);
    ASSERT_EQ(op.degree_bound(), static_cast<std::size_t>(n - 1));
    for (int k = 0; k < n + 5; ++k) EXPECT_NEAR(op.at(k), k < n ? 1.0 - double(k) / n : 0.0, 1e-12);
  }
}

TEST(Multipliers, JacksonMatchesIntegerConvolution) {
  for (int n : {2, 4, 7, 16}) {
    for (int r : {1, 2, 3}) {
      const std::vector<double> rho = multipliers(TrigKernel::jackson(n, r));
      const std::vector<double> exact = oracle::jackson_multipliers(n, r);
      ASSERT_EQ(rho.size(), exact.size());
      EXPECT_NEAR(rho[0], 1.0, 1e-12);
      for (std::size_t k = 0; k < rho.size(); ++k) EXPECT_NEAR(rho[k], exact[k], 1e-12) << n << " " << r << " " << k;
    }
  }
}

TEST(Vdp, Examples) {
  const MultiplierOperator v1 = vdp_op(1);
  EXPECT_NEAR(v1.at(0), 1.0, 1e-14);
  EXPECT_NEAR(v1.at(1), 1.0, 1e-14);
  for (int n : {2, 4, 8, 16}) {
    const MultiplierOperator v = vdp_op(n);
    EXPECT_EQ(v.degree_bound(), static_cast<std::size_t>(2 * n - 1));
    for (int k = 0; k <= n; ++k) EXPECT_NEAR(v.at(k), 1.0, 1e-12);
    EXPECT_EQ(v.at(2 * n), 0.0);
  }
}

TEST(Vdp, ReproducesPolynomials) {
  oracle::Random rng(31);
  for (int n : {2, 4, 8, 16}) {
    const SliceSeries p(rng.coefficients(n + 1, 1.0));
    const SliceSeries v = apply(vdp_op(n), p);
    for (int k = 0; k <= 2 * n + 2; ++k) EXPECT_LE(oracle::qdist(v.coefficient(k), p.coefficient(k)), 1e-12);
  }
}

TEST(Jackson, PowerRuleAndDegree) {
  EXPECT_EQ(jackson_power(1, 2.0), 3);
  EXPECT_EQ(jackson_power(0, 1.0), 2);
  EXPECT_EQ(jackson_power(0, 2.0), 2);
  EXPECT_EQ(jackson_power(2, 1.0), 3);
  for (int n : {4, 8}) {
    for (auto [m, p] : {std::pair{0, 1.0}, {0, 2.0}, {1, 2.0}}) {
      const MultiplierOperator op = jackson_op(n, m, p);
      EXPECT_EQ(op.degree_bound(), static_cast<std::size_t>(op.r * (n - 1)));
      EXPECT_NEAR(op.at(0), 1.0, 1e-12);
      EXPECT_EQ(op.at(op.r * (n - 1) + 1), 0.0);
    }
  }
  // m = 0: tau_j = c_j.
  const MultiplierOperator j0 = jackson_op(6, 0, 2.0);
  const std::vector<double> c = multipliers(TrigKernel::jackson(6, 2));
  for (std::size_t k = 0; k < c.size(); ++k) EXPECT_EQ(j0.at(k), c[k]);
}

TEST(Apply, IdentityAndDilationCommute) {
  oracle::Random rng(32);
  const SliceSeries p(rng.coefficients(7, 1.0));
  MultiplierOperator id = taylor_op(20);
  const SliceSeries same = apply(id, p);
  for (int k = 0; k < 8; ++k) EXPECT_EQ(same.coefficient(k), p.coefficient(k));
  const MultiplierOperator op = jackson_op(4, 1, 2.0);
  const SliceSeries a = apply(op, dilate(p, 0.7)), b = dilate(apply(op, p), 0.7);
  for (int k = 0; k < 12; ++k) EXPECT_LE(oracle::qdist(a.coefficient(k), b.coefficient(k)), 1e-15);
}

TEST(Apply, FejerOnExpMatchesDirectIntegral) {
  const int n = 6;
  const SliceSeries e(Generator::exp());
  const Quaternion q{1, 1, 0, 0};
  const TrigKernel K = TrigKernel::fejer(n);
  const Quaternion direct = direct_integral(e, K, 0, q, 256);
  EXPECT_LE(oracle::qdist(evaluate(apply(fejer_op(n), e), q), direct), 1e-10);
}

TEST(ApplyProperty, MultiplierMatchesDirectIntegralAcrossSlices) {
  oracle::Random rng(33);
  const ImaginaryUnit slices[2] = {ImaginaryUnit::i(), ImaginaryUnit::from_vector(1, 0, 1)};
  for (int t = 0; t < 4; ++t) {
    const SliceSeries f(rng.coefficients(13, 1.0));
    const int n = 4;
    struct Case {
      MultiplierOperator op;
      TrigKernel K;
      int m;
    };
    const std::vector<Case> cases = {{fejer_op(n), TrigKernel::fejer(n), 0},
                                     {jackson_op(n, 0, 1.0), TrigKernel::jackson(n, 2), 0},
                                     {jackson_op(n, 1, 2.0), TrigKernel::jackson(n, 3), 1}};
    for (const auto& c : cases) {
      const SliceSeries g = apply(c.op, f);
      for (const ImaginaryUnit& I : slices) {
        const Quaternion q = I.embed(rng.uniform(-1.4, 1.4), rng.uniform(0.1, 1.4));
        const Quaternion direct = direct_integral(f, c.K, c.m, q, 512);
        ASSERT_LE(oracle::qdist(evaluate(g, q), direct), 1e-9) << c.op.family;
      }
    }
    // V_n as 2 F_2n - F_n through two direct integrals.
    const Quaternion q = slices[1].embed(0.8, 0.9);
    const Quaternion direct = direct_integral(f, TrigKernel::fejer(2 * n), 0, q, 512) * 2.0 -
                              direct_integral(f, TrigKernel::fejer(n), 0, q, 512);
    ASSERT_LE(oracle::qdist(evaluate(apply(vdp_op(n), f), q), direct), 1e-9);
  }
}

TEST(ApplyProperty, VdpStability) {
  oracle::Random rng(34);
  for (double p : {1.0, 2.0, 3.0}) {
    const double C = std::pow(2.0, (p - 1) / p) * std::pow(std::pow(2.0, p) + 1, 1 / p);
    for (int t = 0; t < 5; ++t) {
      const SliceSeries f(rng.coefficients(10, 1.0)), g(rng.coefficients(10, 1.0));
      const MultiplierOperator v = vdp_op(4);
      const double lhs = slice_norm(apply(v, f) - apply(v, g), p, 1.0, ImaginaryUnit::i());
      const double rhs = slice_norm(f - g, p, 1.0, ImaginaryUnit::i());
      EXPECT_LE(lhs, C * rhs);
    }
  }
}

TEST(MomentBound, BoundedAcrossSweepAndMonotone) {
  for (auto [m, p] : {std::pair{0, 1.0}, {0, 2.0}, {1, 2.0}}) {
    double lo = INFINITY, hi = 0.0;
    for (int n : {4, 8, 16, 32, 64}) {
      const double v = moment_bound(n, m, p);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    EXPECT_LT(hi / lo, 4.0) << m << " " << p;
  }
  const TrigKernel K = TrigKernel::jackson(8, 2);
  EXPECT_NEAR(std::pow(1.0, 1.0) * kernel_eval(K, 0.0), kernel_eval(K, 0.0), 0.0);
  EXPECT_LE(moment_bound(8, 0, 1.0), moment_bound(8, 0, 1.5));
}
