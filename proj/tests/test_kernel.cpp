#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "oracles.hpp"
#include "slicefock/errors.hpp"
#include "slicefock/fock.hpp"
#include "slicefock/kernel.hpp"

using namespace slicefock;

TEST(KernelSection, Examples) {
  oracle::Random rng(51);
  for (int t = 0; t < 5; ++t) {
    const Quaternion r = rng.in_ball(3.0);
    EXPECT_LT(oracle::qdist(kernel_eval(Quaternion{}, 1.3, r), Quaternion{1.0}), 1e-15);
  }
  for (double q0 : {-1.5, 0.0, 0.4, 2.0}) {
    for (double r : {-2.0, 0.5, 3.0}) {
      for (double alpha : {0.5, 1.0, 2.0}) {
        const Quaternion v = kernel_eval(Quaternion{q0}, alpha, Quaternion{r});
        // Alternating series: rounding scales with the sum of |terms|.
        EXPECT_LT(std::abs(v.w - std::exp(alpha * r * q0)), 1e-13 * std::exp(alpha * std::abs(r * q0)));
        EXPECT_LT(v.imag().norm(), 1e-15);
      }
    }
  }
  const SliceSeries s = kernel_section(Quaternion{0.3, 1, -1, 0.5}, 0.7);
  const Quaternion c = Quaternion{0.3, 1, -1, 0.5}.conj();
  Quaternion ck{1.0};
  for (int k = 0; k < 10; ++k) {
    EXPECT_LT(oracle::qdist(s.coefficient(k), ck * (std::pow(0.7, k) / oracle::factorial(k))), 1e-15);
    ck = ck * c;
  }
}

TEST(KernelSection, MatchesComplexFockKernelOnASlice) {
  oracle::Random rng(52);
  for (int t = 0; t < 50; ++t) {
    const ImaginaryUnit I = rng.unit();
    const std::complex<double> z0(rng.uniform(-2, 2), rng.uniform(-2, 2));
    const std::complex<double> w(rng.uniform(-2, 2), rng.uniform(-2, 2));
    const double alpha = rng.uniform(0.5, 2.0);
    const Quaternion v = kernel_eval(I.embed(z0), alpha, I.embed(w));
    const Quaternion expect = I.embed(std::exp(alpha * w * std::conj(z0)));
    ASSERT_LT(oracle::qdist(v, expect), 1e-10 * std::max(1.0, expect.norm()));
  }
}

TEST(KernelSection, ReproducesBasisValues) {
  // <K(., q0), e_k> = conj(e_k(q0)) with e_k = q^k sqrt(alpha^k / k!).
  oracle::Random rng(53);
  const double alpha = 1.0;
  const ImaginaryUnit I = ImaginaryUnit::from_vector(1, 1, 0);
  for (int t = 0; t < 4; ++t) {
    const Quaternion q0 = rng.in_ball(1.2);
    const SliceSeries K = kernel_section(q0, alpha);
    for (int k : {0, 1, 3, 6}) {
      std::vector<Quaternion> c(k + 1);
      c[k] = Quaternion{std::sqrt(std::pow(alpha, k) / oracle::factorial(k))};
      const SliceSeries e(std::move(c));
      const Quaternion ek = evaluate(e, q0);
      EXPECT_LT(oracle::qdist(inner_second(K, e, alpha, I), ek.conj()), 1e-10);
    }
  }
}

TEST(Fit, ExactMembers) {
  const double alpha = 1.0;
  const Quaternion q0{0.2, 0.5, -0.3, 0.1};
  const SectionFit a = fit_with_sections(kernel_section(q0, alpha), {q0}, alpha);
  EXPECT_LT(a.residual, 1e-13);
  ASSERT_EQ(a.weights.size(), 1u);
  EXPECT_LT(oracle::qdist(a.weights[0], Quaternion{1.0}), 1e-13);
  const SectionFit b = fit_with_sections(SliceSeries(std::vector<Quaternion>{{1.0}}), {Quaternion{}}, alpha);
  EXPECT_LT(b.residual, 1e-15);
  EXPECT_LT(oracle::qdist(b.weights[0], Quaternion{1.0}), 1e-15);
  // Right weights: K(., q0) w is fit by the weight w.
  const Quaternion w{0.5, -1, 2, 0.25};
  const SectionFit c = fit_with_sections(kernel_section(q0, alpha) * w, {q0, Quaternion{0.5}}, alpha);
  EXPECT_LT(oracle::qdist(c.weights[0], w), 1e-10);
  EXPECT_LT(c.weights[1].norm(), 1e-10);
}

TEST(Fit, MoreCentersFitBetter) {
  const SliceSeries m2(Generator::monomial(2));
  const SectionFit three = fit_with_sections(m2, {Quaternion{-1.0}, Quaternion{0.0}, Quaternion{1.0}}, 1.0);
  const SectionFit five = fit_with_sections(
      m2, {Quaternion{-1.0}, Quaternion{-0.5}, Quaternion{0.0}, Quaternion{0.5}, Quaternion{1.0}}, 1.0);
  EXPECT_LT(five.residual, three.residual);
}

TEST(Fit, ResidualMatchesQuadratureNorm) {
  const SliceSeries f(Generator::exp());
  const std::vector<Quaternion> centers = equispaced_real_centers(4);
  const SectionFit fit = fit_with_sections(f, centers, 1.0);
  SliceSeries approx;
  for (std::size_t j = 0; j < centers.size(); ++j) approx += kernel_section(centers[j], 1.0) * fit.weights[j];
  EXPECT_NEAR(slice_norm(f - approx, 2, 1, ImaginaryUnit::j()), fit.residual, 1e-9);
}

TEST(FitProperty, ResidualNonincreasingAsCentersAppend) {
  oracle::Random rng(54);
  for (int t = 0; t < 5; ++t) {
    const SliceSeries f(rng.coefficients(5, 1.0));
    std::vector<Quaternion> centers;
    double prev = INFINITY;
    for (int n = 0; n < 6; ++n) {
      centers.push_back(rng.in_ball(1.0));
      const double r = fit_with_sections(f, centers, 1.0).residual;
      ASSERT_LE(r, prev * (1 + 1e-10));
      prev = r;
    }
  }
}

TEST(Fit, DensityTrend) {
  std::vector<SliceSeries> fam = {SliceSeries(Generator::monomial(1)), SliceSeries(Generator::monomial(2)),
                                  taylor_truncate(SliceSeries(Generator::exp()), 8)};
  for (const auto& f : fam) {
    const double r2 = fit_with_sections(f, equispaced_real_centers(2), 1.0).residual;
    const double r8 = fit_with_sections(f, equispaced_real_centers(8), 1.0).residual;
    EXPECT_GE(r2 / r8, 10.0);
  }
}

TEST(Fit, Errors) {
  const SliceSeries f(Generator::exp());
  EXPECT_THROW(fit_with_sections(f, {}, 1.0), DomainError);
  EXPECT_THROW(fit_with_sections(f, {Quaternion{0.5}, Quaternion{0.5}}, 1.0), DomainError);
  EXPECT_THROW(fit_with_sections(f, {Quaternion{0.5}}, 1.0, 3.0), DomainError);
  EXPECT_THROW(fit_with_sections(f, {Quaternion{0.5}, Quaternion{0.5 + 1e-9}, Quaternion{0.5 + 2e-9}}, 1.0),
               IllConditionedError);
  const auto c = equispaced_real_centers(4);
  EXPECT_EQ(c.front().w, -0.75);
  EXPECT_EQ(c.back().w, 0.75);
}
