#include <gtest/gtest.h>

#include <numbers>

#include "oracles.hpp"
#include "slicefock/errors.hpp"
#include "slicefock/quaternion.hpp"

using namespace slicefock;

namespace {
constexpr double kPi = std::numbers::pi;

void expect_near(const Quaternion& a, const Quaternion& b, double tol) {
  EXPECT_LE(oracle::qdist(a, b), tol) << "(" << a.w << "," << a.x << "," << a.y << "," << a.z
                                      << ") vs (" << b.w << "," << b.x << "," << b.y << "," << b.z
                                      << ")";
}
}  // namespace

TEST(Mul, BasisRelations) {
  const Quaternion i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
  EXPECT_EQ(i * j, k);
  EXPECT_EQ(j * i, -k);
  EXPECT_EQ(j * k, i);
  EXPECT_EQ(k * j, -i);
  EXPECT_EQ(k * i, j);
  EXPECT_EQ(i * k, -j);
  EXPECT_EQ(i * i, Quaternion{-1.0});
  EXPECT_EQ(j * j, Quaternion{-1.0});
  EXPECT_EQ(k * k, Quaternion{-1.0});
}

TEST(Mul, Examples) {
  const Quaternion q{1.5, -2, 0.25, 3};
  EXPECT_EQ(q * Quaternion{1.0}, q);
  expect_near(Quaternion{1, 1, 0, 0} * Quaternion{1, -1, 0, 0}, Quaternion{2.0}, 0.0);
  expect_near(Quaternion{1, 1, 0, 0} * Quaternion{1, -1, 0, 0},
              oracle::matrix_product({1, 1, 0, 0}, {1, -1, 0, 0}), 0.0);
}

TEST(Mul, MatchesMatrixOracle) {
  oracle::Random rng(1);
  for (int t = 0; t < 1000; ++t) {
    const Quaternion p = rng.quaternion(3), q = rng.quaternion(3);
    expect_near(p * q, oracle::matrix_product(p, q), 1e-13);
  }
}

TEST(MulProperty, AssociativeAndNormMultiplicative) {
  oracle::Random rng(2);
  for (int t = 0; t < 10000; ++t) {
    const Quaternion a = rng.quaternion(2), b = rng.quaternion(2), c = rng.quaternion(2);
    const Quaternion l = (a * b) * c, r = a * (b * c);
    ASSERT_LE(oracle::qdist(l, r), 1e-12 * std::max(1.0, l.norm()));
    ASSERT_LE(oracle::rel_err((a * b).norm(), a.norm() * b.norm()), 1e-12);
  }
}

TEST(ImaginaryUnitTest, NormalizedAndSquaresToMinusOne) {
  const ImaginaryUnit I = ImaginaryUnit::from_vector(1, 2, 3);
  EXPECT_NEAR(I.x() * I.x() + I.y() * I.y() + I.z() * I.z(), 1.0, 1e-14);
  expect_near(I.as_quaternion() * I.as_quaternion(), Quaternion{-1.0}, 1e-15);
  EXPECT_THROW(ImaginaryUnit::from_vector(0, 0, 0), DomainError);
}

TEST(SliceUnit, Examples) {
  const SliceUnit a = slice_unit({1, 2, 0, 0});
  EXPECT_EQ(a.unit, ImaginaryUnit::i());
  EXPECT_FALSE(a.real_axis);
  const SliceUnit b = slice_unit({0, 0, 3, 4});
  EXPECT_NEAR(b.unit.x(), 0.0, 1e-15);
  EXPECT_NEAR(b.unit.y(), 0.6, 1e-15);
  EXPECT_NEAR(b.unit.z(), 0.8, 1e-15);
  const SliceUnit c = slice_unit(Quaternion{5.0});
  EXPECT_TRUE(c.real_axis);
  EXPECT_EQ(c.unit, ImaginaryUnit::i());
}

TEST(TrigFormTest, Examples) {
  const TrigForm a = trig_form({1, 1, 0, 0});
  EXPECT_NEAR(a.r, std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(a.a, kPi / 4, 1e-15);
  EXPECT_EQ(a.unit, ImaginaryUnit::i());
  const TrigForm b = trig_form(Quaternion{-2.0});
  EXPECT_EQ(b.r, 2.0);
  EXPECT_EQ(b.a, kPi);
  EXPECT_TRUE(b.real_axis);
  const TrigForm c = trig_form({0, 1, 0, 0});
  EXPECT_EQ(c.r, 1.0);
  EXPECT_NEAR(c.a, kPi / 2, 1e-15);
  EXPECT_EQ(trig_form(Quaternion{3.0}).a, 0.0);
  EXPECT_THROW(trig_form(Quaternion{}), DomainError);
}

TEST(TrigFormProperty, RoundTrip) {
  oracle::Random rng(3);
  for (int t = 0; t < 10000; ++t) {
    const Quaternion q = rng.quaternion(5);
    const TrigForm f = trig_form(q);
    ASSERT_GT(f.a, 0.0);
    ASSERT_LT(f.a, kPi);
    ASSERT_LE(oracle::qdist(f.reconstruct(), q), 1e-12 * q.norm());
  }
}

TEST(SliceExp, Examples) {
  expect_near(slice_exp(ImaginaryUnit::i(), kPi), Quaternion{-1.0}, 1e-15);
  expect_near(slice_exp(ImaginaryUnit::j(), kPi / 2), Quaternion{0, 0, 1, 0}, 1e-15);
  const ImaginaryUnit I = ImaginaryUnit::from_vector(1, -1, 2);
  const Quaternion e = slice_exp(I, 0.7);
  expect_near(e * e * e, slice_exp(I, 2.1), 1e-14);
}

TEST(SliceExpProperty, PowersAndAddition) {
  oracle::Random rng(4);
  for (int t = 0; t < 2000; ++t) {
    const ImaginaryUnit I = rng.unit();
    const double s = rng.uniform(-4, 4), u = rng.uniform(-4, 4);
    ASSERT_LE(oracle::qdist(slice_exp(I, s) * slice_exp(I, u), slice_exp(I, s + u)), 1e-12);
  }
  const ImaginaryUnit I = rng.unit();
  const double t0 = 0.37;
  Quaternion p{1.0};
  for (int k = 1; k <= 64; ++k) {
    p = p * slice_exp(I, t0);
    ASSERT_LE(oracle::qdist(p, slice_exp(I, k * t0)), 1e-12) << k;
  }
}

TEST(Qexp, AgreesWithScalarOnSlices) {
  const Quaternion v = qexp({0.3, 0, 0, 1.2});
  const std::complex<double> c = std::exp(std::complex<double>(0.3, 1.2));
  expect_near(v, {c.real(), 0, 0, c.imag()}, 1e-15);
}

TEST(SphereGrid, ContainsAxesUnitLengthDistinct) {
  const auto g3 = sphere_grid(3);
  ASSERT_EQ(g3.size(), 3u);
  EXPECT_EQ(g3[0], ImaginaryUnit::i());
  EXPECT_EQ(g3[1], ImaginaryUnit::j());
  EXPECT_EQ(g3[2], ImaginaryUnit::k());
  const auto g = sphere_grid(100);
  ASSERT_EQ(g.size(), 100u);
  double min_angle = kPi;
  for (std::size_t a = 0; a < g.size(); ++a) {
    EXPECT_NEAR(g[a].dot(g[a]), 1.0, 1e-14);
    for (std::size_t b = a + 1; b < g.size(); ++b) {
      min_angle = std::min(min_angle, std::acos(std::clamp(g[a].dot(g[b]), -1.0, 1.0)));
    }
  }
  EXPECT_GT(min_angle, 0.0);
  EXPECT_THROW(sphere_grid(0), DomainError);
}

TEST(Frame, PerpendicularAndCross) {
  oracle::Random rng(5);
  for (int t = 0; t < 200; ++t) {
    const ImaginaryUnit I = rng.unit();
    const ImaginaryUnit J = perpendicular_unit(I);
    EXPECT_LT(std::abs(I.dot(J)), 1e-14);
    const ImaginaryUnit K = cross(I, J);
    expect_near(I.as_quaternion() * J.as_quaternion(), K.as_quaternion(), 1e-14);
  }
}
