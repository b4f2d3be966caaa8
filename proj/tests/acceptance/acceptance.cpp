// Acceptance suite: one PASS/FAIL line per criterion, exit status = number of failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "slicefock/errors.hpp"
#include "slicefock/fock.hpp"
#include "slicefock/kernel.hpp"
#include "slicefock/operators.hpp"
#include "slicefock/quadrature.hpp"
#include "slicefock/quaternion.hpp"
#include "slicefock/slice_series.hpp"
#include "slicefock/smoothness.hpp"

using namespace slicefock;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double factorial(int k) { return std::tgamma(k + 1.0); }

SliceSeries monomial(int k) { return SliceSeries(Generator::monomial(k)); }

std::vector<ImaginaryUnit> criterion_units() {
  return {ImaginaryUnit::i(), ImaginaryUnit::j(), ImaginaryUnit::from_vector(1, 1, 1)};
}

ImaginaryUnit random_unit(SplitMix64& rng) {
  for (;;) {
    const double x = 2 * rng.uniform() - 1, y = 2 * rng.uniform() - 1, z = 2 * rng.uniform() - 1;
    const double r2 = x * x + y * y + z * z;
    if (r2 > 1e-4 && r2 <= 1.0) return ImaginaryUnit::from_vector(x, y, z);
  }
}

Quaternion random_in_ball(SplitMix64& rng, double radius) {
  for (;;) {
    const Quaternion q{2 * rng.uniform() - 1, 2 * rng.uniform() - 1, 2 * rng.uniform() - 1,
                       2 * rng.uniform() - 1};
    if (q.norm2() <= 1.0) return q * radius;
  }
}

/// Ten random polynomials of degree 1..10.
std::vector<SliceSeries> random_family(std::uint64_t seed) {
  std::vector<SliceSeries> out;
  for (int d = 1; d <= 10; ++d) out.push_back(random_series(d, seed + d));
  return out;
}

Outcome basis_orthonormality() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (double alpha : {0.5, 1.0, 2.0}) {
    std::vector<SliceSeries> basis;
    for (int k = 0; k <= 12; ++k)
      basis.push_back(monomial(k) * Quaternion{std::sqrt(std::pow(alpha, k) / factorial(k))});
    for (const auto& I : criterion_units()) {
      const auto G = gram_second(basis, alpha, I);
      for (std::size_t m = 0; m < G.size(); ++m)
        for (std::size_t n = 0; n < G.size(); ++n)
          worst = std::max(worst, (G[m][n] - Quaternion{m == n ? 1.0 : 0.0}).norm());
    }
  }
  const double t = seconds_since(t0);
  return {worst <= 1e-8 && t < 10.0,
          "max |G - Id| = " + fmt("%.2e", worst) + " (tol 1e-8), " + fmt("%.2f", t) + " s (limit 10 s)"};
}

Outcome norm_oracles() {
  double worst_second = 0.0, worst_first = 0.0;
  for (double alpha : {0.5, 1.0, 2.0}) {
    for (int k = 0; k <= 12; ++k) {
      const SliceSeries f = monomial(k);
      for (const auto& I : criterion_units()) {
        const double v = slice_norm(f, 2, alpha, I);
        const double expect = factorial(k) / std::pow(alpha, k);
        worst_second = std::max(worst_second, std::abs(v * v - expect) / expect);
      }
      NormSpec spec;
      spec.kind = FockKind::kFirst;
      spec.alpha = alpha;
      const double v = norm(f, spec).value;
      const double expect = factorial(k + 1) / std::pow(alpha, k);
      worst_first = std::max(worst_first, std::abs(v * v - expect) / expect);
    }
  }
  return {worst_second <= 1e-9 && worst_first <= 1e-9,
          "max rel err second kind " + fmt("%.2e", worst_second) + ", first kind " +
              fmt("%.2e", worst_first) + " (tol 1e-9)"};
}

Outcome first_kind_non_orthogonality() {
  std::vector<SliceSeries> fs;
  for (int k = 0; k <= 8; ++k) fs.push_back(monomial(k));
  const auto G = gram_first(fs, 1.0);
  double min_pair = INFINITY, max_zero = 0.0;
  for (int m = 0; m <= 8; ++m) {
    for (int n = 0; n <= 8; ++n) {
      const double v = G[m][n].norm();
      const int gap = std::abs(m - n);
      if (gap == 2 && std::min(m, n) <= 6) min_pair = std::min(min_pair, v);
      if (gap % 2 == 1 || gap >= 4) max_zero = std::max(max_zero, v);
    }
  }
  return {min_pair > 1e-3 && max_zero < 1e-8,
          "min |<q^m, q^{m+2}>| = " + fmt("%.4g", min_pair) + " (> 1e-3), max vanishing entry " +
              fmt("%.2e", max_zero) + " (< 1e-8)"};
}

Outcome growth_bounds() {
  SplitMix64 rng(4);
  std::vector<Quaternion> samples;
  for (int s = 0; s < 1000; ++s) samples.push_back(random_in_ball(rng, 3.0));
  bool ok = true;
  double max_first = 0.0, max_second = 0.0;
  const double alpha = 1.0;
  std::vector<SliceSeries> family = {SliceSeries(Generator::exp()),
                                     SliceSeries(Generator::gauss(alpha / 4))};
  for (auto& f : random_family(400)) family.push_back(f);
  for (double p : {1.0, 2.0}) {
    for (const auto& f : family) {
      NormSpec first;
      first.kind = FockKind::kFirst;
      first.p = p;
      first.alpha = alpha;
      const GrowthCheck a = growth_bound_check(f, first, samples);
      NormSpec second;
      second.p = p;
      second.alpha = alpha;
      second.slice.reset();
      const GrowthCheck b = growth_bound_check(f, second, samples);
      ok = ok && a.passed() && b.passed();
      max_first = std::max(max_first, a.max_ratio / a.constant);
      max_second = std::max(max_second, b.max_ratio / b.constant);
    }
  }
  return {ok, "max observed ratio / constant: first kind " + fmt("%.4f", max_first) + ", second kind " +
                  fmt("%.4f", max_second) + " (p in {1, 2}, alpha = 1, 1000 samples)"};
}

Outcome slice_equivalence() {
  SplitMix64 rng(5);
  std::vector<std::pair<ImaginaryUnit, ImaginaryUnit>> pairs;
  for (int t = 0; t < 10; ++t) pairs.emplace_back(random_unit(rng), random_unit(rng));
  double worst = 0.0;
  for (double p : {1.0, 2.0, 4.0}) {
    for (int s = 0; s < 200; ++s) {
      const SliceSeries f = random_series(1 + s % 8, 5000 + s);
      for (const auto& [I, J] : pairs) worst = std::max(worst, slice_norm_ratio(f, p, 1.0, I, J));
    }
  }
  return {worst <= 2.0, "max ||f||_I / ||f||_J = " + fmt("%.6f", worst) +
                            " (limit 2; p in {1, 2, 4}, 200 series x 10 pairs)"};
}

Outcome operator_identities() {
  double fejer = 0.0, vdp = 0.0;
  bool degree_ok = true;
  for (int n = 1; n <= 32; ++n) {
    const MultiplierOperator op = fejer_op(n);
    for (int k = 0; k <= n + 4; ++k) fejer = std::max(fejer, std::abs(op.at(k) - (k < n ? 1.0 - double(k) / n : 0.0)));
  }
  for (int n : {1, 2, 4, 8, 16, 32}) {
    const MultiplierOperator V = vdp_op(n);
    for (int s = 0; s < 5; ++s) {
      const SliceSeries P = random_series(n, 600 + 10 * n + s);
      const SliceSeries VP = apply(V, P);
      for (int k = 0; k <= 2 * n + 2; ++k) vdp = std::max(vdp, (VP.coefficient(k) - P.coefficient(k)).norm());
    }
  }
  for (int n = 1; n <= 16; ++n) {
    for (int m : {0, 1, 2}) {
      for (double p : {1.0, 1.5, 2.0, 3.0}) {
        const MultiplierOperator J = jackson_op(n, m, p);
        const int r = static_cast<int>(std::ceil((p * (m + 1) + 2) / 2));
        degree_ok = degree_ok && J.r == r && J.degree_bound() == static_cast<std::size_t>(r * (n - 1));
      }
    }
  }
  return {fejer <= 1e-12 && vdp <= 1e-12 && degree_ok,
          "Fejer max dev " + fmt("%.2e", fejer) + ", V_n reproduction " + fmt("%.2e", vdp) +
              " (tol 1e-12), jackson degree bound " + (degree_ok ? "exact" : "violated")};
}

/// -int K(t) sum_{k=1}^{m+1} (-1)^k C(m+1,k) f(q e^{I_q k t}) dt, componentwise.
Quaternion rotational_integral(const SliceSeries& f, const TrigKernel& K, int m, const Quaternion& q,
                               std::size_t N) {
  const ImaginaryUnit I = slice_unit(q).unit;
  double comps[4];
  for (int c = 0; c < 4; ++c) {
    comps[c] = circle_average(
        [&](double t) {
          Quaternion s;
          double binom = 1.0;
          for (int k = 1; k <= m + 1; ++k) {
            binom = binom * (m + 2 - k) / k;
            s -= evaluate(f, q * slice_exp(I, k * t)) * ((k % 2 == 0 ? 1.0 : -1.0) * binom);
          }
          const double v[4] = {s.w, s.x, s.y, s.z};
          return v[c] * kernel_eval(K, t);
        },
        N);
  }
  return {comps[0], comps[1], comps[2], comps[3]};
}

Outcome multiplier_vs_integral() {
  SplitMix64 rng(7);
  const ImaginaryUnit slices[2] = {ImaginaryUnit::from_vector(0.2, -1, 0.5), ImaginaryUnit::k()};
  double worst = 0.0;
  for (int s = 0; s < 6; ++s) {
    const int deg = 2 + s;
    const SliceSeries f = random_series(deg, 700 + s);
    const int n = 3 + s;
    struct Case {
      MultiplierOperator op;
      TrigKernel K;
      int m;
    };
    const std::vector<Case> cases = {{fejer_op(n), TrigKernel::fejer(n), 0},
                                     {jackson_op(n, 0, 2), TrigKernel::jackson(n, jackson_power(0, 2)), 0},
                                     {jackson_op(n, 1, 2), TrigKernel::jackson(n, jackson_power(1, 2)), 1}};
    for (const auto& c : cases) {
      const SliceSeries g = apply(c.op, f);
      const std::size_t N = 2 * (kernel_nodes(c.K) + deg * (c.m + 1)) + 8;
      for (const auto& I : slices) {
        const Quaternion q = I.embed(std::complex<double>(2 * rng.uniform() - 1, 2 * rng.uniform() - 1));
        const Quaternion direct = rotational_integral(f, c.K, c.m, q, N);
        worst = std::max(worst, (evaluate(g, q) - direct).norm() / std::max(1.0, direct.norm()));
      }
    }
  }
  return {worst <= 1e-9, "max deviation " + fmt("%.2e", worst) +
                             " (tol 1e-9; Fejer and Jackson m in {0, 1}, two slices per case)"};
}

Outcome vdp_inequality() {
  const auto t0 = Clock::now();
  std::vector<SliceSeries> family = {SliceSeries(Generator::exp()), SliceSeries(Generator::gauss(0.25))};
  for (int s = 0; s < 5; ++s) family.push_back(random_series(6 + 4 * s, 800 + s));
  // deg f <= n: V_n f = f and E_n = 0, so both sides vanish and the computed slack
  // is rounding of ||V_n f - f||; those cases are counted separately.
  double min_slack = INFINITY;
  int degenerate = 0;
  bool ok = true;
  for (const auto& f : family) {
    for (int n : {2, 4, 8, 16}) {
      const EstimateReport r = verify_vdp(f, n, 2.0, 1.0, ImaginaryUnit::i());
      ok = ok && r.passed;
      if (r.degenerate) {
        ++degenerate;
        continue;
      }
      ok = ok && r.slack >= 0.0;
      min_slack = std::min(min_slack, r.slack);
    }
  }
  const double t = seconds_since(t0);
  return {ok && t < 30.0, "min slack " + fmt("%.3e", min_slack) + " (>= 0) over " +
                              std::to_string(4 * family.size() - degenerate) + " cases, " +
                              std::to_string(degenerate) + " with deg f <= n at rounding level, " +
                              fmt("%.2f", t) + " s (limit 30 s)"};
}

Outcome jackson_boundedness() {
  const SliceSeries f(Generator::exp());
  const std::vector<int> ns = {4, 8, 16, 32, 64};
  std::ostringstream detail;
  bool ok = true;
  const std::pair<int, double> cases[] = {{0, 1.0}, {0, 2.0}, {1, 2.0}};
  for (const auto& [m, p] : cases) {
    double lo = INFINITY, hi = 0.0, mlo = INFINITY, mhi = 0.0;
    for (int n : ns) {
      const EstimateReport r = verify_jackson(f, n, m, p, 1.0, ImaginaryUnit::i());
      lo = std::min(lo, r.ratio);
      hi = std::max(hi, r.ratio);
      const double mb = moment_bound(n, m, p);
      mlo = std::min(mlo, mb);
      mhi = std::max(mhi, mb);
    }
    const bool pass = hi / lo < 10.0 && mhi / mlo < 4.0;
    ok = ok && pass;
    detail << "(m,p)=(" << m << "," << p << "): ratio max/min " << fmt("%.3f", hi / lo) << ", moments "
           << fmt("%.3f", mhi / mlo) << (pass ? "" : " [fails]") << "; ";
  }
  detail << "n in {4, 8, 16, 32, 64} (limits 10 and 4)";
  return {ok, detail.str()};
}

Outcome density_trends() {
  const SliceSeries e(Generator::exp());
  double taylor = 0.0;
  for (int n = 0; n <= 16; ++n) {
    double tail = 0.0;
    for (int k = n + 1; k <= 60; ++k) tail += 1.0 / factorial(k);
    const double err = slice_norm(apply(taylor_op(n), e) - e, 2, 1.0, ImaginaryUnit::i());
    taylor = std::max(taylor, std::abs(err - std::sqrt(tail)) / std::sqrt(tail));
  }
  std::vector<double> dil;
  for (double r : {0.9, 0.99, 0.999})
    dil.push_back(slice_norm(SliceSeries(Generator::exp().dilated(r)) - e, 2, 1.0, ImaginaryUnit::i()));
  const double step1 = dil[0] / dil[1], step2 = dil[1] / dil[2];
  const std::vector<SliceSeries> fam = {monomial(1), monomial(2), apply(taylor_op(8), e)};
  double kernel = INFINITY;
  for (const auto& f : fam) {
    const double r2 = fit_with_sections(f, equispaced_real_centers(2), 1.0).residual;
    const double r8 = fit_with_sections(f, equispaced_real_centers(8), 1.0).residual;
    kernel = std::min(kernel, r2 / r8);
  }
  const bool ok = taylor <= 1e-9 && step1 >= 10.0 && step2 >= 10.0 && kernel >= 10.0;
  return {ok, "Taylor rel err " + fmt("%.2e", taylor) + " (tol 1e-9); dilation steps " + fmt("%.3f", step1) +
                  "x, " + fmt("%.3f", step2) + "x (need 10x); kernel N=2->8 min gain " + fmt("%.1f", kernel) +
                  "x (need 10x)"};
}

Outcome order_and_type() {
  const double alpha = 1.0;
  const std::vector<double> radii = geometric_radii(1.0, 8.0, 16);
  std::vector<SliceSeries> family = {SliceSeries(Generator::exp()), SliceSeries(Generator::gauss(alpha / 4))};
  for (auto& f : random_family(1100)) family.push_back(f);
  double max_order = 0.0;
  for (const auto& f : family) max_order = std::max(max_order, order_type(f, radii).order);
  const GrowthReport g = order_type(SliceSeries(Generator::gauss(alpha / 4)), radii);
  bool rejected = false;
  try {
    NormSpec spec;
    spec.alpha = alpha;
    norm(SliceSeries(Generator::gauss(0.6 * alpha)), spec);
  } catch (const NotInSpaceError&) {
    rejected = true;
  }
  const double type = g.type.value_or(INFINITY);
  const bool ok = max_order <= 2.05 && std::abs(g.order - 2.0) <= 0.05 && type <= 0.525 * alpha && rejected;
  return {ok, "max order " + fmt("%.4f", max_order) + " (<= 2.05); gauss:alpha/4 order " + fmt("%.4f", g.order) +
                  ", type " + fmt("%.4f", type) + " (<= 0.525 alpha); gauss:0.6alpha " +
                  (rejected ? "rejected" : "accepted")};
}

Outcome quadrature_self_check() {
  const GridSizes base;
  const GridSizes doubled{2 * base.radial, 2 * base.angular, 2 * base.sphere};
  double worst = 0.0;
  std::string where;
  auto check = [&](const std::string& name, const SliceSeries& f, NormSpec spec) {
    spec.grid = base;
    const double a = norm(f, spec).value;
    spec.grid = doubled;
    const double b = norm(f, spec).value;
    const double d = std::abs(a - b) / std::abs(b);
    if (d > worst) {
      worst = d;
      where = name;
    }
  };
  for (int k = 0; k <= 12; ++k) {
    NormSpec s;
    check("mono:" + std::to_string(k) + " second", monomial(k), s);
    s.kind = FockKind::kFirst;
    check("mono:" + std::to_string(k) + " first", monomial(k), s);
  }
  const std::vector<std::pair<std::string, SliceSeries>> fam = {
      {"exp", SliceSeries(Generator::exp())},
      {"gauss:0.25", SliceSeries(Generator::gauss(0.25))},
      {"random:3:1", random_series(3, 1)},
      {"random:6:2", random_series(6, 2)}};
  for (const auto& [name, f] : fam) {
    for (double p : {1.0, 2.0, 4.0}) {
      NormSpec s;
      s.p = p;
      check(name + " p=" + fmt("%g", p) + " second", f, s);
      s.kind = FockKind::kFirst;
      check(name + " p=" + fmt("%g", p) + " first", f, s);
    }
  }
  return {worst <= 1e-10, "max rel change under doubling " + fmt("%.2e", worst) + " (tol 1e-10), worst: " + where};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"basis orthonormality", basis_orthonormality},
      {"norm oracles", norm_oracles},
      {"first-kind non-orthogonality", first_kind_non_orthogonality},
      {"growth bounds", growth_bounds},
      {"slice-norm equivalence", slice_equivalence},
      {"operator identities", operator_identities},
      {"multiplier vs direct integral", multiplier_vs_integral},
      {"de la Vallee Poussin inequality", vdp_inequality},
      {"Jackson-type boundedness", jackson_boundedness},
      {"density trends", density_trends},
      {"order and type", order_and_type},
      {"quadrature self-check", quadrature_self_check},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.passed;
    std::printf("%s %2zu %s: %s\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures;
}
