#include "slicefock/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>

#include "slicefock/errors.hpp"
#include "slicefock/format.hpp"

namespace slicefock {
namespace {

constexpr double kPi = std::numbers::pi;

void require_positive(double p, double alpha) {
  if (!(p > 0.0) || !std::isfinite(p)) throw DomainError("exponent p must be positive");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("alpha must be positive");
}

struct RawIntegral {
  double value;
  double tail_share;
};

/// Accumulates exp(log_term) into the total and, for outer nodes, the tail.
class TailAccumulator {
 public:
  void add(double log_term, bool outer) {
    const double v = std::exp(log_term);
    total_.add(v);
    if (outer) tail_.add(v);
  }
  RawIntegral result() const {
    const double t = total_.value();
    return {t, t > 0.0 ? tail_.value() / t : 0.0};
  }

 private:
  CompensatedSum total_;
  CompensatedSum tail_;
};

double checked_log_norm(double n, double r, double angle) {
  if (!std::isfinite(n)) throw IntegrandOverflow("integrand overflow", r, angle);
  return std::log(n);
}

RawIntegral slice_raw(const SplitPair& pair, double p, const QuadratureGrid& grid) {
  const auto& radial = grid.radial();
  const auto& dirs = grid.directions();
  const double log_angular = std::log(grid.angular_weight(0));
  const std::size_t outer_from = radial.size() - radial.size() / 4;
  std::vector<SplitPair::Value> vals(dirs.size());
  TailAccumulator acc;
  for (std::size_t i = 0; i < radial.size(); ++i) {
    const RadialNode& node = radial[i];
    pair.ring(node.r, dirs, vals);
    for (std::size_t l = 0; l < dirs.size(); ++l) {
      const double n = vals[l].norm();
      if (n == 0.0) continue;
      const double ln = checked_log_norm(n, node.r, grid.theta(l));
      acc.add(p * ln - node.s + node.log_weight + log_angular, i >= outer_from);
    }
  }
  return acc.result();
}

/// Values A(z), B(z) with f(x + u y) = A + u B for z = x + i y.
struct AxialPair {
  Quaternion A;
  Quaternion B;
};

/// Axial decomposition at every direction of a ring with theta in (0, pi).
void axial_ring(const SplitPair& pair, double r, const QuadratureGrid& grid,
                std::vector<SplitPair::Value>& vals, std::vector<std::size_t>& index,
                std::vector<AxialPair>& out) {
  const auto& dirs = grid.directions();
  const std::size_t N = dirs.size();
  pair.ring(r, dirs, vals);
  index.clear();
  out.clear();
  const Quaternion Iq = pair.I().as_quaternion();
  for (std::size_t l = 0; l < N; ++l) {
    if (!(dirs[l].imag() > 0.0)) continue;
    const Quaternion fz = pair.assemble(vals[l]);
    const Quaternion fzb = pair.assemble(vals[(N - l) % N]);
    index.push_back(l);
    out.push_back({(fz + fzb) * 0.5, Iq * (fzb - fz) * 0.5});
  }
}

double volume_angular_weight(const QuadratureGrid& grid, std::size_t l) {
  // Half circle only: twice the symmetric full-circle weight.
  return 2.0 * grid.angular_weight(l);
}

RawIntegral volume_raw(const SplitPair& pair, double p, const QuadratureGrid& grid) {
  const auto& radial = grid.radial();
  const auto& sphere = grid.sphere();
  const std::size_t outer_from = radial.size() - radial.size() / 4;
  std::vector<SplitPair::Value> vals;
  vals.resize(grid.directions().size());
  std::vector<std::size_t> index;
  std::vector<AxialPair> axial;
  std::vector<double> log_sphere(sphere.size());
  for (std::size_t s = 0; s < sphere.size(); ++s) log_sphere[s] = std::log(sphere[s].weight);
  TailAccumulator acc;
  for (std::size_t i = 0; i < radial.size(); ++i) {
    const RadialNode& node = radial[i];
    axial_ring(pair, node.r, grid, vals, index, axial);
    for (std::size_t t = 0; t < index.size(); ++t) {
      const double base = node.log_weight - node.s + std::log(volume_angular_weight(grid, index[t]));
      for (std::size_t s = 0; s < sphere.size(); ++s) {
        const Quaternion v = axial[t].A + sphere[s].u.as_quaternion() * axial[t].B;
        const double n = v.norm();
        if (n == 0.0) continue;
        const double ln = checked_log_norm(n, node.r, grid.theta(index[t]));
        acc.add(p * ln + base + log_sphere[s], i >= outer_from);
      }
    }
  }
  return acc.result();
}

template <typename Compute>
NormResult gated(Compute compute, GridMode mode, double scale, GridSizes sizes, double p) {
  const QuadratureGrid grid(mode, scale, sizes);
  const RawIntegral r0 = compute(grid);
  if (!std::isfinite(r0.value)) throw NotInSpaceError("weighted integral is not finite");
  if (r0.tail_share <= kQuadratureTailTolerance) return {r0.value, r0.tail_share, sizes, {}};

  const QuadratureGrid fine = grid.refined();
  RawIntegral r1{};
  try {
    r1 = compute(fine);
  } catch (const IntegrandOverflow&) {
    throw NotInSpaceError("weighted integral grows without bound under grid refinement");
  }
  const double growth = r1.value / r0.value;
  if (!std::isfinite(r1.value) || growth > std::pow(2.0, std::max(1.0, p))) {
    throw NotInSpaceError("weighted integral grows without bound under grid refinement (factor " +
                          format_double(growth) + ")");
  }
  if (r1.tail_share <= kQuadratureTailTolerance) return {r1.value, r1.tail_share, fine.sizes(), {}};
  throw TailToleranceError("outer radial nodes carry " + format_double(r1.tail_share) +
                           " of the integral after refinement");
}

}  // namespace

double split_radius(double p, double alpha, GridSizes sizes) {
  // Largest Laguerre node is below 4n + 2a + 2.
  return std::sqrt((4.0 * static_cast<double>(sizes.radial) + 4.0) / (alpha * p / 2.0));
}

NormResult slice_integral(const SplitPair& pair, double p, double alpha, GridSizes sizes) {
  require_positive(p, alpha);
  return gated([&](const QuadratureGrid& g) { return slice_raw(pair, p, g); }, GridMode::kSlice,
               alpha * p / 2.0, sizes, p);
}

NormResult volume_integral(const SliceSeries& f, double p, double alpha, GridSizes sizes) {
  require_positive(p, alpha);
  const ImaginaryUnit I = ImaginaryUnit::i();
  const SplitPair pair(f, I, perpendicular_unit(I), split_radius(p, alpha, sizes));
  return gated([&](const QuadratureGrid& g) { return volume_raw(pair, p, g); }, GridMode::kVolume,
               alpha * p / 2.0, sizes, p);
}

double slice_norm(const SliceSeries& f, double p, double alpha, const ImaginaryUnit& I,
                  GridSizes sizes) {
  NormSpec spec;
  spec.p = p;
  spec.alpha = alpha;
  spec.slice = I;
  spec.grid = sizes;
  return norm(f, spec).value;
}

NormResult norm(const SliceSeries& f, const NormSpec& spec) {
  require_positive(spec.p, spec.alpha);
  const double prefactor = spec.alpha * spec.p / (2.0 * kPi);
  if (spec.kind == FockKind::kFirst) {
    NormResult r = volume_integral(f, spec.p, spec.alpha, spec.grid);
    r.value = std::pow(prefactor * prefactor * r.value, 1.0 / spec.p);
    return r;
  }
  auto on_slice = [&](const ImaginaryUnit& I) {
    const SplitPair pair(f, I, perpendicular_unit(I), split_radius(spec.p, spec.alpha, spec.grid));
    NormResult r = slice_integral(pair, spec.p, spec.alpha, spec.grid);
    r.value = std::pow(prefactor * r.value, 1.0 / spec.p);
    r.slice = I;
    return r;
  };
  if (spec.slice) return on_slice(*spec.slice);
  NormResult best;
  bool first = true;
  for (const ImaginaryUnit& I : sphere_grid(spec.sphere_samples)) {
    NormResult r = on_slice(I);
    if (first || r.value > best.value) best = r;
    best.tail_bound = std::max(best.tail_bound, r.tail_bound);
    first = false;
  }
  return best;
}

std::vector<std::vector<Quaternion>> gram_second(const std::vector<SliceSeries>& fs, double alpha,
                                                 const ImaginaryUnit& I, GridSizes sizes) {
  require_positive(2.0, alpha);
  const QuadratureGrid grid(GridMode::kSlice, alpha, sizes);
  const std::size_t n = fs.size();
  const double rmax = split_radius(2.0, alpha, sizes);
  std::vector<SplitPair> pairs;
  pairs.reserve(n);
  for (const auto& f : fs) pairs.emplace_back(f, I, perpendicular_unit(I), rmax);

  const auto& dirs = grid.directions();
  const double log_angular = std::log(grid.angular_weight(0));
  std::vector<std::vector<QuaternionSum>> acc(n, std::vector<QuaternionSum>(n));
  std::vector<std::vector<SplitPair::Value>> vals(n, std::vector<SplitPair::Value>(dirs.size()));
  std::vector<Quaternion> v(n);
  for (const auto& node : grid.radial()) {
    const double half = std::exp(0.5 * (node.log_weight + log_angular - node.s));
    for (std::size_t m = 0; m < n; ++m) pairs[m].ring(node.r, dirs, vals[m]);
    for (std::size_t l = 0; l < dirs.size(); ++l) {
      for (std::size_t m = 0; m < n; ++m) {
        v[m] = pairs[m].assemble(vals[m][l]) * half;
        if (!std::isfinite(v[m].norm2())) throw IntegrandOverflow("integrand overflow", node.r, grid.theta(l));
      }
      for (std::size_t m = 0; m < n; ++m) {
        const Quaternion cm = v[m].conj();
        for (std::size_t k = m; k < n; ++k) acc[m][k].add(cm * v[k]);
      }
    }
  }
  std::vector<std::vector<Quaternion>> G(n, std::vector<Quaternion>(n));
  const double prefactor = alpha / kPi;
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t k = m; k < n; ++k) {
      G[m][k] = acc[m][k].value() * prefactor;
      G[k][m] = G[m][k].conj();
    }
  }
  return G;
}

std::vector<std::vector<Quaternion>> gram_first(const std::vector<SliceSeries>& fs, double alpha,
                                                GridSizes sizes) {
  require_positive(2.0, alpha);
  const QuadratureGrid grid(GridMode::kVolume, alpha, sizes);
  const std::size_t n = fs.size();
  const ImaginaryUnit I = ImaginaryUnit::i();
  const double rmax = split_radius(2.0, alpha, sizes);
  std::vector<SplitPair> pairs;
  pairs.reserve(n);
  for (const auto& f : fs) pairs.emplace_back(f, I, perpendicular_unit(I), rmax);

  const auto& sphere = grid.sphere();
  std::vector<std::vector<QuaternionSum>> acc(n, std::vector<QuaternionSum>(n));
  std::vector<SplitPair::Value> vals(grid.directions().size());
  std::vector<std::size_t> index;
  std::vector<std::vector<AxialPair>> axial(n);
  std::vector<Quaternion> v(n);
  for (const auto& node : grid.radial()) {
    for (std::size_t m = 0; m < n; ++m) axial_ring(pairs[m], node.r, grid, vals, index, axial[m]);
    for (std::size_t t = 0; t < index.size(); ++t) {
      const double aw = volume_angular_weight(grid, index[t]);
      for (const auto& sn : sphere) {
        const double half = std::exp(0.5 * (node.log_weight - node.s + std::log(aw * sn.weight)));
        const Quaternion u = sn.u.as_quaternion();
        for (std::size_t m = 0; m < n; ++m) {
          v[m] = (axial[m][t].A + u * axial[m][t].B) * half;
          if (!std::isfinite(v[m].norm2())) {
            throw IntegrandOverflow("integrand overflow", node.r, grid.theta(index[t]));
          }
        }
        for (std::size_t m = 0; m < n; ++m) {
          const Quaternion cm = v[m].conj();
          for (std::size_t k = m; k < n; ++k) acc[m][k].add(cm * v[k]);
        }
      }
    }
  }
  std::vector<std::vector<Quaternion>> G(n, std::vector<Quaternion>(n));
  const double prefactor = (alpha / kPi) * (alpha / kPi);
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t k = m; k < n; ++k) {
      G[m][k] = acc[m][k].value() * prefactor;
      G[k][m] = G[m][k].conj();
    }
  }
  return G;
}

Quaternion inner_second(const SliceSeries& f, const SliceSeries& g, double alpha,
                        const ImaginaryUnit& I, GridSizes sizes) {
  return gram_second({f, g}, alpha, I, sizes)[1][0];
}

Quaternion inner_first(const SliceSeries& f, const SliceSeries& g, double alpha, GridSizes sizes) {
  return gram_first({f, g}, alpha, sizes)[1][0];
}

double growth_constant(FockKind kind, double p, double alpha) {
  require_positive(p, alpha);
  if (kind == FockKind::kSecond) return 4.0;
  return 4.0 * std::pow(2.0 * kPi / (alpha * p), 1.0 / p);
}

GrowthCheck growth_bound_check(const SliceSeries& f, const NormSpec& spec,
                               const std::vector<Quaternion>& samples) {
  GrowthCheck out;
  out.constant = growth_constant(spec.kind, spec.p, spec.alpha);
  out.norm = norm(f, spec).value;
  if (out.norm == 0.0) return out;
  const double log_norm = std::log(out.norm);
  for (const Quaternion& q : samples) {
    const double la = log_abs_evaluate(f, q);
    if (la == -std::numeric_limits<double>::infinity()) continue;
    const double ratio = std::exp(la - 0.5 * spec.alpha * q.norm2() - log_norm);
    out.max_ratio = std::max(out.max_ratio, ratio);
    if (!(ratio <= out.constant)) out.violations.push_back(q);
  }
  return out;
}

double slice_norm_ratio(const SliceSeries& f, double p, double alpha, const ImaginaryUnit& I,
                        const ImaginaryUnit& J, GridSizes sizes) {
  const double a = slice_norm(f, p, alpha, I, sizes);
  const double b = slice_norm(f, p, alpha, J, sizes);
  if (b == 0.0) throw DomainError("slice norm ratio is undefined for the zero function");
  return a / b;
}

double embedding_ratio(const SliceSeries& h, double beta, double alpha, double p, GridSizes sizes) {
  if (!(beta > 0.0 && beta < alpha)) throw DomainError("embedding needs 0 < beta < alpha");
  NormSpec num;
  num.kind = FockKind::kFirst;
  num.p = p;
  num.alpha = alpha;
  num.grid = sizes;
  NormSpec den = num;
  den.p = 2.0;
  den.alpha = beta;
  const double d = norm(h, den).value;
  if (d == 0.0) throw DomainError("embedding ratio is undefined for the zero function");
  return norm(h, num).value / d;
}

std::vector<double> geometric_radii(double r_min, double r_max, std::size_t count) {
  if (!(r_min > 0.0 && r_max > r_min) || count < 2) {
    throw DomainError("geometric radii need 0 < r_min < r_max and count >= 2");
  }
  std::vector<double> out(count);
  const double step = std::log(r_max / r_min) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) out[i] = r_min * std::exp(step * static_cast<double>(i));
  return out;
}

GrowthReport order_type(const SliceSeries& f, const std::vector<double>& radii, std::size_t angles,
                        std::size_t units) {
  if (radii.size() < 2) throw DomainError("order estimation needs at least two radii");
  if (angles < 2) throw DomainError("order estimation needs at least two angles");
  const std::vector<ImaginaryUnit> dirs = sphere_grid(units);
  GrowthReport rep;
  rep.radii = radii;
  bool any_finite = false;
  for (double r : radii) {
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < angles; ++j) {
      const double a = kPi * static_cast<double>(j) / static_cast<double>(angles - 1);
      const bool axis = (j == 0 || j + 1 == angles);
      for (std::size_t u = 0; u < (axis ? 1 : dirs.size()); ++u) {
        const Quaternion q = dirs[u].embed(r * std::cos(a), r * std::sin(a));
        const double v = f.closed_form(q).log_abs();
        if (!std::isnan(v)) best = std::max(best, v);
      }
    }
    if (std::isfinite(best)) any_finite = true;
    rep.log_max_modulus.push_back(best);
  }
  if (!any_finite) throw DomainError("radius grid too large: max modulus overflows at every radius");

  std::vector<double> xs;
  std::vector<double> ys;
  std::vector<double> types;
  for (std::size_t i = radii.size() / 2; i < radii.size(); ++i) {
    const double lm = rep.log_max_modulus[i];
    if (!std::isfinite(lm) || lm <= 0.0) continue;
    xs.push_back(std::log(radii[i]));
    ys.push_back(std::log(lm));
    types.push_back(lm / (radii[i] * radii[i]));
  }
  if (xs.size() < 2) return rep;  // bounded on the window: order 0
  const double n = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i] / n;
    my += ys[i] / n;
  }
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  rep.order = sxy / sxx;
  double ss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double e = ys[i] - (my + rep.order * (xs[i] - mx));
    ss += e * e;
  }
  rep.residual = std::sqrt(ss / n);
  if (std::abs(rep.order - 2.0) <= 0.1) {
    std::sort(types.begin(), types.end());
    const std::size_t k = types.size();
    rep.type = (k % 2 == 1) ? types[k / 2] : 0.5 * (types[k / 2 - 1] + types[k / 2]);
  }
  return rep;
}

}  // namespace slicefock
