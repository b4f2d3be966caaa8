#include "slicefock/smoothness.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>

#include "left_matrix.hpp"
#include "slicefock/errors.hpp"
#include "slicefock/format.hpp"
#include "slicefock/operators.hpp"
#include "slicefock/quadrature.hpp"

namespace slicefock {
namespace {

using detail::left_matrix;

constexpr double kPi = std::numbers::pi;

double binomial(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
  return c;
}

/// sqrt(alpha^k / k!), the scale of the k-th orthonormal monomial e_k.
std::vector<double> basis_scales(std::size_t n, double alpha) {
  std::vector<double> s(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    s[k] = std::exp(0.5 * (static_cast<double>(k) * std::log(alpha) - std::lgamma(static_cast<double>(k) + 1.0)));
  }
  return s;
}

Quaternion to_quaternion(const Eigen::VectorXd& v, std::size_t k) {
  return {v(4 * k), v(4 * k + 1), v(4 * k + 2), v(4 * k + 3)};
}

SliceSeries polynomial(const std::vector<Quaternion>& c) { return SliceSeries(c); }

}  // namespace

Quaternion finite_difference(const SliceSeries& f, int k, double h, const Quaternion& z,
                             const ImaginaryUnit& I) {
  if (k < 1) throw DomainError("difference order must be >= 1");
  const Quaternion v = z.imag();
  const double along = v.x * I.x() + v.y * I.y() + v.z * I.z();
  if ((v - I.as_quaternion() * along).norm() > 1e-12 * std::max(1.0, z.norm())) {
    throw DomainError("finite_difference: point is not on the slice of the rotation unit");
  }
  QuaternionSum acc;
  for (int s = 0; s <= k; ++s) {
    const double sign = ((k + s) % 2 == 0) ? 1.0 : -1.0;
    acc.add(evaluate(f, z * slice_exp(I, static_cast<double>(s) * h)) * (sign * binomial(k, s)));
  }
  return acc.value();
}

double difference_norm(const SliceSeries& f, int k, double h, double p, double alpha,
                       const ImaginaryUnit& I, GridSizes sizes) {
  if (k < 1) throw DomainError("difference order must be >= 1");
  // On C_I the rotation acts on z^j by e^{I j s h}; the alternating sum collapses to
  // the multiplier (e^{I j h} - 1)^k.
  // e^{i t} - 1 = (-2 sin^2(t/2), sin t) keeps full relative accuracy for small j h.
  const auto mult = [k, h](std::size_t j) {
    const double t = static_cast<double>(j) * h;
    const double s = std::sin(0.5 * t);
    return std::pow(std::complex<double>(-2.0 * s * s, std::sin(t)), k);
  };
  SplitPair::RotationSum rot;
  for (int s = 0; s <= k; ++s) {
    rot.weights.emplace_back(((k + s) % 2 == 0 ? 1.0 : -1.0) * binomial(k, s));
    rot.angles.push_back(static_cast<double>(s) * h);
  }
  const SplitPair pair(f, I, perpendicular_unit(I), mult, std::pow(2.0, k), std::move(rot),
                       split_radius(p, alpha, sizes));
  return std::pow(slice_integral(pair, p, alpha, sizes).value, 1.0 / p);
}

double modulus(const SliceSeries& f, const ModulusQuery& q) {
  if (q.k < 1) throw DomainError("modulus order must be >= 1");
  if (!(q.delta >= 0.0 && q.delta <= kPi)) throw DomainError("modulus step bound must lie in [0, pi]");
  if (q.h_grid < 8) throw DomainError("modulus needs at least 8 step sizes");
  if (q.delta == 0.0) return 0.0;
  double best = 0.0;
  for (std::size_t j = 1; j <= q.h_grid; ++j) {
    const double h = q.delta * static_cast<double>(j) / static_cast<double>(q.h_grid);
    best = std::max(best, difference_norm(f, q.k, h, q.p, q.alpha, q.slice, q.grid));
  }
  return best;
}

std::string method_name(ApproxMethod m) {
  switch (m) {
    case ApproxMethod::kProjection: return "projection";
    case ApproxMethod::kGram: return "gram";
    case ApproxMethod::kDescent: return "descent";
  }
  return "";
}

BestApproxResult best_approx_second(const SliceSeries& f, std::size_t n, double alpha,
                                    const ImaginaryUnit&) {
  if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
  BestApproxResult r;
  r.n = n;
  r.method = ApproxMethod::kProjection;
  r.minimizer = taylor_truncate(f, n);
  r.value = std::sqrt(std::max(0.0, f.parseval_tail(alpha, static_cast<long>(n))));
  return r;
}

BestApproxResult best_approx_first(const SliceSeries& f, std::size_t n, double alpha, GridSizes sizes) {
  if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
  std::vector<SliceSeries> fs;
  for (std::size_t k = 0; k <= n; ++k) fs.emplace_back(Generator::monomial(k));
  fs.push_back(f);
  const auto G = gram_first(fs, alpha, sizes);
  const std::size_t N = n + 1;

  // Jacobi scaling by the diagonal keeps the factorial growth of <q^m, q^m> out of the
  // conditioning.
  std::vector<double> d(N);
  for (std::size_t m = 0; m < N; ++m) d[m] = 1.0 / std::sqrt(G[m][m].w);
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(4 * N, 4 * N);
  Eigen::VectorXd b(4 * N);
  for (std::size_t m = 0; m < N; ++m) {
    for (std::size_t k = 0; k < N; ++k) {
      const std::size_t gap = m > k ? m - k : k - m;
      if (gap % 2 == 1 || gap >= 4) continue;
      A.block<4, 4>(4 * m, 4 * k) = left_matrix(G[m][k]) * (d[m] * d[k]);
    }
    const Quaternion bm = G[m][N] * d[m];
    b.segment<4>(4 * m) << bm.w, bm.x, bm.y, bm.z;
  }
  A = 0.5 * (A + A.transpose());

  for (std::size_t m = 1; m <= N; ++m) {
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A.topLeftCorner(4 * m, 4 * m),
                                                            Eigen::EigenvaluesOnly);
    const double lo = es.eigenvalues().minCoeff(), hi = es.eigenvalues().maxCoeff();
    const double cond = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
    if (cond > kGramConditionLimit) {
      throw IllConditionedError("monomial Gram matrix is numerically singular (condition " +
                                    format_double(cond) + ")",
                                cond, static_cast<int>(m));
    }
  }
  const Eigen::LLT<Eigen::MatrixXd> llt(A);
  if (llt.info() != Eigen::Success) {
    throw IllConditionedError("monomial Gram matrix is not positive definite",
                              std::numeric_limits<double>::infinity(), static_cast<int>(N));
  }
  const Eigen::VectorXd y = llt.solve(b);
  std::vector<Quaternion> c(N);
  for (std::size_t k = 0; k < N; ++k) c[k] = to_quaternion(y, k) * d[k];

  BestApproxResult r;
  r.n = n;
  r.method = ApproxMethod::kGram;
  r.minimizer = polynomial(c);
  NormSpec spec;
  spec.kind = FockKind::kFirst;
  spec.p = 2.0;
  spec.alpha = alpha;
  spec.grid = sizes;
  r.value = norm(f - r.minimizer, spec).value;
  return r;
}

namespace {

/// Sum over a fixed slice grid of W |f - P|^p for P = sum_k z^k s_k x_k, with gradient
/// and Hessian. Coordinates are split along C_I: x_k = alpha_k + beta_k J with alpha_k,
/// beta_k complex, stored as (Re alpha_k, Im alpha_k, Re beta_k, Im beta_k). Since
/// {1, I, J, IJ} is orthonormal this is a rotation of the quaternion components.
class LpObjective {
 public:
  LpObjective(const SliceSeries& f, std::size_t n, double p, double alpha, const ImaginaryUnit& I,
              GridSizes sizes)
      : n_(n), p_(p), I_(I), J_(perpendicular_unit(I)), K_(cross(I, J_)), scales_(basis_scales(n, alpha)) {
    const QuadratureGrid grid(GridMode::kSlice, alpha * p / 2.0, sizes);
    const SplitPair pair(f, I, J_, split_radius(p, alpha, sizes));
    const auto& dirs = grid.directions();
    std::vector<SplitPair::Value> vals(dirs.size());
    for (const RadialNode& node : grid.radial()) {
      pair.ring(node.r, dirs, vals);
      for (std::size_t l = 0; l < dirs.size(); ++l) {
        nodes_.push_back({node.log_weight - node.s + std::log(grid.angular_weight(l)), node.r * dirs[l],
                          vals[l].F, vals[l].G});
      }
    }
  }

  std::size_t dim() const { return 4 * (n_ + 1); }

  Eigen::VectorXd encode(const SliceSeries& f) const {
    Eigen::VectorXd y(static_cast<Eigen::Index>(dim()));
    for (std::size_t k = 0; k <= n_; ++k) {
      const Quaternion a = f.coefficient(k) / scales_[k];
      y.segment<4>(4 * k) << a.w, dot4(a, I_.as_quaternion()), dot4(a, J_.as_quaternion()),
          dot4(a, K_.as_quaternion());
    }
    return y;
  }

  SliceSeries decode(const Eigen::VectorXd& y) const {
    std::vector<Quaternion> c(n_ + 1);
    for (std::size_t k = 0; k <= n_; ++k) {
      const Quaternion a = I_.embed(y(4 * k), y(4 * k + 1)) + J_.as_quaternion() * y(4 * k + 2) +
                           K_.as_quaternion() * y(4 * k + 3);
      c[k] = a * scales_[k];
    }
    return SliceSeries(std::move(c));
  }

  double value(const Eigen::VectorXd& y) const {
    const Coefficients c = coefficients(y);
    CompensatedSum total;
    for (const Node& nd : nodes_) {
      const auto [rF, rG] = residual(nd, c);
      const double a2 = std::norm(rF) + std::norm(rG);
      if (a2 > 0.0) total.add(std::exp(0.5 * p_ * std::log(a2) + nd.log_weight));
    }
    return total.value();
  }

  /// Value, gradient and Hessian. `major` receives the part sum c M^T M, which dominates
  /// the Hessian for p <= 2 (reweighted least squares). Nodes where the residual vanishes
  /// contribute nothing.
  double derivatives(const Eigen::VectorXd& y, Eigen::VectorXd& grad, Eigen::MatrixXd& hess,
                     Eigen::MatrixXd& major) const {
    const auto D = static_cast<Eigen::Index>(dim());
    const std::size_t N = n_ + 1;
    const Coefficients cf = coefficients(y);
    grad.setZero(D);
    // sum c conj(b_k) b_m for b_k = s_k z^k; the same block acts on alpha and beta.
    Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(N));
    // Rank-one terms (p - 2) c / |R|^2 v v^T with v = M^T R, gathered as rows of U.
    Eigen::MatrixXd U(p_ != 2.0 ? static_cast<Eigen::Index>(nodes_.size()) : 0, D);
    Eigen::Index rows = 0;
    std::vector<std::complex<double>> cb(N);
    Eigen::VectorXd v(D);
    CompensatedSum total;
    for (const Node& nd : nodes_) {
      const auto [rF, rG] = residual(nd, cf);
      const double a2 = std::norm(rF) + std::norm(rG);
      if (a2 == 0.0) continue;
      const double la2 = std::log(a2);
      total.add(std::exp(0.5 * p_ * la2 + nd.log_weight));
      const double c = p_ * std::exp(0.5 * (p_ - 2.0) * la2 + nd.log_weight);
      std::complex<double> zk = 1.0;
      const std::complex<double> zc = std::conj(nd.z);
      for (std::size_t k = 0; k < N; ++k) {
        cb[k] = zk * scales_[k];
        zk *= zc;
        // d|R|^2 / d(alpha_k) = -2 conj(b_k) R_F as (d/dRe, d/dIm).
        const std::complex<double> vF = cb[k] * rF, vG = cb[k] * rG;
        v.segment<4>(4 * k) << vF.real(), vF.imag(), vG.real(), vG.imag();
      }
      grad.noalias() -= c * v;
      for (std::size_t k = 0; k < N; ++k) {
        const std::complex<double> ck = c * cb[k];
        for (std::size_t m = k; m < N; ++m) S(k, m) += ck * std::conj(cb[m]);
      }
      if (p_ != 2.0) U.row(rows++) = (std::sqrt(c * std::abs(p_ - 2.0) / a2)) * v.transpose();
    }
    major.setZero(D, D);
    for (std::size_t k = 0; k < N; ++k) {
      for (std::size_t m = k; m < N; ++m) {
        // Real form of w -> S_km w acting on (Re, Im), for alpha and beta alike.
        const std::complex<double> z = S(k, m);
        Eigen::Matrix4d B = Eigen::Matrix4d::Zero();
        B.block<2, 2>(0, 0) << z.real(), -z.imag(), z.imag(), z.real();
        B.block<2, 2>(2, 2) = B.block<2, 2>(0, 0);
        major.block<4, 4>(4 * k, 4 * m) = B;
        if (m != k) major.block<4, 4>(4 * m, 4 * k) = B.transpose();
      }
    }
    hess = major;
    if (rows > 0) {
      hess.selfadjointView<Eigen::Lower>().rankUpdate(U.topRows(rows).transpose(), p_ > 2.0 ? 1.0 : -1.0);
      hess.triangularView<Eigen::StrictlyUpper>() = hess.transpose();
    }
    return total.value();
  }

 private:
  struct Node {
    double log_weight;
    std::complex<double> z;
    std::complex<double> F;
    std::complex<double> G;
  };
  /// s_k alpha_k and s_k beta_k.
  struct Coefficients {
    std::vector<std::complex<double>> a;
    std::vector<std::complex<double>> b;
  };
  Coefficients coefficients(const Eigen::VectorXd& y) const {
    Coefficients c{std::vector<std::complex<double>>(n_ + 1), std::vector<std::complex<double>>(n_ + 1)};
    for (std::size_t k = 0; k <= n_; ++k) {
      c.a[k] = std::complex<double>(y(4 * k), y(4 * k + 1)) * scales_[k];
      c.b[k] = std::complex<double>(y(4 * k + 2), y(4 * k + 3)) * scales_[k];
    }
    return c;
  }
  std::pair<std::complex<double>, std::complex<double>> residual(const Node& nd, const Coefficients& c) const {
    // Horner in real arithmetic (std::complex products carry NaN recovery branches).
    const double zr = nd.z.real(), zi = nd.z.imag();
    double pr = c.a[n_].real(), pi = c.a[n_].imag(), qr = c.b[n_].real(), qi = c.b[n_].imag();
    for (std::size_t k = n_; k-- > 0;) {
      const double tp = pr * zr - pi * zi + c.a[k].real();
      pi = pr * zi + pi * zr + c.a[k].imag();
      pr = tp;
      const double tq = qr * zr - qi * zi + c.b[k].real();
      qi = qr * zi + qi * zr + c.b[k].imag();
      qr = tq;
    }
    return {nd.F - std::complex<double>(pr, pi), nd.G - std::complex<double>(qr, qi)};
  }
  std::size_t n_;
  double p_;
  ImaginaryUnit I_;
  ImaginaryUnit J_;
  ImaginaryUnit K_;
  std::vector<double> scales_;
  std::vector<Node> nodes_;
};

}  // namespace

BestApproxResult best_approx_lp(const SliceSeries& f, std::size_t n, double p, double alpha,
                                const ImaginaryUnit& I, DescentOptions options, GridSizes sizes) {
  if (!(p >= 1.0)) throw DomainError("descent needs p >= 1 for a convex objective");
  if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
  if (!(options.tol > 0.0)) throw DomainError("solver tolerance must be positive");

  if (const auto deg = f.finite_degree(); deg && *deg <= n) {
    BestApproxResult r;
    r.n = n;
    r.method = ApproxMethod::kDescent;
    r.minimizer = taylor_truncate(f, n);
    return r;
  }
  const LpObjective phi(f, n, p, alpha, I, sizes);
  const auto D = static_cast<Eigen::Index>(phi.dim());
  Eigen::VectorXd x = phi.encode(f);

  Eigen::VectorXd g;
  Eigen::MatrixXd H, Hm;
  double value = phi.derivatives(x, g, H, Hm);
  std::size_t it = 0;
  bool converged = value == 0.0;
  // Directions from the Hessian and from its reweighted-least-squares majorizer (the
  // Hessian alone is a poor model near residual zeros for p < 2), each line searched;
  // the better trial point is kept.
  const auto direction = [&](const Eigen::MatrixXd& M) -> std::optional<Eigen::VectorXd> {
    const double shift = M.diagonal().cwiseAbs().maxCoeff();
    for (double mu = 1e-14; mu <= 1.0; mu *= 100.0) {
      const Eigen::LDLT<Eigen::MatrixXd> ldlt(M + mu * shift * Eigen::MatrixXd::Identity(D, D));
      if (ldlt.info() != Eigen::Success) continue;
      Eigen::VectorXd d = ldlt.solve(-g);
      if (d.allFinite() && d.dot(g) < 0.0) return d;
    }
    return std::nullopt;
  };
  const auto line_search = [&](const Eigen::VectorXd& d, Eigen::VectorXd& out) -> std::optional<double> {
    const double slope = d.dot(g);
    double t = 1.0;
    // Steps below 2^-30 change the norm far less than any useful tolerance.
    for (int bt = 0; bt <= 30; ++bt, t *= 0.5) {
      Eigen::VectorXd trial = x + t * d;
      const double v = phi.value(trial);
      if (v <= value + 1e-4 * t * slope) {
        out = std::move(trial);
        return v;
      }
    }
    return std::nullopt;
  };
  while (!converged && it < options.max_iterations) {
    ++it;
    const double g2 = g.squaredNorm();
    if (g2 == 0.0) {
      converged = true;
      break;
    }
    Eigen::VectorXd best_x;
    double best_v = value;
    const auto consider = [&](const Eigen::VectorXd& d) {
      Eigen::VectorXd trial;
      const auto v = line_search(d, trial);
      if (v && *v < best_v) {
        best_v = *v;
        best_x = std::move(trial);
      }
    };
    if (auto d = direction(H)) consider(*d);
    if (p < 2.0) {
      if (auto d = direction(Hm)) consider(*d);
    }
    if (best_x.size() == 0) consider(-g * (value / g2));
    // No Armijo decrease along any direction at the resolution of the objective.
    if (best_x.size() == 0) {
      converged = true;
      break;
    }
    // tol applies to the norm, the p-th root of the objective.
    const double before = std::pow(value, 1.0 / p);
    x = std::move(best_x);
    value = phi.derivatives(x, g, H, Hm);
    const double after = std::pow(value, 1.0 / p);
    converged = value == 0.0 || before - after <= options.tol * after;
  }
  BestApproxResult r;
  r.n = n;
  r.method = ApproxMethod::kDescent;
  r.minimizer = phi.decode(x);
  r.iterations = it;
  if (!converged) {
    std::vector<double> best(4 * (n + 1));
    for (std::size_t k = 0; k <= n; ++k) {
      const Quaternion c = r.minimizer.coefficient(k);
      best[4 * k] = c.w;
      best[4 * k + 1] = c.x;
      best[4 * k + 2] = c.y;
      best[4 * k + 3] = c.z;
    }
    throw SolverFailure("descent did not converge within " + std::to_string(options.max_iterations) +
                            " iterations",
                        std::pow(alpha * p / (2.0 * kPi) * value, 1.0 / p), std::move(best));
  }
  r.value = value == 0.0 ? 0.0 : slice_norm(f - r.minimizer, p, alpha, I, sizes);
  return r;
}

BestApproxResult best_approx(const SliceSeries& f, std::size_t n, double p, double alpha,
                             const ImaginaryUnit& I, GridSizes sizes) {
  if (p == 2.0) return best_approx_second(f, n, alpha, I);
  return best_approx_lp(f, n, p, alpha, I, {}, sizes);
}

double vdp_constant(double p) {
  if (!(p >= 1.0)) throw DomainError("the de la Vallee Poussin estimate needs p >= 1");
  return std::pow(2.0, (p - 1.0) / p) * std::pow(std::pow(2.0, p) + 1.0, 1.0 / p) + 1.0;
}

namespace {

/// Both sides of an estimate are at rounding level relative to ||f||.
bool negligible(double lhs, double rhs, double scale) {
  const double floor = 1e-12 * std::max(scale, std::numeric_limits<double>::min());
  return lhs <= floor && rhs <= floor;
}

}  // namespace

EstimateReport verify_jackson(const SliceSeries& f, int n, int m, double p, double alpha,
                              const ImaginaryUnit& I, std::size_t h_grid, GridSizes sizes) {
  const MultiplierOperator op = jackson_op(n, m, p);
  EstimateReport rep;
  rep.theorem = "jackson";
  rep.n = n;
  rep.m = m;
  rep.r = op.r;
  rep.p = p;
  rep.alpha = alpha;
  rep.slice = I;
  rep.grid = sizes;
  rep.h_grid = h_grid;
  rep.lhs = slice_norm(apply(op, f) - f, p, alpha, I, sizes);
  ModulusQuery q;
  q.k = m + 1;
  q.delta = 1.0 / static_cast<double>(n);
  q.p = p;
  q.alpha = alpha;
  q.slice = I;
  q.h_grid = h_grid;
  q.grid = sizes;
  rep.rhs = modulus(f, q);
  rep.degenerate = negligible(rep.lhs, rep.rhs, slice_norm(f, p, alpha, I, sizes));
  rep.ratio = rep.degenerate ? std::numeric_limits<double>::quiet_NaN() : rep.lhs / rep.rhs;
  rep.passed = rep.degenerate || std::isfinite(rep.ratio);
  return rep;
}

EstimateReport verify_vdp(const SliceSeries& f, int n, double p, double alpha, const ImaginaryUnit& I,
                          GridSizes sizes) {
  EstimateReport rep;
  rep.theorem = "vdp";
  rep.n = n;
  rep.r = 1;
  rep.p = p;
  rep.alpha = alpha;
  rep.slice = I;
  rep.grid = sizes;
  rep.constant = vdp_constant(p);
  rep.lhs = slice_norm(apply(vdp_op(n), f) - f, p, alpha, I, sizes);
  const BestApproxResult best = best_approx(f, static_cast<std::size_t>(n), p, alpha, I, sizes);
  rep.best_approx = best.value;
  rep.method = method_name(best.method);
  rep.rhs = rep.constant * best.value;
  rep.slack = rep.rhs - rep.lhs;
  rep.ratio = rep.rhs > 0.0 ? rep.lhs / rep.rhs : std::numeric_limits<double>::quiet_NaN();
  rep.degenerate = negligible(rep.lhs, rep.rhs, slice_norm(f, p, alpha, I, sizes));
  rep.passed = rep.degenerate || rep.slack >= 0.0;
  return rep;
}

}  // namespace slicefock
