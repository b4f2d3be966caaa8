#include "slicefock/slice_series.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "slicefock/errors.hpp"
#include "slicefock/format.hpp"

namespace slicefock {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double log_add(double a, double b) {
  if (a == -kInf) return b;
  if (b == -kInf) return a;
  const double m = std::max(a, b);
  return m + std::log1p(std::exp(std::min(a, b) - m));
}

double log_factorial(std::size_t k) { return std::lgamma(static_cast<double>(k) + 1.0); }

/// x^k / k! with x > 0: direct quotient while it is representable, log form otherwise.
ScaledQuaternion power_over_factorial(double x, std::size_t k, double sign = 1.0) {
  if (k <= 170) {
    double fact = 1.0;
    for (std::size_t j = 2; j <= k; ++j) fact *= static_cast<double>(j);
    const double v = std::pow(x, static_cast<double>(k)) / fact;
    if (std::isnormal(v) && v > 1e-280 && v < 1e280) return {0.0, Quaternion{sign * v}};
  }
  return {static_cast<double>(k) * std::log(x) - log_factorial(k), Quaternion{sign}};
}

/// Unit-modulus direction of c^k for c in some slice, as a quaternion.
Quaternion power_direction(const Quaternion& c, std::size_t k) {
  const TrigForm t = trig_form(c);
  if (t.real_axis) return Quaternion{(t.a > 0.0 && (k % 2 == 1)) ? -1.0 : 1.0};
  const double ka = static_cast<double>(k) * t.a;
  return t.unit.embed(std::cos(ka), std::sin(ka));
}

/// exp(w) for w in the slice through w, in scaled form.
ScaledQuaternion scaled_qexp(const Quaternion& w) {
  return {w.w, qexp(Quaternion{0.0, w.x, w.y, w.z})};
}

/// sum_k q^k d_k by Horner; for |q| > 1 the powers are factored out as |q|^{D}.
ScaledQuaternion scaled_horner(const std::vector<Quaternion>& d, const Quaternion& q) {
  if (d.empty()) return {0.0, Quaternion{}};
  const double r = q.norm();
  const std::size_t D = d.size() - 1;
  if (r <= 1.0) {
    Quaternion acc = d[D];
    for (std::size_t k = D; k-- > 0;) acc = q * acc + d[k];
    return {0.0, acc};
  }
  // q^k d_k = r^D u^k (d_k r^{k-D}), u = q / r.
  const Quaternion u = q / r;
  Quaternion acc = d[D];
  double rk = 1.0;  // r^{k-D}, nonincreasing
  for (std::size_t k = D; k-- > 0;) {
    rk /= r;
    acc = u * acc + d[k] * rk;
  }
  return {static_cast<double>(D) * std::log(r), acc};
}

double log_norm(const Quaternion& q) {
  const double n = q.norm();
  return n > 0.0 ? std::log(n) : -kInf;
}

}  // namespace

ScaledQuaternion& ScaledQuaternion::operator+=(const ScaledQuaternion& o) {
  if (o.mantissa.norm2() == 0.0) return *this;
  if (mantissa.norm2() == 0.0) {
    *this = o;
    return *this;
  }
  const double m = std::max(log_scale, o.log_scale);
  mantissa = mantissa * std::exp(log_scale - m) + o.mantissa * std::exp(o.log_scale - m);
  log_scale = m;
  return *this;
}

// ---------------------------------------------------------------------------
// Generator

Generator Generator::exp() {
  Generator g;
  g.kind_ = Kind::kExp;
  return g;
}

Generator Generator::gauss(double beta) {
  if (!std::isfinite(beta)) throw DomainError("gauss generator needs a finite beta");
  Generator g;
  g.kind_ = Kind::kGauss;
  g.beta_ = beta;
  return g;
}

Generator Generator::monomial(std::size_t k) {
  Generator g;
  g.kind_ = Kind::kMonomial;
  g.power_ = k;
  return g;
}

Generator Generator::kernel_section(const Quaternion& center, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("kernel section needs alpha > 0");
  Generator g;
  g.kind_ = Kind::kKernelSection;
  g.center_ = center;
  g.alpha_ = alpha;
  return g;
}

Generator Generator::dilated(double r) const {
  Generator g = *this;
  g.scale_ *= r;
  return g;
}

double Generator::exp_type_rate() const {
  if (kind_ == Kind::kExp) return scale_;
  return alpha_ * scale_ * center_.norm();
}

ScaledQuaternion Generator::coefficient_scaled(std::size_t k) const {
  const double kd = static_cast<double>(k);
  switch (kind_) {
    case Kind::kExp:
      return power_over_factorial(scale_, k);
    case Kind::kGauss: {
      if (k % 2 == 1) return {0.0, Quaternion{}};
      const std::size_t m = k / 2;
      if (m == 0) return {0.0, Quaternion{1.0}};
      if (beta_ == 0.0) return {0.0, Quaternion{}};
      const double sign = (beta_ < 0.0 && m % 2 == 1) ? -1.0 : 1.0;
      const double b = std::abs(beta_) * scale_ * scale_;
      return power_over_factorial(b, m, sign);
    }
    case Kind::kMonomial:
      if (k != power_) return {0.0, Quaternion{}};
      return {kd * std::log(scale_), Quaternion{1.0}};
    case Kind::kKernelSection: {
      if (k == 0) return {0.0, Quaternion{1.0}};
      const Quaternion c = center_.conj() * (alpha_ * scale_);
      const double cn = c.norm();
      if (cn == 0.0) return {0.0, Quaternion{}};
      return {kd * std::log(cn) - log_factorial(k), power_direction(c, k)};
    }
  }
  return {0.0, Quaternion{}};
}

Quaternion Generator::coefficient(std::size_t k) const { return coefficient_scaled(k).value(); }

double Generator::log_tail_bound(double radius, std::size_t K) const {
  const double Kd = static_cast<double>(K);
  switch (kind_) {
    case Kind::kExp:
    case Kind::kKernelSection: {
      const double x = exp_type_rate() * radius;
      if (x == 0.0) return -kInf;
      const double ratio = x / (Kd + 2.0);
      if (ratio >= 1.0) return kInf;
      return (Kd + 1.0) * std::log(x) - log_factorial(K + 1) - std::log1p(-ratio);
    }
    case Kind::kGauss: {
      const double x = std::abs(beta_) * scale_ * scale_ * radius * radius;
      if (x == 0.0) return -kInf;
      const std::size_t m0 = K / 2 + 1;
      const double ratio = x / (static_cast<double>(m0) + 1.0);
      if (ratio >= 1.0) return kInf;
      return static_cast<double>(m0) * std::log(x) - log_factorial(m0) - std::log1p(-ratio);
    }
    case Kind::kMonomial:
      if (K >= power_ || radius == 0.0) return -kInf;
      return static_cast<double>(power_) * std::log(scale_ * radius);
  }
  return kInf;
}

bool Generator::parseval_divergent(double alpha) const {
  if (kind_ != Kind::kGauss) return false;
  const double b = std::abs(beta_) * scale_ * scale_;
  return 4.0 * b * b / (alpha * alpha) >= 1.0;
}

double Generator::log_parseval_tail(double alpha, std::size_t K) const {
  const double Kd = static_cast<double>(K);
  switch (kind_) {
    case Kind::kExp:
    case Kind::kKernelSection: {
      // |a_k|^2 k!/alpha^k = y^k / k! with y = rate^2 / alpha.
      const double c = exp_type_rate();
      const double y = c * c / alpha;
      if (y == 0.0) return -kInf;
      const double ratio = y / (Kd + 2.0);
      if (ratio >= 1.0) return kInf;
      return (Kd + 1.0) * std::log(y) - log_factorial(K + 1) - std::log1p(-ratio);
    }
    case Kind::kGauss: {
      // t_m = b^{2m} (2m)! / (m!^2 alpha^{2m}); t_{m+1}/t_m increases to 4 b^2/alpha^2.
      const double b = std::abs(beta_) * scale_ * scale_;
      if (b == 0.0) return -kInf;
      const double limit = 4.0 * b * b / (alpha * alpha);
      if (limit >= 1.0) return kInf;
      const std::size_t m0 = K / 2 + 1;
      const double md = static_cast<double>(m0);
      const double log_t = 2.0 * md * std::log(b / alpha) + log_factorial(2 * m0) - 2.0 * log_factorial(m0);
      return log_t - std::log1p(-limit);
    }
    case Kind::kMonomial:
      if (K >= power_) return -kInf;
      return 2.0 * static_cast<double>(power_) * std::log(scale_) + log_factorial(power_) -
             static_cast<double>(power_) * std::log(alpha);
  }
  return kInf;
}

ScaledQuaternion Generator::closed_form(const Quaternion& q_in) const {
  const Quaternion q = q_in * scale_;
  switch (kind_) {
    case Kind::kExp:
      return scaled_qexp(q);
    case Kind::kGauss:
      return scaled_qexp(q * q * beta_);
    case Kind::kMonomial: {
      const double r = q.norm();
      if (r == 0.0) return {0.0, Quaternion{power_ == 0 ? 1.0 : 0.0}};
      if (power_ == 0) return {0.0, Quaternion{1.0}};
      return {static_cast<double>(power_) * std::log(r), power_direction(q / r, power_)};
    }
    case Kind::kKernelSection: {
      // f(z) = e^{z c} on the slice of c; other points via the representation formula.
      const Quaternion c = center_.conj() * alpha_;
      if (c.is_real()) return scaled_qexp(q * c.w);
      const ImaginaryUnit L = slice_unit(c).unit;
      const std::complex<double> cc = slice_coordinates(c, L);
      const SliceUnit qs = slice_unit(q);
      const double x = q.w;
      const double y = q.imag_norm();
      const std::complex<double> e1 = cc * std::complex<double>(x, y);
      const std::complex<double> e2 = cc * std::complex<double>(x, -y);
      const double m = std::max(e1.real(), e2.real());
      const std::complex<double> A = std::exp(e1 - m);
      const std::complex<double> B = std::exp(e2 - m);
      const Quaternion JL = qs.unit.as_quaternion() * L.as_quaternion();
      const Quaternion one{1.0};
      const Quaternion v = ((one - JL) * L.embed(A) + (one + JL) * L.embed(B)) * 0.5;
      return {m, v};
    }
  }
  return {0.0, Quaternion{}};
}

std::string Generator::tag() const {
  std::string t;
  switch (kind_) {
    case Kind::kExp:
      t = "exp";
      break;
    case Kind::kGauss:
      t = "gauss:" + format_double(beta_);
      break;
    case Kind::kMonomial:
      t = "mono:" + std::to_string(power_);
      break;
    case Kind::kKernelSection:
      t = "kernel-section:" + format_double(center_.w) + "," + format_double(center_.x) + "," +
          format_double(center_.y) + "," + format_double(center_.z) + "," + format_double(alpha_);
      break;
  }
  if (scale_ != 1.0) t += "@" + format_double(scale_);
  return t;
}

// ---------------------------------------------------------------------------
// SliceSeries

SliceSeries::SliceSeries(std::vector<Quaternion> coefficients) : head_(std::move(coefficients)) {}

SliceSeries::SliceSeries(const Generator& g, const Quaternion& weight) {
  terms_.push_back({g, weight});
}

ScaledQuaternion SliceSeries::coefficient_scaled(std::size_t k) const {
  if (k < head_.size()) return {0.0, head_at(k)};
  ScaledQuaternion acc{0.0, Quaternion{}};
  for (const auto& t : terms_) acc += t.generator.coefficient_scaled(k).times(t.weight);
  return acc;
}

Quaternion SliceSeries::coefficient(std::size_t k) const { return coefficient_scaled(k).value(); }

std::vector<Quaternion> SliceSeries::coefficients(std::size_t count) const {
  std::vector<Quaternion> out(count);
  for (std::size_t k = 0; k < count; ++k) out[k] = coefficient(k);
  return out;
}

std::optional<std::size_t> SliceSeries::finite_degree() const {
  std::optional<std::size_t> deg;
  for (std::size_t k = head_.size(); k-- > 0;) {
    if (head_[k].norm2() != 0.0) {
      deg = k;
      break;
    }
  }
  for (const auto& t : terms_) {
    if (t.generator.kind() != Generator::Kind::kMonomial) return std::nullopt;
    const std::size_t pw = t.generator.power();
    if (t.weight.norm2() != 0.0) deg = std::max(deg.value_or(0), pw);
  }
  return deg.value_or(0);
}

std::string SliceSeries::generator_tag() const {
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    if (!(t.weight == Quaternion{1.0})) {
      out += "(" + format_double(t.weight.w) + "," + format_double(t.weight.x) + "," +
             format_double(t.weight.y) + "," + format_double(t.weight.z) + ")*";
    }
    out += t.generator.tag();
  }
  return out;
}

double SliceSeries::log_tail_bound(double radius, std::size_t K) const {
  double acc = -kInf;
  const double lr = radius > 0.0 ? std::log(radius) : -kInf;
  for (std::size_t k = K + 1; k < head_.size(); ++k) {
    const double ln = log_norm(head_at(k));
    if (ln == -kInf) continue;
    acc = log_add(acc, static_cast<double>(k) * lr + ln);
  }
  const std::size_t Kg = head_.empty() ? K : std::max(K, head_.size() - 1);
  for (const auto& t : terms_) {
    const double lw = log_norm(t.weight);
    if (lw == -kInf) continue;
    acc = log_add(acc, lw + t.generator.log_tail_bound(radius, Kg));
  }
  return acc;
}

std::optional<std::size_t> SliceSeries::working_degree(double radius, double tail_scale) const {
  const std::size_t K0 = head_.empty() ? 0 : head_.size() - 1;
  const double lr = radius > 0.0 ? std::log(radius) : -kInf;
  const double log_scale = std::log(tail_scale);
  const double log_abs_tol = std::log(kTailTolerance);
  const double log_rel_tol = std::log(kRelativeTailTolerance);
  double log_abs_sum = -kInf;
  for (std::size_t k = 0; k <= kDegreeCap; ++k) {
    const double lc = coefficient_scaled(k).log_abs();
    if (lc != -kInf && !std::isnan(lc)) {
      const double term = (k == 0) ? lc : static_cast<double>(k) * lr + lc;
      log_abs_sum = log_add(log_abs_sum, term);
    }
    if (k < K0) continue;
    const double lt = log_tail_bound(radius, k) + log_scale;
    if (lt == -kInf) return k;
    if (lt <= log_abs_tol && lt <= log_rel_tol + log_abs_sum) return k;
  }
  return std::nullopt;
}

double SliceSeries::parseval_tail(double alpha, long n) const {
  if (!(alpha > 0.0)) throw DomainError("parseval_tail needs alpha > 0");
  const double la = std::log(alpha);
  const std::size_t start = static_cast<std::size_t>(n + 1);
  const std::size_t H = head_.size();
  const double T = static_cast<double>(std::max<std::size_t>(terms_.size(), 1));
  double log_sum = -kInf;
  for (std::size_t k = start; k <= kDegreeCap + start; ++k) {
    const double lc = coefficient_scaled(k).log_abs();
    if (lc != -kInf && !std::isnan(lc)) {
      log_sum = log_add(log_sum, 2.0 * lc + log_factorial(k) - static_cast<double>(k) * la);
    }
    if (k + 1 < H) continue;
    // Tail beyond k: Cauchy-Schwarz over the generator terms.
    double log_tail = -kInf;
    bool divergent = false;
    for (const auto& t : terms_) {
      const double lw = log_norm(t.weight);
      if (lw == -kInf) continue;
      divergent = divergent || t.generator.parseval_divergent(alpha);
      log_tail = log_add(log_tail, 2.0 * lw + t.generator.log_parseval_tail(alpha, k));
    }
    if (divergent) throw NotInSpaceError("coefficient norm diverges: " + generator_tag());
    log_tail += std::log(T);
    if (log_tail == -kInf) return std::exp(log_sum);
    if (log_tail <= std::log(1e-17) + log_sum) return std::exp(log_sum);
  }
  throw TruncationError("coefficient tail not summable within the degree cap");
}

ScaledQuaternion SliceSeries::closed_form(const Quaternion& q) const {
  // Generators in closed form, plus the head correction sum_{k<H} q^k (head_k - gen_k).
  std::vector<Quaternion> correction = head();
  for (const auto& t : terms_) {
    for (std::size_t k = 0; k < correction.size(); ++k) {
      correction[k] -= t.generator.coefficient(k) * t.weight;
    }
  }
  ScaledQuaternion acc = scaled_horner(correction, q);
  for (const auto& t : terms_) acc += t.generator.closed_form(q).times(t.weight);
  return acc;
}

Quaternion SliceSeries::head_at(std::size_t k) const {
  if (head_scale_ == 1.0) return head_[k];
  return head_[k] * std::pow(head_scale_, static_cast<double>(k));
}

std::vector<Quaternion> SliceSeries::head() const {
  std::vector<Quaternion> out(head_.size());
  for (std::size_t k = 0; k < head_.size(); ++k) out[k] = head_at(k);
  return out;
}

void SliceSeries::materialize() {
  if (head_scale_ == 1.0) return;
  head_ = head();
  head_scale_ = 1.0;
}

void SliceSeries::extend_head(std::size_t n) {
  materialize();
  while (head_.size() < n) head_.push_back(coefficient(head_.size()));
}

SliceSeries& SliceSeries::operator+=(const SliceSeries& o) {
  SliceSeries other = o;
  const std::size_t H = std::max(head_.size(), other.head_.size());
  extend_head(H);
  other.extend_head(H);
  for (std::size_t k = 0; k < H; ++k) head_[k] += other.head_[k];
  for (auto& t : other.terms_) terms_.push_back(t);
  return *this;
}

SliceSeries& SliceSeries::operator-=(const SliceSeries& o) { return *this += (-SliceSeries(o)); }

SliceSeries& SliceSeries::operator*=(const Quaternion& b) {
  materialize();
  for (auto& c : head_) c = c * b;
  for (auto& t : terms_) t.weight = t.weight * b;
  return *this;
}

// ---------------------------------------------------------------------------
// Free operations

Quaternion evaluate(const SliceSeries& f, const Quaternion& q, Evaluation mode) {
  const auto K = f.working_degree(q.norm());
  if (!K) {
    if (mode == Evaluation::kSeriesOrClosedForm) return f.closed_form(q).value();
    throw TruncationError("truncation error exceeds tolerance at |q| = " + format_double(q.norm()));
  }
  const std::vector<Quaternion> a = f.coefficients(*K + 1);
  Quaternion acc = a[*K];
  for (std::size_t k = *K; k-- > 0;) acc = q * acc + a[k];
  return acc;
}

double log_abs_evaluate(const SliceSeries& f, const Quaternion& q) { return f.closed_form(q).log_abs(); }

SliceSeries dilate(const SliceSeries& f, double r) {
  if (!(r > 0.0 && r <= 1.0)) throw DomainError("dilation factor must lie in (0, 1]");
  SliceSeries out = f;
  out.head_scale_ *= r;
  for (auto& t : out.terms_) t.generator = t.generator.dilated(r);
  return out;
}

SliceSeries taylor_truncate(const SliceSeries& f, std::size_t n) {
  return SliceSeries(f.coefficients(n + 1));
}

SliceSeries scale_coefficients(const SliceSeries& f, std::span<const double> rho) {
  std::vector<Quaternion> c(rho.size());
  for (std::size_t k = 0; k < rho.size(); ++k) c[k] = rho[k] == 0.0 ? Quaternion{} : f.coefficient(k) * rho[k];
  return SliceSeries(std::move(c));
}

// ---------------------------------------------------------------------------
// SplitPair

SplitPair::SplitPair(const SliceSeries& f, const ImaginaryUnit& I, const ImaginaryUnit& J,
                     double max_radius)
    : SplitPair(f, I, J, nullptr, 1.0, max_radius) {}

SplitPair::SplitPair(const SliceSeries& f, const ImaginaryUnit& I, const ImaginaryUnit& J,
                     Multiplier multiplier, double multiplier_bound, double max_radius)
    : SplitPair(f, I, J, std::move(multiplier), multiplier_bound, RotationSum{}, max_radius) {}

SplitPair::SplitPair(const SliceSeries& f, const ImaginaryUnit& I, const ImaginaryUnit& J,
                     Multiplier multiplier, double multiplier_bound, RotationSum rotations,
                     double max_radius)
    : f_(f),
      I_(I),
      J_(J),
      K_(I),
      multiplier_(std::move(multiplier)),
      multiplier_bound_(multiplier_bound),
      rotations_(std::move(rotations)) {
  if (rotations_.weights.size() != rotations_.angles.size()) {
    throw DomainError("rotation sum needs one angle per weight");
  }
  if (std::abs(I.dot(J)) >= 1e-12) throw DomainError("split requires J perpendicular to I");
  K_ = cross(I, J);
  const auto K = f_.working_degree(max_radius, multiplier_bound_);
  build(K ? *K + 1 : kDegreeCap + 1);
}

void SplitPair::build(std::size_t n) const {
  const std::size_t start = F_.size();
  if (n <= start) return;
  F_.resize(n);
  G_.resize(n);
  const Quaternion Iq = I_.as_quaternion();
  const Quaternion Jq = J_.as_quaternion();
  const Quaternion Kq = K_.as_quaternion();
  for (std::size_t k = start; k < n; ++k) {
    const Quaternion a = f_.coefficient(k);
    std::complex<double> Fk(a.w, dot4(a, Iq));
    std::complex<double> Gk(dot4(a, Jq), dot4(a, Kq));
    if (multiplier_) {
      const std::complex<double> m = multiplier_(k);
      Fk *= m;
      Gk *= m;
    }
    F_[k] = Fk;
    G_[k] = Gk;
  }
}

std::complex<double> SplitPair::F_coefficient(std::size_t k) const {
  if (k < F_.size()) return F_[k];
  const Quaternion a = f_.coefficient(k);
  std::complex<double> c(a.w, dot4(a, I_.as_quaternion()));
  return multiplier_ ? c * multiplier_(k) : c;
}

std::complex<double> SplitPair::G_coefficient(std::size_t k) const {
  if (k < G_.size()) return G_[k];
  const Quaternion a = f_.coefficient(k);
  std::complex<double> c(dot4(a, J_.as_quaternion()), dot4(a, K_.as_quaternion()));
  return multiplier_ ? c * multiplier_(k) : c;
}

std::optional<std::size_t> SplitPair::degree_for(double r) const {
  return f_.working_degree(r, multiplier_bound_);
}

SplitPair::Value SplitPair::horner(std::complex<double> z, std::size_t K) const {
  std::complex<double> F = F_[K];
  std::complex<double> G = G_[K];
  for (std::size_t k = K; k-- > 0;) {
    F = F * z + F_[k];
    G = G * z + G_[k];
  }
  return {F, G};
}

SplitPair::Value SplitPair::closed_form_at(std::complex<double> z) const {
  const auto plain = [this](std::complex<double> w) -> Value {
    const Quaternion v = f_.closed_form(I_.embed(w)).value();
    return {{v.w, dot4(v, I_.as_quaternion())},
            {dot4(v, J_.as_quaternion()), dot4(v, K_.as_quaternion())}};
  };
  if (!multiplier_) return plain(z);
  if (rotations_.weights.empty()) {
    throw TruncationError("series with coefficient multipliers exceeds the degree cap at |z| = " +
                          format_double(std::abs(z)));
  }
  Value sum{};
  for (std::size_t s = 0; s < rotations_.weights.size(); ++s) {
    const Value v = plain(z * std::polar(1.0, rotations_.angles[s]));
    sum.F += rotations_.weights[s] * v.F;
    sum.G += rotations_.weights[s] * v.G;
  }
  return sum;
}

SplitPair::Value SplitPair::at(std::complex<double> z) const {
  const auto K = degree_for(std::abs(z));
  if (!K) return closed_form_at(z);
  build(*K + 1);
  return horner(z, *K);
}

void SplitPair::ring(double r, std::span<const std::complex<double>> directions,
                     std::span<Value> out) const {
  const auto K = degree_for(r);
  const bool series = K.has_value();
  if (series) build(*K + 1);
  for (std::size_t l = 0; l < directions.size(); ++l) {
    const std::complex<double> z = directions[l] * r;
    out[l] = series ? horner(z, *K) : closed_form_at(z);
  }
}

Quaternion SplitPair::assemble(const Value& v) const {
  return I_.embed(v.F) + J_.as_quaternion() * v.G.real() + K_.as_quaternion() * v.G.imag();
}

SplitPair split(const SliceSeries& f, const ImaginaryUnit& I, const ImaginaryUnit& J) {
  return SplitPair(f, I, J);
}

Quaternion representation_formula(
    const std::function<Quaternion(std::complex<double>)>& f_on_slice, const ImaginaryUnit& I,
    const Quaternion& q) {
  const ImaginaryUnit J = slice_unit(q).unit;
  const double x = q.w;
  const double y = q.imag_norm();
  const Quaternion JI = J.as_quaternion() * I.as_quaternion();
  const Quaternion one{1.0};
  return ((one - JI) * f_on_slice({x, y}) + (one + JI) * f_on_slice({x, -y})) * 0.5;
}

// ---------------------------------------------------------------------------
// Random series and coefficient files

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

SliceSeries random_series(std::size_t degree, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Quaternion> c(degree + 1);
  for (auto& a : c) {
    a.w = (2.0 * rng.uniform() - 1.0) / 2.0;
    a.x = (2.0 * rng.uniform() - 1.0) / 2.0;
    a.y = (2.0 * rng.uniform() - 1.0) / 2.0;
    a.z = (2.0 * rng.uniform() - 1.0) / 2.0;
  }
  return SliceSeries(std::move(c));
}

SliceSeries read_coefficients(std::istream& in) {
  std::vector<Quaternion> c;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    Quaternion a;
    std::string extra;
    if (!(ls >> a.w >> a.x >> a.y >> a.z) || (ls >> extra)) {
      throw DomainError("coefficient file line " + std::to_string(lineno) +
                        ": expected four decimal floats \"w x y z\"");
    }
    c.push_back(a);
    ++lineno;
  }
  return SliceSeries(std::move(c));
}

SliceSeries read_coefficients_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open coefficient file: " + path);
  return read_coefficients(in);
}

void write_coefficients(std::ostream& out, const SliceSeries& f, std::size_t count) {
  for (std::size_t k = 0; k < count; ++k) {
    const Quaternion a = f.coefficient(k);
    out << format_double(a.w) << ' ' << format_double(a.x) << ' ' << format_double(a.y) << ' '
        << format_double(a.z) << '\n';
  }
}

}  // namespace slicefock
