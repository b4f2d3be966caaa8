#pragma once

// Entire slice-regular functions f(q) = sum_k q^k a_k with coefficients on the right.
//
// A SliceSeries is an explicit head (a_0, ..., a_{D-1}) plus a right-weighted sum of
// closed-form generators supplying every coefficient with index >= D. Arithmetic
// (sum, right scalar multiple, dilation, truncation) stays inside this
// representation, so tails of exp-type functions are never truncated silently.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "slicefock/quaternion.hpp"

namespace slicefock {

/// Degree cap for on-demand coefficient generation.
inline constexpr std::size_t kDegreeCap = 512;
/// Absolute tail tolerance for series summation.
inline constexpr double kTailTolerance = 1e-14;
/// Relative tail tolerance (against sum_k |q|^k |a_k|) for series summation.
inline constexpr double kRelativeTailTolerance = 1e-16;

/// Value e^{log_scale} * mantissa; keeps large closed-form values representable.
struct ScaledQuaternion {
  double log_scale = 0.0;
  Quaternion mantissa;

  Quaternion value() const { return mantissa * std::exp(log_scale); }
  double log_abs() const { return log_scale + std::log(mantissa.norm()); }
  ScaledQuaternion& operator+=(const ScaledQuaternion& o);
  /// Right multiplication by a quaternion.
  ScaledQuaternion times(const Quaternion& b) const { return {log_scale, mantissa * b}; }
};

/// Closed-form entire function with known Taylor coefficients at 0, optionally
/// dilated: the generator with scale s represents q -> g(s q).
class Generator {
 public:
  enum class Kind { kExp, kGauss, kMonomial, kKernelSection };

  /// e^q, a_k = 1/k!.
  static Generator exp();
  /// e^{beta q^2}, a_{2m} = beta^m / m!.
  static Generator gauss(double beta);
  /// q^k.
  static Generator monomial(std::size_t k);
  /// Reproducing-kernel section r -> sum_k alpha^k r^k conj(q0)^k / k!.
  static Generator kernel_section(const Quaternion& center, double alpha);

  Kind kind() const { return kind_; }
  double scale() const { return scale_; }
  double beta() const { return beta_; }
  std::size_t power() const { return power_; }
  const Quaternion& center() const { return center_; }
  double alpha() const { return alpha_; }

  /// The generator of q -> g(r q).
  Generator dilated(double r) const;

  Quaternion coefficient(std::size_t k) const;
  /// Coefficient in scaled form; stays accurate where coefficient(k) underflows.
  ScaledQuaternion coefficient_scaled(std::size_t k) const;
  /// log of an upper bound for sum_{k > K} radius^k |a_k|; +inf if no bound is available.
  double log_tail_bound(double radius, std::size_t K) const;
  /// log of an upper bound for sum_{k > K} |a_k|^2 k! / alpha^k; +inf when it diverges.
  double log_parseval_tail(double alpha, std::size_t K) const;
  /// True when sum_k |a_k|^2 k!/alpha^k diverges.
  bool parseval_divergent(double alpha) const;
  /// g(s q) evaluated in closed form.
  ScaledQuaternion closed_form(const Quaternion& q) const;
  /// Canonical tag: "exp", "gauss:<beta>", "mono:<k>", "kernel-section:<w>,<x>,<y>,<z>,<alpha>",
  /// with "@<scale>" appended when dilated.
  std::string tag() const;

 private:
  Generator() = default;
  /// |s * c| for exp-type generators (exp and kernel sections).
  double exp_type_rate() const;

  Kind kind_ = Kind::kExp;
  double scale_ = 1.0;
  double beta_ = 0.0;
  std::size_t power_ = 0;
  Quaternion center_;
  double alpha_ = 0.0;
};

struct GeneratorTerm {
  Generator generator;
  Quaternion weight{1.0};
};

class SliceSeries {
 public:
  /// The zero function.
  SliceSeries() = default;
  explicit SliceSeries(std::vector<Quaternion> coefficients);
  explicit SliceSeries(const Generator& g, const Quaternion& weight = Quaternion{1.0});

  Quaternion coefficient(std::size_t k) const;
  ScaledQuaternion coefficient_scaled(std::size_t k) const;
  std::vector<Quaternion> coefficients(std::size_t count) const;

  /// Explicit coefficients a_0, ..., a_{D-1}.
  std::vector<Quaternion> head() const;
  const std::vector<GeneratorTerm>& generators() const { return terms_; }
  /// Degree bound of the polynomial if every generator term is a monomial.
  std::optional<std::size_t> finite_degree() const;
  /// Description of the generator part, empty for explicit coefficient series.
  std::string generator_tag() const;

  /// log of a bound on sum_{k > K} radius^k |a_k|.
  double log_tail_bound(double radius, std::size_t K) const;
  /// Smallest K such that the summation tail at `radius` meets the tail tolerances,
  /// or nullopt if none exists up to kDegreeCap.
  /// `tail_scale` multiplies the tail bound (coefficient multipliers of bounded modulus).
  std::optional<std::size_t> working_degree(double radius, double tail_scale = 1.0) const;
  /// sum_{k > n} |a_k|^2 k!/alpha^k, i.e. the squared distance to the degree-n Taylor
  /// polynomial in the Hilbert space of the second kind. n = -1 gives the full norm.
  /// Throws TruncationError if the tail cannot be bounded within kDegreeCap terms.
  double parseval_tail(double alpha, long n) const;

  /// Closed-form value (generators in closed form, head corrections by Horner).
  ScaledQuaternion closed_form(const Quaternion& q) const;

  SliceSeries& operator+=(const SliceSeries& o);
  SliceSeries& operator-=(const SliceSeries& o);
  /// Right multiplication by a quaternion: a_k -> a_k b.
  SliceSeries& operator*=(const Quaternion& b);

  friend SliceSeries operator+(SliceSeries a, const SliceSeries& b) { return a += b; }
  friend SliceSeries operator-(SliceSeries a, const SliceSeries& b) { return a -= b; }
  friend SliceSeries operator*(SliceSeries a, const Quaternion& b) { return a *= b; }
  friend SliceSeries operator-(SliceSeries a) { return a *= Quaternion{-1.0}; }

 private:
  friend SliceSeries dilate(const SliceSeries& f, double r);
  /// Materializes generator coefficients into the head up to size n.
  void extend_head(std::size_t n);
  /// Applies a pending dilation to the stored head.
  void materialize();
  Quaternion head_at(std::size_t k) const;

  std::vector<Quaternion> head_;
  /// Pending dilation of the head, head_k -> head_k s^k; composes by one product.
  double head_scale_ = 1.0;
  std::vector<GeneratorTerm> terms_;
};

enum class Evaluation {
  /// Series summation only; TruncationError when the tail cannot be bounded.
  kSeries,
  /// Series summation, falling back to the closed form past the degree cap.
  kSeriesOrClosedForm,
};

/// f(q) = sum_k q^k a_k.
Quaternion evaluate(const SliceSeries& f, const Quaternion& q,
                    Evaluation mode = Evaluation::kSeries);

/// log |f(q)| without overflow; uses the closed form.
double log_abs_evaluate(const SliceSeries& f, const Quaternion& q);

/// q -> f(r q) for 0 < r <= 1.
SliceSeries dilate(const SliceSeries& f, double r);

/// Taylor polynomial of degree n.
SliceSeries taylor_truncate(const SliceSeries& f, std::size_t n);

/// Polynomial with coefficients a_k -> rho_k a_k for k < rho.size().
SliceSeries scale_coefficients(const SliceSeries& f, std::span<const double> rho);

/// Restriction of f to the slice C_I written as F(z) + G(z) J with F, G holomorphic
/// C_I-valued (Splitting Lemma). Each a_k = alpha_k + beta_k J with alpha_k, beta_k in C_I.
///
/// Optionally carries complex coefficient multipliers m_k (used for rotational finite
/// differences): F = sum z^k m_k alpha_k, G = sum z^k m_k beta_k.
class SplitPair {
 public:
  struct Value {
    std::complex<double> F;
    std::complex<double> G;
    double norm() const { return std::sqrt(std::norm(F) + std::norm(G)); }
  };
  using Multiplier = std::function<std::complex<double>(std::size_t)>;

  /// Throws DomainError unless |I . J| < 1e-12. Coefficients are precomputed for
  /// radii up to `max_radius`.
  SplitPair(const SliceSeries& f, const ImaginaryUnit& I, const ImaginaryUnit& J,
            double max_radius = 8.0);
  /// Same as above with multipliers of modulus at most `multiplier_bound`. Past the
  /// degree cap evaluation throws TruncationError.
  SplitPair(const SliceSeries& f, const ImaginaryUnit& I, const ImaginaryUnit& J,
            Multiplier multiplier, double multiplier_bound, double max_radius = 8.0);

  /// m_k = sum_s w_s e^{i k theta_s}, i.e. z -> sum_s w_s f(z e^{I theta_s}) on the slice.
  struct RotationSum {
    std::vector<std::complex<double>> weights;
    std::vector<double> angles;
  };
  /// Multipliers from a rotation sum; `multiplier` must agree with it (it may be a more
  /// accurate formula). Past the degree cap the rotated closed forms are summed.
  SplitPair(const SliceSeries& f, const ImaginaryUnit& I, const ImaginaryUnit& J,
            Multiplier multiplier, double multiplier_bound, RotationSum rotations,
            double max_radius = 8.0);

  const ImaginaryUnit& I() const { return I_; }
  const ImaginaryUnit& J() const { return J_; }
  std::size_t precomputed_degree() const { return F_.size(); }
  std::complex<double> F_coefficient(std::size_t k) const;
  std::complex<double> G_coefficient(std::size_t k) const;

  /// Summation degree for points of modulus r, or nullopt past the degree cap.
  std::optional<std::size_t> degree_for(double r) const;
  Value at(std::complex<double> z) const;
  /// Evaluates at r * directions[l] for unit-modulus directions, sharing the degree choice.
  void ring(double r, std::span<const std::complex<double>> directions, std::span<Value> out) const;
  /// F + G J as a quaternion.
  Quaternion assemble(const Value& v) const;

 private:
  void build(std::size_t n) const;
  Value closed_form_at(std::complex<double> z) const;
  Value horner(std::complex<double> z, std::size_t K) const;

  SliceSeries f_;
  ImaginaryUnit I_;
  ImaginaryUnit J_;
  ImaginaryUnit K_;
  Multiplier multiplier_;
  double multiplier_bound_ = 1.0;
  RotationSum rotations_;
  mutable std::vector<std::complex<double>> F_;
  mutable std::vector<std::complex<double>> G_;
};

SplitPair split(const SliceSeries& f, const ImaginaryUnit& I, const ImaginaryUnit& J);

/// f(x + J y) = 1/2 (1 - J I) f_I(x + I y) + 1/2 (1 + J I) f_I(x - I y), J = I_q.
Quaternion representation_formula(
    const std::function<Quaternion(std::complex<double>)>& f_on_slice, const ImaginaryUnit& I,
    const Quaternion& q);

/// SplitMix64 (Steele, Lea, Flood 2014): state += 0x9E3779B97F4A7C15, then
/// z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9; z = (z ^ (z >> 27)) * 0x94D049BB133111EB;
/// return z ^ (z >> 31).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// (next() >> 11) * 2^-53, uniform in [0, 1).
  double uniform();

 private:
  std::uint64_t state_;
};

/// Polynomial of the given degree; each coefficient component is (2u - 1)/2 with u
/// drawn from SplitMix64(seed) in the order a_0.w, a_0.x, a_0.y, a_0.z, a_1.w, ...
/// so |a_k| <= 1.
SliceSeries random_series(std::size_t degree, std::uint64_t seed);

/// Coefficient file: one coefficient per line as "w x y z"; line i holds a_i.
SliceSeries read_coefficients(std::istream& in);
SliceSeries read_coefficients_file(const std::string& path);
void write_coefficients(std::ostream& out, const SliceSeries& f, std::size_t count);

}  // namespace slicefock
