#include "slicefock/kernel.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "left_matrix.hpp"
#include "slicefock/errors.hpp"
#include "slicefock/format.hpp"

namespace slicefock {
namespace {

using detail::left_matrix;

/// Smallest K at which every section and f have negligible Parseval tails past K.
std::size_t fit_degree(const SliceSeries& f, const std::vector<Generator>& sections, double alpha) {
  const double total = f.parseval_tail(alpha, -1);
  for (std::size_t K = 16; K <= kDegreeCap; K += 8) {
    bool ok = true;
    for (const Generator& g : sections) ok = ok && g.log_parseval_tail(alpha, K) < std::log(1e-34);
    if (ok && f.parseval_tail(alpha, static_cast<long>(K)) <= 1e-34 * std::max(total, 1e-300)) return K;
  }
  throw TruncationError("kernel-section fit needs more than " + std::to_string(kDegreeCap) +
                        " coefficients");
}

}  // namespace

SliceSeries kernel_section(const Quaternion& q0, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
  return SliceSeries(Generator::kernel_section(q0, alpha));
}

Quaternion kernel_eval(const Quaternion& q0, double alpha, const Quaternion& r) {
  return evaluate(kernel_section(q0, alpha), r);
}

SectionFit fit_with_sections(const SliceSeries& f, const std::vector<Quaternion>& centers, double alpha,
                             double p, const ImaginaryUnit&) {
  if (p != 2.0) throw DomainError("kernel-section fits are defined for p = 2 only");
  if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
  if (centers.empty()) throw DomainError("at least one center is required");
  for (std::size_t i = 0; i < centers.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (centers[i] == centers[j]) throw DomainError("centers must be distinct");
    }
  }
  std::vector<Generator> sections;
  for (const Quaternion& c : centers) sections.push_back(Generator::kernel_section(c, alpha));
  const std::size_t K = fit_degree(f, sections, alpha);
  const std::size_t N = centers.size();

  // Row block k carries sqrt(k!/alpha^k): |A b - y|^2 is the squared norm of the
  // coefficient difference through degree K.
  Eigen::MatrixXd A(4 * (K + 1), 4 * N);
  Eigen::VectorXd y(4 * (K + 1));
  for (std::size_t k = 0; k <= K; ++k) {
    const double w = std::exp(0.5 * (std::lgamma(static_cast<double>(k) + 1.0) -
                                     static_cast<double>(k) * std::log(alpha)));
    for (std::size_t j = 0; j < N; ++j) A.block<4, 4>(4 * k, 4 * j) = left_matrix(sections[j].coefficient(k) * w);
    const Quaternion a = f.coefficient(k) * w;
    y.segment<4>(4 * k) << a.w, a.x, a.y, a.z;
  }
  const Eigen::BDCSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double cond = sv(sv.size() - 1) > 0.0 ? sv(0) / sv(sv.size() - 1) : std::numeric_limits<double>::infinity();
  if (cond > kSectionConditionLimit) {
    throw IllConditionedError("kernel-section matrix is numerically singular (condition " + format_double(cond) + ")",
                              cond, static_cast<int>(N));
  }
  const Eigen::VectorXd b = svd.solve(y);
  SectionFit fit;
  fit.degree = K;
  fit.condition = cond;
  for (std::size_t j = 0; j < N; ++j) fit.weights.push_back({b(4 * j), b(4 * j + 1), b(4 * j + 2), b(4 * j + 3)});
  const double ls = (A * b - y).squaredNorm();
  fit.residual = std::sqrt(ls + f.parseval_tail(alpha, static_cast<long>(K)));
  return fit;
}

std::vector<Quaternion> equispaced_real_centers(std::size_t N) {
  std::vector<Quaternion> c(N);
  for (std::size_t j = 0; j < N; ++j) {
    c[j] = Quaternion{-1.0 + (2.0 * static_cast<double>(j) + 1.0) / static_cast<double>(N)};
  }
  return c;
}

}  // namespace slicefock
