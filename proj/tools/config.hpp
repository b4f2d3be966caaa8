#pragma once

// Experiment configuration for the slicefock tool: spec parsers and a canonical
// key=value text form.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "slicefock/fock.hpp"
#include "slicefock/operators.hpp"
#include "slicefock/slice_series.hpp"

namespace slicefock::cli {

/// Malformed configuration or spec string (exit code 1).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "exp" | "gauss:<beta>" | "mono:<k>" | "poly:<path>" | "random:<deg>:<seed>".
struct FunctionSpec {
  enum class Kind { kExp, kGauss, kMonomial, kPoly, kRandom };
  Kind kind = Kind::kExp;
  double beta = 0.0;
  std::size_t power = 0;
  std::string path;
  std::size_t degree = 0;
  std::uint64_t seed = 0;

  static FunctionSpec parse(const std::string& text);
  std::string canonical() const;
  /// Reads poly files; a missing or malformed file is a ConfigError.
  SliceSeries build() const;
};

/// "i" | "j" | "k" | "x,y,z" | "sup:<M>".
struct SliceSpec {
  std::optional<ImaginaryUnit> unit = ImaginaryUnit::i();
  /// Raw direction for "x,y,z", kept unnormalized for the canonical form.
  double x = 1.0, y = 0.0, z = 0.0;
  std::string axis = "i";
  std::size_t sup = 0;

  static SliceSpec parse(const std::string& text);
  std::string canonical() const;
  /// The unit, or ConfigError when the spec is "sup:<M>".
  ImaginaryUnit fixed(const std::string& command) const;
};

/// "taylor:<n>" | "fejer:<n>" | "vdp:<n>" | "jackson:<n>:<m>".
struct OperatorSpec {
  std::string family;
  int n = 0;
  int m = 0;

  static OperatorSpec parse(const std::string& text);
  std::string canonical() const;
  /// jackson_op needs p for its power r.
  MultiplierOperator build(double p) const;
};

/// Comma-separated quaternions, each "w x y z" or "w:x:y:z".
std::vector<Quaternion> parse_centers(const std::string& text);
std::string format_centers(const std::vector<Quaternion>& centers);

/// Comma-separated nonnegative integers.
std::vector<int> parse_int_list(const std::string& text);
/// Comma-separated reals.
std::vector<double> parse_double_list(const std::string& text);

double parse_double(const std::string& text, const std::string& what);
long long parse_integer(const std::string& text, const std::string& what);

struct ExperimentConfig {
  std::string command;
  std::string fn = "exp";
  std::string kind = "second";
  double p = 2.0;
  double alpha = 1.0;
  std::string slice = "i";
  /// Operator family: taylor, fejer, vdp, jackson, or empty.
  std::string family;
  int n = 4;
  int m = 0;
  std::string ns = "2,4,8,16";
  int k = 1;
  std::string delta = "0.1";
  std::size_t h_grid = 16;
  std::string centers;
  double r_min = 1.0;
  double r_max = 8.0;
  std::size_t radii = 16;
  GridSizes grid;
  /// csv or json; empty picks the command's default.
  std::string format;
  std::string out;

  static const std::vector<std::string>& commands();
  static const std::vector<std::string>& keys();

  /// key=value lines; '#' starts a comment line. Unknown or repeated keys and
  /// malformed values throw ConfigError. Spec-valued keys are canonicalized.
  static ExperimentConfig parse(const std::string& text);
  /// Every key in keys() order, one per line.
  std::string canonical() const;
  /// Checks every spec-valued field; throws ConfigError.
  void validate() const;

  FockKind fock_kind() const;
  NormSpec norm_spec() const;
  /// format, or the command default when empty.
  std::string output_format() const;
};

}  // namespace slicefock::cli
