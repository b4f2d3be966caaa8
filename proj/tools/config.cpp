#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

#include "slicefock/errors.hpp"
#include "slicefock/format.hpp"

namespace slicefock::cli {

namespace {

std::vector<std::string> split_on(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.compare(0, prefix.size(), prefix) == 0;
}

std::size_t parse_size(const std::string& text, const std::string& what) {
  const long long v = parse_integer(text, what);
  if (v < 0) throw ConfigError(what + " must be nonnegative: " + text);
  return static_cast<std::size_t>(v);
}

template <typename T, typename F>
std::string join(const std::vector<T>& v, F fmt) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + fmt(v[i]);
  return out;
}

}  // namespace

double parse_double(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  double v = 0.0;
  const char* end = t.data() + t.size();
  const auto res = std::from_chars(t.data(), end, v);
  if (t.empty() || res.ec != std::errc{} || res.ptr != end || !std::isfinite(v))
    throw ConfigError("invalid number for " + what + ": '" + text + "'");
  return v;
}

long long parse_integer(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  long long v = 0;
  const char* end = t.data() + t.size();
  const auto res = std::from_chars(t.data(), end, v);
  if (t.empty() || res.ec != std::errc{} || res.ptr != end)
    throw ConfigError("invalid integer for " + what + ": '" + text + "'");
  return v;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (trim(text).empty()) return out;
  for (const auto& part : split_on(text, ',')) {
    const long long v = parse_integer(part, "list entry");
    if (v < 0 || v > 1000000) throw ConfigError("list entry out of range: " + part);
    out.push_back(static_cast<int>(v));
  }
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  if (trim(text).empty()) return out;
  for (const auto& part : split_on(text, ',')) out.push_back(parse_double(part, "list entry"));
  return out;
}

FunctionSpec FunctionSpec::parse(const std::string& text) {
  const std::string t = trim(text);
  FunctionSpec s;
  const auto parts = split_on(t, ':');
  const std::string& head = parts[0];
  if (head == "exp" && parts.size() == 1) {
    s.kind = Kind::kExp;
  } else if (head == "gauss" && parts.size() == 2) {
    s.kind = Kind::kGauss;
    s.beta = parse_double(parts[1], "gauss beta");
  } else if (head == "mono" && parts.size() == 2) {
    s.kind = Kind::kMonomial;
    s.power = parse_size(parts[1], "mono power");
  } else if (head == "poly" && parts.size() >= 2) {
    s.kind = Kind::kPoly;
    s.path = t.substr(5);
    if (s.path.empty()) throw ConfigError("poly: needs a file path");
  } else if (head == "random" && parts.size() == 3) {
    s.kind = Kind::kRandom;
    s.degree = parse_size(parts[1], "random degree");
    const std::string seed = trim(parts[2]);
    std::uint64_t v = 0;
    const auto res = std::from_chars(seed.data(), seed.data() + seed.size(), v);
    if (seed.empty() || res.ec != std::errc{} || res.ptr != seed.data() + seed.size())
      throw ConfigError("invalid random seed: '" + parts[2] + "'");
    s.seed = v;
  } else {
    throw ConfigError("unknown function spec: '" + text +
                      "' (expected exp, gauss:<beta>, mono:<k>, poly:<path> or random:<deg>:<seed>)");
  }
  return s;
}

std::string FunctionSpec::canonical() const {
  switch (kind) {
    case Kind::kExp: return "exp";
    case Kind::kGauss: return "gauss:" + format_double(beta);
    case Kind::kMonomial: return "mono:" + std::to_string(power);
    case Kind::kPoly: return "poly:" + path;
    case Kind::kRandom: return "random:" + std::to_string(degree) + ":" + std::to_string(seed);
  }
  return {};
}

SliceSeries FunctionSpec::build() const {
  switch (kind) {
    case Kind::kExp: return SliceSeries(Generator::exp());
    case Kind::kGauss: return SliceSeries(Generator::gauss(beta));
    case Kind::kMonomial: return SliceSeries(Generator::monomial(power));
    case Kind::kRandom: return random_series(degree, seed);
    case Kind::kPoly:
      try {
        return read_coefficients_file(path);
      } catch (const DomainError& e) {
        throw ConfigError(e.what());
      }
  }
  return {};
}

SliceSpec SliceSpec::parse(const std::string& text) {
  const std::string t = trim(text);
  SliceSpec s;
  if (t == "i" || t == "j" || t == "k") {
    s.axis = t;
    s.unit = t == "i" ? ImaginaryUnit::i() : t == "j" ? ImaginaryUnit::j() : ImaginaryUnit::k();
    s.x = t == "i";
    s.y = t == "j";
    s.z = t == "k";
    return s;
  }
  if (starts_with(t, "sup:")) {
    s.axis.clear();
    s.unit.reset();
    s.sup = parse_size(t.substr(4), "sup sample count");
    if (s.sup == 0) throw ConfigError("sup:<M> needs M >= 1");
    return s;
  }
  const auto parts = split_on(t, ',');
  if (parts.size() != 3)
    throw ConfigError("unknown slice spec: '" + text + "' (expected i, j, k, x,y,z or sup:<M>)");
  s.axis.clear();
  s.x = parse_double(parts[0], "slice x");
  s.y = parse_double(parts[1], "slice y");
  s.z = parse_double(parts[2], "slice z");
  try {
    s.unit = ImaginaryUnit::from_vector(s.x, s.y, s.z);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("slice spec: ") + e.what());
  }
  return s;
}

std::string SliceSpec::canonical() const {
  if (!unit) return "sup:" + std::to_string(sup);
  if (!axis.empty()) return axis;
  return format_double(x) + "," + format_double(y) + "," + format_double(z);
}

ImaginaryUnit SliceSpec::fixed(const std::string& command) const {
  if (!unit) throw ConfigError(command + " needs a fixed slice, not sup:<M>");
  return *unit;
}

OperatorSpec OperatorSpec::parse(const std::string& text) {
  const auto parts = split_on(trim(text), ':');
  OperatorSpec s;
  s.family = parts[0];
  const bool two = s.family == "jackson";
  if (!(s.family == "taylor" || s.family == "fejer" || s.family == "vdp" || two) ||
      parts.size() != (two ? 3u : 2u))
    throw ConfigError("unknown operator spec: '" + text +
                      "' (expected taylor:<n>, fejer:<n>, vdp:<n> or jackson:<n>:<m>)");
  s.n = static_cast<int>(parse_size(parts[1], "operator n"));
  if (two) s.m = static_cast<int>(parse_size(parts[2], "operator m"));
  if (s.family != "taylor" && s.n < 1) throw ConfigError("operator n must be >= 1");
  return s;
}

std::string OperatorSpec::canonical() const {
  std::string out = family + ":" + std::to_string(n);
  if (family == "jackson") out += ":" + std::to_string(m);
  return out;
}

MultiplierOperator OperatorSpec::build(double p) const {
  try {
    if (family == "taylor") return taylor_op(n);
    if (family == "fejer") return fejer_op(n);
    if (family == "vdp") return vdp_op(n);
    if (family == "jackson") return jackson_op(n, m, p);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  throw ConfigError("unknown operator family: '" + family + "'");
}

std::vector<Quaternion> parse_centers(const std::string& text) {
  std::vector<Quaternion> out;
  if (trim(text).empty()) return out;
  for (const auto& part : split_on(text, ',')) {
    std::string tuple = trim(part);
    std::replace(tuple.begin(), tuple.end(), ':', ' ');
    std::istringstream in(tuple);
    std::vector<std::string> fields;
    for (std::string f; in >> f;) fields.push_back(f);
    if (fields.size() != 4) throw ConfigError("center needs four components: '" + part + "'");
    out.push_back({parse_double(fields[0], "center"), parse_double(fields[1], "center"),
                   parse_double(fields[2], "center"), parse_double(fields[3], "center")});
  }
  return out;
}

std::string format_centers(const std::vector<Quaternion>& centers) {
  return join(centers, [](const Quaternion& q) {
    return format_double(q.w) + " " + format_double(q.x) + " " + format_double(q.y) + " " +
           format_double(q.z);
  });
}

const std::vector<std::string>& ExperimentConfig::commands() {
  static const std::vector<std::string> c = {"norm",       "converge", "multipliers", "smoothness",
                                             "bestapprox", "growth",   "kernel-fit"};
  return c;
}

const std::vector<std::string>& ExperimentConfig::keys() {
  static const std::vector<std::string> k = {
      "command", "fn",     "kind",    "p",     "alpha", "slice",       "family",       "n",
      "m",       "ns",     "k",       "delta", "h_grid", "centers",    "r_min",        "r_max",
      "radii",   "quad_radial", "quad_angular", "quad_sphere", "format", "out"};
  return k;
}

ExperimentConfig ExperimentConfig::parse(const std::string& text) {
  ExperimentConfig c;
  std::map<std::string, bool> seen;
  std::istringstream in(text);
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(t.substr(0, eq));
    const std::string v = trim(t.substr(eq + 1));
    const auto& ks = keys();
    if (std::find(ks.begin(), ks.end(), key) == ks.end())
      throw ConfigError("unknown config key: '" + key + "'");
    if (seen[key]) throw ConfigError("repeated config key: '" + key + "'");
    seen[key] = true;
    if (key == "command") c.command = v;
    else if (key == "fn") c.fn = v;
    else if (key == "kind") c.kind = v;
    else if (key == "p") c.p = parse_double(v, key);
    else if (key == "alpha") c.alpha = parse_double(v, key);
    else if (key == "slice") c.slice = v;
    else if (key == "family") c.family = v;
    else if (key == "n") c.n = static_cast<int>(parse_integer(v, key));
    else if (key == "m") c.m = static_cast<int>(parse_integer(v, key));
    else if (key == "ns") c.ns = v;
    else if (key == "k") c.k = static_cast<int>(parse_integer(v, key));
    else if (key == "delta") c.delta = v;
    else if (key == "h_grid") c.h_grid = parse_size(v, key);
    else if (key == "centers") c.centers = v;
    else if (key == "r_min") c.r_min = parse_double(v, key);
    else if (key == "r_max") c.r_max = parse_double(v, key);
    else if (key == "radii") c.radii = parse_size(v, key);
    else if (key == "quad_radial") c.grid.radial = parse_size(v, key);
    else if (key == "quad_angular") c.grid.angular = parse_size(v, key);
    else if (key == "quad_sphere") c.grid.sphere = parse_size(v, key);
    else if (key == "format") c.format = v;
    else if (key == "out") c.out = v;
  }
  c.validate();
  c.fn = FunctionSpec::parse(c.fn).canonical();
  c.slice = SliceSpec::parse(c.slice).canonical();
  c.ns = join(parse_int_list(c.ns), [](int v) { return std::to_string(v); });
  c.delta = join(parse_double_list(c.delta), [](double v) { return format_double(v); });
  c.centers = format_centers(parse_centers(c.centers));
  return c;
}

std::string ExperimentConfig::canonical() const {
  std::ostringstream s;
  s << "command=" << command << "\n"
      << "fn=" << fn << "\n"
      << "kind=" << kind << "\n"
      << "p=" << format_double(p) << "\n"
      << "alpha=" << format_double(alpha) << "\n"
      << "slice=" << slice << "\n"
      << "family=" << family << "\n"
      << "n=" << n << "\n"
      << "m=" << m << "\n"
      << "ns=" << ns << "\n"
      << "k=" << k << "\n"
      << "delta=" << delta << "\n"
      << "h_grid=" << h_grid << "\n"
      << "centers=" << centers << "\n"
      << "r_min=" << format_double(r_min) << "\n"
      << "r_max=" << format_double(r_max) << "\n"
      << "radii=" << radii << "\n"
      << "quad_radial=" << grid.radial << "\n"
      << "quad_angular=" << grid.angular << "\n"
      << "quad_sphere=" << grid.sphere << "\n"
      << "format=" << format << "\n"
      << "out=" << out << "\n";
  return s.str();
}

void ExperimentConfig::validate() const {
  const auto& cs = commands();
  if (std::find(cs.begin(), cs.end(), command) == cs.end())
    throw ConfigError("unknown command: '" + command + "'");
  FunctionSpec::parse(fn);
  SliceSpec::parse(slice);
  if (kind != "first" && kind != "second") throw ConfigError("kind must be first or second");
  if (!(p > 0.0)) throw ConfigError("p must be positive");
  if (!(alpha > 0.0)) throw ConfigError("alpha must be positive");
  if (!(family.empty() || family == "taylor" || family == "fejer" || family == "vdp" ||
        family == "jackson"))
    throw ConfigError("unknown operator family: '" + family + "'");
  if (n < 0 || m < 0 || k < 0) throw ConfigError("n, m and k must be nonnegative");
  parse_int_list(ns);
  for (double d : parse_double_list(delta))
    if (d < 0.0) throw ConfigError("delta must be nonnegative");
  parse_centers(centers);
  if (!(r_min > 0.0 && r_max > r_min)) throw ConfigError("need 0 < r_min < r_max");
  if (grid.radial == 0 || grid.angular == 0 || grid.sphere == 0)
    throw ConfigError("quadrature sizes must be positive");
  if (!(format.empty() || format == "csv" || format == "json"))
    throw ConfigError("format must be csv or json");
}

FockKind ExperimentConfig::fock_kind() const {
  return kind == "first" ? FockKind::kFirst : FockKind::kSecond;
}

NormSpec ExperimentConfig::norm_spec() const {
  const SliceSpec s = SliceSpec::parse(slice);
  NormSpec spec;
  spec.kind = fock_kind();
  spec.p = p;
  spec.alpha = alpha;
  spec.slice = s.unit;
  if (!s.unit) spec.sphere_samples = s.sup;
  spec.grid = grid;
  return spec;
}

std::string ExperimentConfig::output_format() const {
  if (!format.empty()) return format;
  return command == "norm" || command == "smoothness" || command == "growth" ? "json" : "csv";
}

}  // namespace slicefock::cli
