#include "slicefock/reports.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"

#include "slicefock/errors.hpp"
#include "slicefock/format.hpp"

namespace slicefock {

namespace {

using Json = nlohmann::ordered_json;

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json quaternion(const Quaternion& q) {
  return Json::array({number(q.w), number(q.x), number(q.y), number(q.z)});
}

Json grid(const GridSizes& g) {
  return Json{{"radial", g.radial}, {"angular", g.angular}, {"sphere", g.sphere}};
}

Json numbers(const std::vector<double>& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(number(x));
  return out;
}

std::string csv_cell(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&c)) {
    if (std::isnan(*d)) return "nan";
    if (std::isinf(*d)) return *d > 0 ? "inf" : "-inf";
    return format_double(*d);
  }
  const std::string& s = std::get<std::string>(c);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + '"';
}

Json json_cell(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
  if (const auto* d = std::get_if<double>(&c)) return number(*d);
  return std::get<std::string>(c);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

void Table::add(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw DomainError("table row width differs from header");
  rows.push_back(std::move(row));
}

std::string Table::csv() const {
  std::ostringstream out;
  for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << columns[c];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_cell(row[c]);
    out << '\n';
  }
  return out.str();
}

std::string Table::json() const {
  Json out = Json::array();
  for (const auto& row : rows) {
    Json obj = Json::object();
    for (std::size_t c = 0; c < row.size(); ++c) obj[columns[c]] = json_cell(row[c]);
    out.push_back(std::move(obj));
  }
  return dump(out);
}

std::string unit_spec(const ImaginaryUnit& I) {
  if (I == ImaginaryUnit::i()) return "i";
  if (I == ImaginaryUnit::j()) return "j";
  if (I == ImaginaryUnit::k()) return "k";
  return format_double(I.x()) + "," + format_double(I.y()) + "," + format_double(I.z());
}

std::string kind_name(FockKind kind) { return kind == FockKind::kFirst ? "first" : "second"; }

std::string to_json(const NormResult& r, const NormSpec& spec) {
  Json j{{"kind", kind_name(spec.kind)}, {"p", spec.p}, {"alpha", spec.alpha}};
  if (spec.kind == FockKind::kSecond) {
    j["slice"] = spec.slice ? unit_spec(*spec.slice) : "sup:" + std::to_string(spec.sphere_samples);
    if (r.slice) j["attained_on"] = unit_spec(*r.slice);
  }
  j["value"] = number(r.value);
  j["tail_bound"] = number(r.tail_bound);
  j["grid"] = grid(r.grid);
  return dump(j);
}

std::string to_json(const EstimateReport& r) {
  Json j{{"theorem", r.theorem}, {"n", r.n}};
  if (r.theorem == "jackson") {
    j["m"] = r.m;
    j["r"] = r.r;
  }
  j["p"] = r.p;
  j["alpha"] = r.alpha;
  j["slice"] = unit_spec(r.slice);
  j["lhs"] = number(r.lhs);
  j["rhs"] = number(r.rhs);
  if (r.theorem == "jackson") {
    j["ratio"] = number(r.ratio);
  } else {
    j["slack"] = number(r.slack);
    j["constant"] = number(r.constant);
    j["best_approx"] = number(r.best_approx);
    j["method"] = r.method;
  }
  j["degenerate"] = r.degenerate;
  j["passed"] = r.passed;
  j["grid"] = grid(r.grid);
  if (r.h_grid) j["h_grid"] = r.h_grid;
  return dump(j);
}

std::string to_json(const BestApproxResult& r, double p, double alpha) {
  Json coeffs = Json::array();
  for (std::size_t k = 0; k <= r.n; ++k) coeffs.push_back(quaternion(r.minimizer.coefficient(k)));
  Json j{{"n", r.n},           {"p", p},
         {"alpha", alpha},     {"value", number(r.value)},
         {"method", method_name(r.method)}, {"iterations", r.iterations},
         {"minimizer", coeffs}};
  return dump(j);
}

std::string to_json(const GrowthReport& r) {
  Json j{{"order", number(r.order)},
         {"type", r.type ? number(*r.type) : Json(nullptr)},
         {"residual", number(r.residual)},
         {"radii", numbers(r.radii)},
         {"log_max_modulus", numbers(r.log_max_modulus)}};
  return dump(j);
}

std::string to_json(const MultiplierOperator& op) {
  Json j{{"family", op.family}, {"n", op.n}};
  if (op.family == "jackson") {
    j["m"] = op.m;
    j["r"] = op.r;
  }
  j["degree_bound"] = op.degree_bound();
  j["rho"] = numbers(op.rho);
  return dump(j);
}

std::string to_json(const SectionFit& fit, const std::vector<Quaternion>& centers, double alpha) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < centers.size(); ++i)
    rows.push_back(Json{{"center", quaternion(centers[i])}, {"weight", quaternion(fit.weights.at(i))}});
  Json j{{"alpha", alpha},
         {"centers", centers.size()},
         {"residual", number(fit.residual)},
         {"condition", number(fit.condition)},
         {"degree", fit.degree},
         {"sections", rows}};
  return dump(j);
}

Table multiplier_table(const MultiplierOperator& op) {
  Table t{{"k", "rho"}, {}};
  for (std::size_t k = 0; k < op.rho.size(); ++k) t.add({static_cast<std::int64_t>(k), op.rho[k]});
  return t;
}

Table growth_table(const GrowthReport& r) {
  Table t{{"r", "log_max_modulus"}, {}};
  for (std::size_t i = 0; i < r.radii.size(); ++i) t.add({r.radii[i], r.log_max_modulus[i]});
  return t;
}

}  // namespace slicefock
