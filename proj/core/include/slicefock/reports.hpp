#pragma once

// Machine-readable output: CSV tables and JSON reports. Numbers use the shortest
// round-trip decimal form with '.' as separator, independent of the locale.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "slicefock/fock.hpp"
#include "slicefock/kernel.hpp"
#include "slicefock/operators.hpp"
#include "slicefock/smoothness.hpp"

namespace slicefock {

using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  /// Appends a row; throws DomainError when its width differs from the header.
  void add(std::vector<Cell> row);
  /// Header line, then one line per row. Non-finite doubles print as nan/inf/-inf.
  std::string csv() const;
  /// Array of objects keyed by column; non-finite doubles become null.
  std::string json() const;
};

/// "i", "j", "k" for the coordinate units, "x,y,z" otherwise.
std::string unit_spec(const ImaginaryUnit& I);
std::string kind_name(FockKind kind);

std::string to_json(const NormResult& r, const NormSpec& spec);
std::string to_json(const EstimateReport& r);
std::string to_json(const BestApproxResult& r, double p, double alpha);
std::string to_json(const GrowthReport& r);
std::string to_json(const MultiplierOperator& op);
std::string to_json(const SectionFit& fit, const std::vector<Quaternion>& centers, double alpha);

Table multiplier_table(const MultiplierOperator& op);
Table growth_table(const GrowthReport& r);

}  // namespace slicefock
