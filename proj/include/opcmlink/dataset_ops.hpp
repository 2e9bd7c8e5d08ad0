#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "opcmlink/csvio.hpp"
#include "opcmlink/relational.hpp"

namespace opcmlink {

/// An exact non-negative rational, canonically reduced.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Fraction make(std::int64_t num, std::int64_t den);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  /// "3/4", or just "3" when the denominator reduces to 1.
  std::string str() const;
  bool operator==(const Fraction& other) const {
    return num == other.num && den == other.den;
  }
};

/// Schema inferred from the observed values (one attribute per column,
/// domain = distinct values), with hierarchies attached where given.
SchemaPtr infer_schema(const std::vector<const Dataset*>& datasets,
                       std::map<std::string, Hierarchy> hierarchies = {});

/// Set reduction: duplicates collapsed; reports how many rows were dropped.
Relation dataset_to_relation(const Dataset& d, SchemaPtr schema,
                             std::size_t* duplicates_dropped = nullptr);

Dataset relation_to_dataset(const Relation& r);

/// Column-wise generalization to a hierarchy level; multiplicities and row
/// order preserved. Throws precondition_error naming any uncovered value.
Dataset generalize_dataset(const Dataset& d, const std::string& attr,
                           std::size_t level, const Hierarchy& h);

/// Replace a column's values with "*" (suppression).
Dataset suppress_column(const Dataset& d, const std::string& attr);

/// Pr[code ⪯ X] over the column's frequency distribution: the share of rows
/// whose value is at or below `code` in the information order — a sum of
/// observed frequencies, no indifference assumption over leaves.
Fraction freq_at_least(const Dataset& d, const std::string& attr,
                       const Elem& code, const Hierarchy& h);

struct AuditReport {
  std::size_t rows = 0;
  std::size_t classes = 0;
  std::map<std::size_t, std::size_t> histogram;  // class size -> class count
  std::size_t unique_rows = 0;                   // rows in singleton classes
  Fraction unique_fraction() const;
};

/// Equivalence-class sizes of the projection onto the quasi-identifiers.
AuditReport audit(const Dataset& d, const std::vector<std::string>& quasi);

}  // namespace opcmlink
