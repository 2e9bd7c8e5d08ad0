#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace opcmlink {

/// Tabular data with multiplicities and row order preserved — the CLI-facing
/// view of a CSV file. The algebraic core works on set-reduced Relations;
/// frequency queries need the multiset.
struct Dataset {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::string source;  // provenance

  std::size_t column(const std::string& name) const;  // structural_error if absent
};

/// RFC 4180: quoted fields, doubled quotes, commas and newlines inside
/// quotes; accepts LF and CRLF; strips a UTF-8 BOM.
Dataset read_csv(std::istream& in, const std::string& source = "");
Dataset read_csv_file(const std::string& path);

/// Canonical form: minimal quoting, LF line ends, trailing newline.
void write_csv(std::ostream& out, const Dataset& d);
std::string to_csv(const Dataset& d);

}  // namespace opcmlink
