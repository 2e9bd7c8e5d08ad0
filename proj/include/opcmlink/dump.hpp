#pragma once

#include <iosfwd>

#include "opcmlink/opcm.hpp"

namespace opcmlink {

/// Canonical tab-separated dump: header line, sorted element list, zero,
/// sorted order pairs, sorted combine triples. Loading validates structure
/// only, so an edited dump can be fed back to the law checker.
void write_opcm_dump(std::ostream& out, const FiniteOpcm& m);
std::string opcm_dump(const FiniteOpcm& m);
FiniteOpcm read_opcm_dump(std::istream& in);

}  // namespace opcmlink
