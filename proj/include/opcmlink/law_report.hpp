#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "opcmlink/elem.hpp"

namespace opcmlink {

/// A concrete counterexample: the offending tuple plus what failed.
struct Witness {
  std::vector<Elem> elems;
  std::string note;
};

enum class CheckStatus { pass, fail, hypothesis_unmet };

/// Outcome of one law over one structure.
struct LawCheck {
  std::string law;
  CheckStatus status = CheckStatus::pass;
  std::vector<Witness> witnesses;   // non-empty iff status == fail
  std::size_t cases = 0;            // tuples examined
  /// Pairs where ≅ was used with distinct representatives (laws are stated
  /// up to equivalence, not equality).
  std::vector<std::pair<Elem, Elem>> equivalences;
  std::string note;                 // e.g. why a hypothesis is unmet

  void fail_with(std::vector<Elem> elems, std::string what);
  void used_equivalence(const Elem& a, const Elem& b);
};

struct LawReport {
  std::vector<LawCheck> checks;

  bool ok() const;  // no check failed (unmet hypotheses do not fail)
  const LawCheck* find(const std::string& law) const;
  LawCheck& add(std::string law);
  void merge(LawReport other);

  std::string to_text(std::size_t max_witnesses = 5) const;
  std::string to_json() const;
};

}  // namespace opcmlink
