#pragma once

#include <iosfwd>

#include "opcmlink/opcm.hpp"

namespace opcmlink {

/// The distinguished bottom of a flat algebra.
inline const Elem kUnknown = "⊥";  // ⊥

/// A finite, prefix-closed code set containing the empty code. Closure is
/// checked at the declared levels (the code lengths present): every prefix of
/// a member whose length is a declared level must itself be a member.
class PrefixCodeSet {
 public:
  /// Levels default to the set of lengths occurring in `codes`. The empty
  /// code is added if absent.
  static PrefixCodeSet make(ElemSet codes, std::vector<std::size_t> levels = {});

  /// One code per line; the empty code is implicit. Lines are taken verbatim
  /// (trailing CR stripped).
  static PrefixCodeSet load(std::istream& in);

  const ElemSet& codes() const { return codes_; }
  const std::vector<std::size_t>& levels() const { return levels_; }

  /// Codes of maximal declared level.
  ElemSet leaves() const;

  /// ⟦p⟧: the leaves that the code p realizes (leaves having p as a prefix).
  ElemSet realization(const Elem& p) const;

 private:
  ElemSet codes_;
  std::vector<std::size_t> levels_;
};

/// X ∪ {⊥} with x ⪯ y iff x = ⊥ or x = y; combine is the join where one
/// exists. Throws structural_error if ⊥ collides with a member of X.
FiniteOpcm flat(const ElemSet& x);

/// Prefix order with zero = empty code; x ⊕ y = the longer code when one is
/// a prefix of the other, undefined otherwise.
FiniteOpcm prefix_opcm(const PrefixCodeSet& codes);

/// (ℙ⁺X, ⊇, ∩, X): non-empty subsets under reverse inclusion; intersection,
/// undefined when empty. Carrier elements are named "{...}".
FiniteOpcm possibility_of_set(const ElemSet& x, std::size_t cap = 0);

/// x ⪯ x′ and x′ ⊥ y imply x ⊥ y — the hypothesis of the possibility
/// theorem over an OPCM.
bool check_downward_closed(const FiniteOpcm& m);
LawReport check_downward_closed_report(const FiniteOpcm& m);

/// P ⊕ Q on subsets of an OPCM carrier: all defined pairwise combinations;
/// empty result = undefined.
std::optional<ElemSet> possibility_combine(const FiniteOpcm& m, const ElemSet& p,
                                           const ElemSet& q);

/// The possibility OPCM over a ⊕-downward-closed OPCM: subsets under the
/// sharp lifting, combined pairwise, zero {0}. For carriers of more than five
/// elements the subset carrier is sampled (singletons plus a deterministic
/// draw of pairs and triples) and closed under the combine so the table stays
/// total over its own carrier; the cap bounds the closure.
FiniteOpcm possibility_of_opcm(const FiniteOpcm& m, std::size_t cap = 0);

}  // namespace opcmlink
