#pragma once

#include <memory>
#include <optional>
#include <tuple>

#include "opcmlink/config.hpp"
#include "opcmlink/law_report.hpp"
#include "opcmlink/preorder.hpp"

namespace opcmlink {

/// A finite ordered partial commutative monoid given by explicit tables:
/// a preordered carrier, an identity element, and a partial combine table
/// (absent entry = undefined; partiality is a definedness judgment, not a
/// sentinel value). Construction validates structure only — whether the
/// monoid laws hold is the business of check_opcm_laws, so deliberately
/// broken tables can be built and fed to the checkers.
class FiniteOpcm {
 public:
  using Triple = std::tuple<Elem, Elem, Elem>;  // x, y, x⊕y

  static FiniteOpcm make(Preorder order, const Elem& zero,
                         const std::vector<Triple>& combine);

  std::size_t size() const { return order_.size(); }
  const ElemSet& elements() const { return order_.elements(); }
  const Preorder& order() const { return order_; }
  bool contains(const Elem& x) const { return order_.contains(x); }
  ElemIdx index_of(const Elem& x) const { return order_.index_of(x); }
  const Elem& element(ElemIdx i) const { return order_.element(i); }

  const Elem& zero() const { return order_.element(zero_); }
  ElemIdx zero_index() const { return zero_; }

  bool leq(const Elem& x, const Elem& y) const { return order_.leq(x, y); }
  bool leq_idx(ElemIdx i, ElemIdx j) const { return order_.leq_idx(i, j); }
  bool equiv(const Elem& x, const Elem& y) const { return order_.equiv(x, y); }
  bool equiv_idx(ElemIdx i, ElemIdx j) const { return order_.equiv_idx(i, j); }

  bool defined(const Elem& x, const Elem& y) const;
  bool defined_idx(ElemIdx i, ElemIdx j) const {
    return table_[i * size() + j] >= 0;
  }
  std::optional<Elem> combine(const Elem& x, const Elem& y) const;
  std::optional<ElemIdx> combine_idx(ElemIdx i, ElemIdx j) const;

  /// Sorted (x, y, x⊕y) triples — the canonical table listing.
  std::vector<Triple> combine_triples() const;

  /// Copy with one table entry replaced (or erased when z is empty).
  /// Structural validation only; intended for mutation testing.
  FiniteOpcm with_combine(const Elem& x, const Elem& y,
                          const std::optional<Elem>& z) const;

  bool operator==(const FiniteOpcm& other) const;

 private:
  FiniteOpcm() = default;
  Preorder order_;
  ElemIdx zero_ = 0;
  std::vector<long> table_;  // row-major; -1 = undefined
};

using OpcmPtr = std::shared_ptr<const FiniteOpcm>;

inline OpcmPtr share(FiniteOpcm m) {
  return std::make_shared<const FiniteOpcm>(std::move(m));
}

struct OpcmLawOptions {
  /// Check only the stated direction of the associativity axiom. By default
  /// the converse definedness propagation (derivable via commutativity) is
  /// checked as well.
  bool strict_def3 = false;
  std::size_t cap = 0;  // 0 = use max_carrier()
};

/// Exhaustive check of OPCM1 (identity), OPCM2 (commutativity), OPCM3
/// (associativity with definedness propagation) and OPCM4 (monotonicity),
/// all up to information equivalence. Every violation is recorded.
LawReport check_opcm_laws(const FiniteOpcm& m, const OpcmLawOptions& opts = {});

/// x ⊑ y iff some z combines with x to give y up to equivalence.
bool algebraic_leq(const FiniteOpcm& m, const Elem& x, const Elem& y);

struct AlgebraicOpcmOptions {
  /// The monotonicity statement carries the hypothesis "x ⊥ x" as written;
  /// with pairwise_def3 the hypothesis is read as "x ⊥ y" instead.
  bool pairwise_reading = false;
};

/// For a PCM (discrete order), equips the carrier with the algebraic ordering
/// and verifies: the result is an OPCM, zero is least, and the pairwise
/// monotonicity property holds. Precondition: the input order is discrete.
LawReport check_algebraic_opcm(const FiniteOpcm& pcm,
                               const AlgebraicOpcmOptions& opts = {});

/// The carrier of `pcm` re-ordered by algebraic_leq.
FiniteOpcm with_algebraic_order(const FiniteOpcm& pcm);

/// Under the hypothesis that zero is least (reported unmet otherwise, without
/// failing): (1) ⊑ implies ⪯; (2) x, y ⪯ x ⊕ y wherever defined.
LawReport check_compatibility(const FiniteOpcm& m);

/// Cartesian product with pointwise order and componentwise combine,
/// defined iff both components are.
FiniteOpcm product(const FiniteOpcm& m1, const FiniteOpcm& m2);

/// Projections and pairing for a product carrier built by product().
Elem product_pair(const Elem& x1, const Elem& x2);

/// Quotient OPCM over information classes: [x]⊕[y] = [x⊕y], defined iff some
/// representatives combine. Representative disagreement (possible only for
/// law-violating inputs) throws structural_error.
FiniteOpcm quotient_opcm(const FiniteOpcm& m);

}  // namespace opcmlink
