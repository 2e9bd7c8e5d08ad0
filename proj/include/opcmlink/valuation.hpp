#pragma once

#include "opcmlink/relational.hpp"

namespace opcmlink {

/// A finite (stable) ordered valuation algebra: labeled valuations over a
/// domain lattice with combination, focusing and per-domain identities.
/// The combine table admits undefined entries so that instances whose
/// combination can signal inconsistency (the relational one joins to the
/// empty set) fit the same mould; where the table is total the checks reduce
/// to the classical conditions.
class ValuationAlgebra {
 public:
  class Builder {
   public:
    explicit Builder(JoinSemilattice domains);
    Builder& add(const Elem& valuation, const Elem& domain);
    Builder& order(const Elem& lo, const Elem& hi);
    Builder& combine(const Elem& x, const Elem& y, const Elem& result);
    Builder& combine_undefined(const Elem& x, const Elem& y);
    Builder& focus(const Elem& phi, const Elem& domain, const Elem& result);
    Builder& identity(const Elem& domain, const Elem& valuation);
    /// Structural validation only (totality of labels/identities, focus
    /// entries present exactly for x ≤ d(φ), order reflexive): the nine
    /// axioms stay with check_ova_axioms.
    ValuationAlgebra build() &&;

   private:
    friend class ValuationAlgebra;
    JoinSemilattice domains_;
    std::vector<Elem> vals_;
    std::map<Elem, Elem> label_;
    std::vector<std::pair<Elem, Elem>> leq_;
    std::map<std::pair<Elem, Elem>, std::optional<Elem>> combine_;
    std::map<std::pair<Elem, Elem>, Elem> focus_;
    std::map<Elem, Elem> identity_;
  };

  /// The valuation algebra of relations: valuations "A@S" for every relation
  /// S over every attribute subset A, ordered by same-domain reverse
  /// inclusion, combined by natural join (undefined when empty), focused by
  /// projection, with the full relations as identities.
  static ValuationAlgebra relational(SchemaPtr schema, std::size_t cap = 0);

  std::size_t size() const { return vals_.size(); }
  const ElemSet& valuations() const { return vals_; }
  const JoinSemilattice& domains() const { return domains_; }
  ElemIdx index_of(const Elem& v) const;
  const Elem& valuation(ElemIdx i) const { return vals_[i]; }

  const Elem& label(const Elem& phi) const;
  ElemIdx label_idx(ElemIdx i) const { return label_[i]; }
  ElemSet valuations_with_domain(const Elem& x) const;

  bool leq(const Elem& phi, const Elem& psi) const;
  bool leq_idx(ElemIdx i, ElemIdx j) const { return leq_[i * vals_.size() + j]; }

  bool defined(const Elem& x, const Elem& y) const;
  std::optional<Elem> combine(const Elem& x, const Elem& y) const;
  std::optional<ElemIdx> combine_idx(ElemIdx i, ElemIdx j) const;

  /// φ↓x; precondition: x ≤ d(φ).
  const Elem& focus(const Elem& phi, const Elem& domain) const;
  ElemIdx focus_idx(ElemIdx phi, ElemIdx domain) const;

  const Elem& identity(const Elem& domain) const;
  ElemIdx identity_idx(ElemIdx domain) const { return identity_[domain]; }

 private:
  ValuationAlgebra() = default;
  ElemSet vals_;
  JoinSemilattice domains_;
  std::vector<ElemIdx> label_;
  std::vector<bool> leq_;
  std::vector<long> combine_;            // -1 undefined
  std::vector<long> focus_;              // vals x domains; -1 = not x ≤ d(φ)
  std::vector<ElemIdx> identity_;
  std::map<Elem, ElemIdx> index_;

  friend LawReport check_ova_axioms(const ValuationAlgebra&);
};

/// The nine defining conditions, exhaustively, each itemized with witnesses:
/// semigroup, comparability-implies-same-domain, identities, stability,
/// labelling, transitivity of focusing, distributivity, and order
/// preservation of combine and focus. Also requires the domain lattice to
/// have binary meets (distributivity mentions them) and vacuous extensions
/// φ ⊗ e_y to be defined for y ≥ d(φ).
LawReport check_ova_axioms(const ValuationAlgebra& v);

/// φ↑y = φ ⊗ e_y for y ≥ d(φ); precondition_error when y ≱ d(φ) or the
/// table leaves the combine undefined.
Elem vacuous_extension(const ValuationAlgebra& v, const Elem& phi,
                       const Elem& y);

/// The D-indexed family with fibers (Φ_x, ≤, ⊗, e_x) and transitions ↑y.
/// Precondition: check_ova_axioms passes.
IndexedFamily family_from_ova(const ValuationAlgebra& v);

/// φ ≤′ ψ ⟺ d(φ) ≤ d(ψ) and φ↑d(ψ) ≤ ψ — the canonical extension of the
/// order across domains.
bool extended_leq(const ValuationAlgebra& v, const Elem& phi, const Elem& psi);

/// ≤′ keeps every condition except comparability-implies-same-domain:
/// restricted to one domain it coincides with ≤, combination preserves it,
/// and focusing preserves it in the form "φ ≤′ ψ and x ≤ d(φ) imply
/// φ↓x ≤′ ψ↓x".
LawReport check_extended_order(const ValuationAlgebra& v);

/// χ per (φ, x ≤ d(φ)) with φ↓x ⊗ χ ⊗ φ ≤ φ.
struct RegularityWitness {
  std::map<std::pair<Elem, Elem>, Elem> chi;
};

/// Exhaustive search for a regularity witness; nullopt when some pair has
/// none.
std::optional<RegularityWitness> find_regularity_witness(
    const ValuationAlgebra& v);

/// Part 1 (extension below implies below the focus) unconditionally; part 2
/// (the converse) under identity-leastness and regularity, with unmet
/// hypotheses reported as such. A supplied witness is validated first.
LawReport check_galois_lemma(
    const ValuationAlgebra& v,
    const std::optional<RegularityWitness>& witness = std::nullopt);

/// The representation theorem for regular, identity-least valuation
/// algebras: (x,φ) ↦ φ is a bijection from the completion of the derived
/// family, an order isomorphism onto ≤′, the completion combine agrees with
/// ⊗ (including definedness), zero corresponds to e_⊥, and the synthesized
/// upper adjoint of vacuous extension is focusing, pointwise.
LawReport check_isomorphism_theorem(const ValuationAlgebra& v);

}  // namespace opcmlink
