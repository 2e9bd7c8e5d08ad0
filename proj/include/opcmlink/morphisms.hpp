#pragma once

#include <map>
#include <optional>

#include "opcmlink/opcm.hpp"

namespace opcmlink {

/// A total map between OPCM carriers. Carries no laws of its own: whether it
/// is a homomorphism (HOM1 monotone, HOM2 preserves zero, HOM3 preserves
/// combine up to ≅) is decided by check_hom; upper adjoints reuse the same
/// representation and are only required to be monotone.
class OpcmMap {
 public:
  static OpcmMap make(OpcmPtr source, OpcmPtr target,
                      const std::map<Elem, Elem>& mapping);
  static OpcmMap identity(OpcmPtr m);
  /// x ↦ 0: destroys all information; always a homomorphism.
  static OpcmMap trivial(OpcmPtr source, OpcmPtr target);
  /// g ∘ f for f: M→N, g: N→P. Throws structural_error when g's source is
  /// not f's target (compared by value).
  static OpcmMap compose(const OpcmMap& f, const OpcmMap& g);

  const FiniteOpcm& source() const { return *source_; }
  const FiniteOpcm& target() const { return *target_; }
  OpcmPtr source_ptr() const { return source_; }
  OpcmPtr target_ptr() const { return target_; }

  const Elem& apply(const Elem& x) const;
  ElemIdx apply_idx(ElemIdx i) const { return map_[i]; }

  bool operator==(const OpcmMap& other) const;

 private:
  OpcmMap() = default;
  OpcmPtr source_, target_;
  std::vector<ElemIdx> map_;
};

LawReport check_hom(const OpcmMap& f);
LawReport check_monotone(const OpcmMap& f);

/// f preserves and reflects the ordering. Precondition: f is a homomorphism.
bool check_embedding(const OpcmMap& f);
/// A bijective order-embedding.
bool check_isomorphism(const OpcmMap& f);

/// Verifies that ⟨f1,f2⟩ into product(M1,M2) is the unique homomorphism
/// commuting with both projections. f1, f2: N → Mi must pass check_hom
/// (precondition_error otherwise).
bool check_product_universal(const FiniteOpcm& m1, const FiniteOpcm& m2,
                             OpcmPtr n, const OpcmMap& f1, const OpcmMap& f2);

/// A change of domain: a homomorphism (lower) with its upper adjoint, a
/// monotone restriction map back. The adjunction f(x) ⪯ y ⟺ x ⪯ f*(y) is
/// checked by check_galois, never assumed.
struct GaloisConnection {
  OpcmMap lower;  // f : M → N
  OpcmMap upper;  // f* : N → M

  static GaloisConnection identity(OpcmPtr m);
};

/// Adjunction biconditional over all pairs, monotonicity of the upper, and
/// the derived closure laws x ⪯ f*f(x) and f*f(f*f x) ⪯ f*f(x).
LawReport check_galois(const GaloisConnection& gc);

GaloisConnection compose_galois(const GaloisConnection& mn,
                                const GaloisConnection& np);

/// For finite carriers an upper adjoint, when it exists, is the pointwise
/// maximum of { x | f(x) ⪯ y }; returns nullopt when some y has none.
std::optional<OpcmMap> synthesize_upper(const OpcmMap& lower);

/// A function between plain finite sets, used to induce possibility-level
/// connections.
struct SetFunction {
  ElemSet domain;
  ElemSet codomain;
  std::map<Elem, Elem> map;  // total on domain

  static SetFunction make(ElemSet domain, ElemSet codomain,
                          std::map<Elem, Elem> map);
  const Elem& apply(const Elem& x) const;
  bool is_surjective() const;
  ElemSet preimage(const ElemSet& v) const;
  ElemSet image(const ElemSet& u) const;
};

/// For a surjection f: X ↠ Y, the change of domain f⁻¹: ℙ⁺Y → ℙ⁺X with
/// upper adjoint the forward image. Throws precondition_error when f is not
/// surjective (a preimage would be empty).
GaloisConnection preimage_galois(const SetFunction& f, std::size_t cap = 0);

enum class IneqVerdict { vacuous, holds_equal, holds_strict, violated };

/// x ⊕ f*(y) ⪯ f*(f(x) ⊕ y) for x in the source, y in the target; vacuous
/// when either combine is undefined. holds_equal reports the two sides
/// equivalent — the combination-axiom diagnostic.
IneqVerdict check_extension_inequality(const GaloisConnection& gc,
                                       const Elem& x, const Elem& y);
/// All pairs; fails on any violated pair, notes equal/strict/vacuous counts.
LawReport check_extension_inequality_all(const GaloisConnection& gc);

/// A commuting square of changes of domain through a common domain K into a
/// joint domain N: gi: K → Mi, fi: Mi → N with f1∘g1 ≅ f2∘g2.
struct LinkingPassage {
  GaloisConnection g1, g2;  // K → M1, K → M2
  GaloisConnection f1, f2;  // M1 → N, M2 → N
};

/// The four connections pass check_galois and the square commutes up to ≅.
LawReport check_linking_passage(const LinkingPassage& lp);

/// f1(x1) ⊕ f2(x2) in the joint domain; nullopt signals inconsistent data.
std::optional<Elem> link(const LinkingPassage& lp, const Elem& x1,
                         const Elem& x2);

/// The route through the common domain is at most as informative as the
/// route through the joint domain: g2(g1*(x)) ⪯ f2*(f1(x)).
IneqVerdict check_two_routes(const LinkingPassage& lp, const Elem& x);
LawReport check_two_routes_all(const LinkingPassage& lp);

/// From surjections gi: Y ↠ Xi and fi: Xi ↠ Z with f1∘g1 = f2∘g2 (checked):
/// the linking passage of preimage connections with K = ℙ⁺Z, Mi = ℙ⁺Xi,
/// N = ℙ⁺Y.
LinkingPassage linking_passage_from_surjections(const SetFunction& g1,
                                                const SetFunction& g2,
                                                const SetFunction& f1,
                                                const SetFunction& f2,
                                                std::size_t cap = 0);

}  // namespace opcmlink
