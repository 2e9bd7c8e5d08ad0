#pragma once

#include <map>

#include "opcmlink/morphisms.hpp"
#include "opcmlink/semilattice.hpp"

namespace opcmlink {

/// A point of the completion: an index together with an element of that
/// index's fiber.
struct GrothElem {
  Elem index;
  Elem value;

  bool operator==(const GrothElem& other) const {
    return index == other.index && value == other.value;
  }
};

/// "i@x" — the carrier spelling of completion elements.
Elem groth_name(const GrothElem& e);
GrothElem parse_groth_name(const Elem& name);

/// A strict functor from a finite bounded join-semilattice into OPCMs: one
/// fiber per index and a transition map for every comparable index pair.
/// Strictness (identities and compositions holding on the nose, not merely
/// up to ≅) is required by check_functor; a family that is only a
/// pseudo-functor is rejected with a diagnostic saying so.
struct IndexedFamily {
  JoinSemilattice index;
  std::map<Elem, OpcmPtr> fiber;
  std::map<std::pair<Elem, Elem>, OpcmMap> transition;  // key (i, j) with i ≤ j

  const FiniteOpcm& fiber_at(const Elem& i) const;
  OpcmPtr fiber_ptr(const Elem& i) const;
  /// Throws structural_error when the pair is missing or not comparable.
  const OpcmMap& transition_for(const Elem& i, const Elem& j) const;
};

/// Identity and composition laws (strict), each transition a homomorphism,
/// transitions present for all comparable pairs with matching endpoints.
LawReport check_functor(const IndexedFamily& f);

/// (i,x) ⪯ (j,y) iff i ≤ j and the transition image of x is ⪯ y in fiber j.
bool completion_leq(const IndexedFamily& f, const GrothElem& a,
                    const GrothElem& b);

/// The completion facts, exhausted at fixture scale: (1) the completion
/// relation is a preorder; (2) it is a poset when the index and all fibers
/// are (hypothesis reported unmet otherwise); (3) the projection is
/// monotone; (4) the projection is an opfibration with the transition image
/// as cocartesian lift; (5) when every transition has an upper adjoint, the
/// dual opfibration property — recorded from what the fixtures show, not
/// assumed.
LawReport check_completion_props(const IndexedFamily& f);

/// The completion OPCM: carrier all (i,x) named "i@x", completion order,
/// zero (⊥, 0_⊥), and (i,x) ⊞ (j,y) = (i∨j, transition image of x ⊕
/// transition image of y), defined iff the fiber combine is.
FiniteOpcm groth_opcm(const IndexedFamily& f, std::size_t cap = 0);

}  // namespace opcmlink
