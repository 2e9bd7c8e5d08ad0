#pragma once

#include <map>
#include <utility>
#include <vector>

#include "opcmlink/elem.hpp"

namespace opcmlink {

/// Which of the three subset liftings of an information order to use.
/// flat: every member of S has a refinement in T (T enriches S).
/// sharp: every member of T refines some member of S (S adulterates T).
/// natural: both.
enum class Lift { flat, sharp, natural };

/// A finite preordered carrier. Immutable after construction; constructors
/// validate reflexivity and transitivity and throw rather than repair.
class Preorder {
 public:
  /// The relation must already be a preorder; throws structural_error on
  /// out-of-carrier endpoints or duplicate carrier entries, precondition_error
  /// if reflexivity or transitivity fails. Validators never auto-close.
  static Preorder from_relation(ElemSet carrier,
                                const std::vector<std::pair<Elem, Elem>>& leq);

  /// Reflexive-transitive closure of the generating pairs.
  static Preorder from_generators(ElemSet carrier,
                                  const std::vector<std::pair<Elem, Elem>>& gen);

  /// x ⪯ y iff x = y.
  static Preorder discrete(ElemSet carrier);

  std::size_t size() const { return elems_.size(); }
  const ElemSet& elements() const { return elems_; }
  bool contains(const Elem& x) const;
  /// Throws structural_error for unknown elements.
  ElemIdx index_of(const Elem& x) const;
  const Elem& element(ElemIdx i) const { return elems_[i]; }

  bool leq(const Elem& x, const Elem& y) const;
  bool leq_idx(ElemIdx i, ElemIdx j) const { return leq_[i * elems_.size() + j]; }

  /// Mutual ⪯: same information content.
  bool equiv(const Elem& x, const Elem& y) const;
  bool equiv_idx(ElemIdx i, ElemIdx j) const {
    return leq_idx(i, j) && leq_idx(j, i);
  }

  bool is_partial_order() const;

  std::vector<std::pair<Elem, Elem>> relation_pairs() const;

  bool operator==(const Preorder& other) const;

 private:
  Preorder() = default;
  ElemSet elems_;
  std::vector<bool> leq_;  // row-major carrier x carrier
};

/// True iff the relation is reflexive and transitive on all of the carrier.
/// Throws structural_error when leq references elements outside the carrier.
bool is_preorder(const ElemSet& carrier,
                 const std::vector<std::pair<Elem, Elem>>& leq);

/// Lifted subset comparison. S and T must be non-empty subsets of the carrier
/// (precondition_error / structural_error otherwise).
bool lift(const Preorder& p, Lift mode, const ElemSet& s, const ElemSet& t);

/// K(S) = { a | ∃x,y∈S. x ⪯ a ⪯ y }. Always a superset of S.
ElemSet convex_hull(const Preorder& p, const ElemSet& s);

/// An information-equivalence class.
struct InfoClass {
  Elem representative;  // lexicographically least member
  ElemSet members;
};

struct QuotientResult {
  Preorder classes;               // carrier: class names "[rep]"
  std::vector<InfoClass> class_list;
  std::map<Elem, Elem> projection;  // element -> class name
};

/// Quotient by information equivalence: antisymmetric order on classes with
/// [x] ≤ [y] ⟺ x ⪯ y; projection maps each element to its class.
QuotientResult quotient(const Preorder& p);

/// Class name spelling used by quotient: "[" + representative + "]".
Elem class_name(const Elem& representative);

}  // namespace opcmlink
