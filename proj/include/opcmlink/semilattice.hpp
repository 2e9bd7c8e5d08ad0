#pragma once

#include <optional>

#include "opcmlink/elem.hpp"
#include "opcmlink/preorder.hpp"

namespace opcmlink {

/// A finite bounded join-semilattice: a partial order with a least element
/// and all binary joins. The join table is computed from the order and
/// validated as a least upper bound, not trusted.
class JoinSemilattice {
 public:
  /// Throws precondition_error when the relation is not a partial order, has
  /// no least element, or some pair lacks a least upper bound.
  static JoinSemilattice from_order(ElemSet carrier,
                                    const std::vector<std::pair<Elem, Elem>>& leq);

  /// (ℙ(base), ⊆, ∅, ∪) with elements named "{...}".
  static JoinSemilattice powerset(const ElemSet& base);

  std::size_t size() const { return order_.size(); }
  const ElemSet& elements() const { return order_.elements(); }
  const Preorder& order() const { return order_; }
  bool contains(const Elem& x) const { return order_.contains(x); }
  ElemIdx index_of(const Elem& x) const { return order_.index_of(x); }
  const Elem& element(ElemIdx i) const { return order_.element(i); }

  bool leq(const Elem& x, const Elem& y) const { return order_.leq(x, y); }
  bool leq_idx(ElemIdx i, ElemIdx j) const { return order_.leq_idx(i, j); }

  const Elem& bottom() const { return order_.element(bottom_); }
  ElemIdx bottom_index() const { return bottom_; }

  const Elem& join(const Elem& x, const Elem& y) const;
  ElemIdx join_idx(ElemIdx i, ElemIdx j) const {
    return join_[i * size() + j];
  }

  /// Greatest lower bound when it exists (needed by valuation algebras,
  /// where the domain lattice must have meets).
  std::optional<Elem> meet(const Elem& x, const Elem& y) const;
  std::optional<ElemIdx> meet_idx(ElemIdx i, ElemIdx j) const;

  bool operator==(const JoinSemilattice& other) const;

 private:
  JoinSemilattice() = default;
  Preorder order_;
  ElemIdx bottom_ = 0;
  std::vector<ElemIdx> join_;
};

}  // namespace opcmlink
