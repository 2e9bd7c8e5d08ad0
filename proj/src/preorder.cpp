#include "opcmlink/preorder.hpp"

#include <algorithm>

#include "opcmlink/errors.hpp"

namespace opcmlink {

namespace {

ElemSet checked_carrier(ElemSet carrier) {
  for (const auto& e : carrier) validate_elem(e);
  std::sort(carrier.begin(), carrier.end());
  if (std::adjacent_find(carrier.begin(), carrier.end()) != carrier.end()) {
    throw structural_error("duplicate element in carrier");
  }
  return carrier;
}

std::vector<bool> relation_matrix(const ElemSet& carrier,
                                  const std::vector<std::pair<Elem, Elem>>& pairs) {
  const std::size_t n = carrier.size();
  std::vector<bool> m(n * n, false);
  auto idx = [&](const Elem& e) -> std::size_t {
    const auto it = std::lower_bound(carrier.begin(), carrier.end(), e);
    if (it == carrier.end() || *it != e) {
      throw structural_error("relation references element outside carrier: '" +
                             display_name(e) + "'");
    }
    return static_cast<std::size_t>(it - carrier.begin());
  };
  for (const auto& [x, y] : pairs) m[idx(x) * n + idx(y)] = true;
  return m;
}

bool matrix_is_preorder(const std::vector<bool>& m, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (!m[i * n + i]) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!m[i * n + j]) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (m[j * n + k] && !m[i * n + k]) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_preorder(const ElemSet& carrier,
                 const std::vector<std::pair<Elem, Elem>>& leq) {
  const ElemSet c = checked_carrier(carrier);
  const auto m = relation_matrix(c, leq);
  return matrix_is_preorder(m, c.size());
}

Preorder Preorder::from_relation(ElemSet carrier,
                                 const std::vector<std::pair<Elem, Elem>>& leq) {
  Preorder p;
  p.elems_ = checked_carrier(std::move(carrier));
  p.leq_ = relation_matrix(p.elems_, leq);
  if (!matrix_is_preorder(p.leq_, p.elems_.size())) {
    throw precondition_error("relation is not a preorder (reflexivity or transitivity fails)");
  }
  return p;
}

Preorder Preorder::from_generators(ElemSet carrier,
                                   const std::vector<std::pair<Elem, Elem>>& gen) {
  Preorder p;
  p.elems_ = checked_carrier(std::move(carrier));
  const std::size_t n = p.elems_.size();
  p.leq_ = relation_matrix(p.elems_, gen);
  for (std::size_t i = 0; i < n; ++i) p.leq_[i * n + i] = true;
  // Floyd-Warshall style closure.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!p.leq_[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (p.leq_[k * n + j]) p.leq_[i * n + j] = true;
      }
    }
  }
  return p;
}

Preorder Preorder::discrete(ElemSet carrier) {
  Preorder p;
  p.elems_ = checked_carrier(std::move(carrier));
  const std::size_t n = p.elems_.size();
  p.leq_.assign(n * n, false);
  for (std::size_t i = 0; i < n; ++i) p.leq_[i * n + i] = true;
  return p;
}

bool Preorder::contains(const Elem& x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

ElemIdx Preorder::index_of(const Elem& x) const {
  const auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
  if (it == elems_.end() || *it != x) {
    throw structural_error("unknown element: '" + display_name(x) + "'");
  }
  return static_cast<ElemIdx>(it - elems_.begin());
}

bool Preorder::leq(const Elem& x, const Elem& y) const {
  return leq_idx(index_of(x), index_of(y));
}

bool Preorder::equiv(const Elem& x, const Elem& y) const {
  return equiv_idx(index_of(x), index_of(y));
}

bool Preorder::is_partial_order() const {
  const std::size_t n = elems_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (leq_idx(i, j) && leq_idx(j, i)) return false;
    }
  }
  return true;
}

std::vector<std::pair<Elem, Elem>> Preorder::relation_pairs() const {
  std::vector<std::pair<Elem, Elem>> out;
  const std::size_t n = elems_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (leq_idx(i, j)) out.emplace_back(elems_[i], elems_[j]);
    }
  }
  return out;
}

bool Preorder::operator==(const Preorder& other) const {
  return elems_ == other.elems_ && leq_ == other.leq_;
}

namespace {

void check_subset(const Preorder& p, const ElemSet& s, const char* which) {
  if (s.empty()) {
    throw precondition_error(std::string("lifted comparison over empty subset ") + which);
  }
  for (const auto& e : s) p.index_of(e);  // throws on unknown
}

}  // namespace

bool lift(const Preorder& p, Lift mode, const ElemSet& s, const ElemSet& t) {
  check_subset(p, s, "S");
  check_subset(p, t, "T");
  const auto flat_holds = [&] {
    for (const auto& x : s) {
      bool found = false;
      for (const auto& y : t) {
        if (p.leq(x, y)) { found = true; break; }
      }
      if (!found) return false;
    }
    return true;
  };
  const auto sharp_holds = [&] {
    for (const auto& y : t) {
      bool found = false;
      for (const auto& x : s) {
        if (p.leq(x, y)) { found = true; break; }
      }
      if (!found) return false;
    }
    return true;
  };
  switch (mode) {
    case Lift::flat: return flat_holds();
    case Lift::sharp: return sharp_holds();
    case Lift::natural: return flat_holds() && sharp_holds();
  }
  return false;
}

ElemSet convex_hull(const Preorder& p, const ElemSet& s) {
  check_subset(p, s, "S");
  ElemSet out;
  for (const auto& a : p.elements()) {
    bool in_hull = false;
    for (const auto& x : s) {
      if (!p.leq(x, a)) continue;
      for (const auto& y : s) {
        if (p.leq(a, y)) { in_hull = true; break; }
      }
      if (in_hull) break;
    }
    if (in_hull) out.push_back(a);
  }
  return out;  // carrier order is sorted already
}

Elem class_name(const Elem& representative) {
  return "[" + representative + "]";
}

QuotientResult quotient(const Preorder& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> cls(n, n);
  QuotientResult result;
  for (std::size_t i = 0; i < n; ++i) {
    if (cls[i] != n) continue;
    InfoClass c;
    c.representative = p.element(i);  // least index = lexicographic least
    for (std::size_t j = i; j < n; ++j) {
      if (p.equiv_idx(i, j)) {
        cls[j] = result.class_list.size();
        c.members.push_back(p.element(j));
      }
    }
    result.class_list.push_back(std::move(c));
  }
  ElemSet names;
  for (const auto& c : result.class_list) names.push_back(class_name(c.representative));
  std::vector<std::pair<Elem, Elem>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    result.projection[p.element(i)] = names[cls[i]];
    for (std::size_t j = 0; j < n; ++j) {
      if (p.leq_idx(i, j)) pairs.emplace_back(names[cls[i]], names[cls[j]]);
    }
  }
  result.classes = Preorder::from_relation(names, pairs);
  return result;
}

}  // namespace opcmlink
