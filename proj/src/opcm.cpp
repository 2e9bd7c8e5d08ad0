#include "opcmlink/opcm.hpp"

#include <algorithm>
#include <map>

#include "opcmlink/errors.hpp"

namespace opcmlink {

FiniteOpcm FiniteOpcm::make(Preorder order, const Elem& zero,
                            const std::vector<Triple>& combine) {
  FiniteOpcm m;
  m.zero_ = order.index_of(zero);
  const std::size_t n = order.size();
  m.table_.assign(n * n, -1);
  for (const auto& [x, y, z] : combine) {
    const ElemIdx i = order.index_of(x);
    const ElemIdx j = order.index_of(y);
    const ElemIdx k = order.index_of(z);
    long& cell = m.table_[i * n + j];
    if (cell >= 0 && cell != static_cast<long>(k)) {
      throw structural_error("conflicting combine entries for (" +
                             display_name(x) + ", " + display_name(y) + ")");
    }
    cell = static_cast<long>(k);
  }
  m.order_ = std::move(order);
  return m;
}

bool FiniteOpcm::defined(const Elem& x, const Elem& y) const {
  return defined_idx(index_of(x), index_of(y));
}

std::optional<Elem> FiniteOpcm::combine(const Elem& x, const Elem& y) const {
  const auto r = combine_idx(index_of(x), index_of(y));
  if (!r) return std::nullopt;
  return element(*r);
}

std::optional<ElemIdx> FiniteOpcm::combine_idx(ElemIdx i, ElemIdx j) const {
  const long cell = table_[i * size() + j];
  if (cell < 0) return std::nullopt;
  return static_cast<ElemIdx>(cell);
}

std::vector<FiniteOpcm::Triple> FiniteOpcm::combine_triples() const {
  std::vector<Triple> out;
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (const auto k = combine_idx(i, j)) {
        out.emplace_back(element(i), element(j), element(*k));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

FiniteOpcm FiniteOpcm::with_combine(const Elem& x, const Elem& y,
                                    const std::optional<Elem>& z) const {
  FiniteOpcm m = *this;
  const std::size_t n = size();
  m.table_[index_of(x) * n + index_of(y)] = z ? static_cast<long>(index_of(*z)) : -1;
  return m;
}

bool FiniteOpcm::operator==(const FiniteOpcm& other) const {
  return order_ == other.order_ && zero_ == other.zero_ && table_ == other.table_;
}

namespace {

void enforce_cap(std::size_t n, std::size_t cap, const char* what) {
  const std::size_t effective = cap ? cap : max_carrier();
  if (n > effective) {
    throw resource_error(std::string(what) + ": carrier size " +
                         std::to_string(n) + " exceeds cap " +
                         std::to_string(effective));
  }
}

}  // namespace

LawReport check_opcm_laws(const FiniteOpcm& m, const OpcmLawOptions& opts) {
  enforce_cap(m.size(), opts.cap, "check_opcm_laws");
  const std::size_t n = m.size();
  const ElemIdx zero = m.zero_index();
  LawReport report;

  auto& l1 = report.add("OPCM1");
  for (ElemIdx x = 0; x < n; ++x) {
    ++l1.cases;
    const auto zx = m.combine_idx(zero, x);
    if (!zx) {
      l1.fail_with({m.element(x)}, "0⊕x undefined");
    } else if (!m.equiv_idx(*zx, x)) {
      l1.fail_with({m.element(x)},
                   "0⊕x = " + display_name(m.element(*zx)) + " not ≅ x");
    } else {
      l1.used_equivalence(m.element(*zx), m.element(x));
    }
  }

  auto& l2 = report.add("OPCM2");
  for (ElemIdx x = 0; x < n; ++x) {
    for (ElemIdx y = 0; y < n; ++y) {
      ++l2.cases;
      const auto xy = m.combine_idx(x, y);
      if (!xy) continue;
      const auto yx = m.combine_idx(y, x);
      if (!yx) {
        l2.fail_with({m.element(x), m.element(y)}, "x⊥y but not y⊥x");
      } else if (!m.equiv_idx(*xy, *yx)) {
        l2.fail_with({m.element(x), m.element(y)},
                     "x⊕y = " + display_name(m.element(*xy)) + " not ≅ y⊕x = " +
                         display_name(m.element(*yx)));
      } else {
        l2.used_equivalence(m.element(*xy), m.element(*yx));
      }
    }
  }

  auto& l3 = report.add("OPCM3");
  auto check_assoc = [&](ElemIdx x, ElemIdx y, ElemIdx z) {
    // Hypotheses of the stated direction: y⊥z and x⊥(y⊕z).
    const auto yz = m.combine_idx(y, z);
    if (!yz) return;
    const auto x_yz = m.combine_idx(x, *yz);
    if (!x_yz) return;
    const auto xy = m.combine_idx(x, y);
    if (!xy) {
      l3.fail_with({m.element(x), m.element(y), m.element(z)},
                   "y⊥z and x⊥(y⊕z) but not x⊥y");
      return;
    }
    const auto xy_z = m.combine_idx(*xy, z);
    if (!xy_z) {
      l3.fail_with({m.element(x), m.element(y), m.element(z)},
                   "y⊥z and x⊥(y⊕z) but not (x⊕y)⊥z");
      return;
    }
    if (!m.equiv_idx(*x_yz, *xy_z)) {
      l3.fail_with({m.element(x), m.element(y), m.element(z)},
                   "x⊕(y⊕z) = " + display_name(m.element(*x_yz)) +
                       " not ≅ (x⊕y)⊕z = " + display_name(m.element(*xy_z)));
    } else {
      l3.used_equivalence(m.element(*x_yz), m.element(*xy_z));
    }
  };
  auto check_assoc_conv = [&](ElemIdx x, ElemIdx y, ElemIdx z) {
    // Converse propagation: x⊥y and (x⊕y)⊥z imply y⊥z and x⊥(y⊕z).
    const auto xy = m.combine_idx(x, y);
    if (!xy) return;
    const auto xy_z = m.combine_idx(*xy, z);
    if (!xy_z) return;
    const auto yz = m.combine_idx(y, z);
    if (!yz) {
      l3.fail_with({m.element(x), m.element(y), m.element(z)},
                   "x⊥y and (x⊕y)⊥z but not y⊥z (converse)");
      return;
    }
    const auto x_yz = m.combine_idx(x, *yz);
    if (!x_yz) {
      l3.fail_with({m.element(x), m.element(y), m.element(z)},
                   "x⊥y and (x⊕y)⊥z but not x⊥(y⊕z) (converse)");
      return;
    }
    if (!m.equiv_idx(*x_yz, *xy_z)) {
      l3.fail_with({m.element(x), m.element(y), m.element(z)},
                   "associativity equation fails (converse direction)");
    }
  };
  for (ElemIdx x = 0; x < n; ++x) {
    for (ElemIdx y = 0; y < n; ++y) {
      for (ElemIdx z = 0; z < n; ++z) {
        ++l3.cases;
        check_assoc(x, y, z);
        if (!opts.strict_def3) check_assoc_conv(x, y, z);
      }
    }
  }
  if (opts.strict_def3) l3.note = "stated direction only (strict-def3)";

  auto& l4 = report.add("OPCM4");
  for (ElemIdx x1 = 0; x1 < n; ++x1) {
    for (ElemIdx x2 = 0; x2 < n; ++x2) {
      if (!m.leq_idx(x1, x2)) continue;
      for (ElemIdx y = 0; y < n; ++y) {
        ++l4.cases;
        const auto a = m.combine_idx(x1, y);
        const auto b = m.combine_idx(x2, y);
        if (!a || !b) continue;
        if (!m.leq_idx(*a, *b)) {
          l4.fail_with({m.element(x1), m.element(x2), m.element(y)},
                       "x1⪯x2 but x1⊕y = " + display_name(m.element(*a)) +
                           " not ⪯ x2⊕y = " + display_name(m.element(*b)));
        }
      }
    }
  }

  return report;
}

bool algebraic_leq(const FiniteOpcm& m, const Elem& x, const Elem& y) {
  const ElemIdx xi = m.index_of(x);
  const ElemIdx yi = m.index_of(y);
  for (ElemIdx z = 0; z < m.size(); ++z) {
    const auto xz = m.combine_idx(xi, z);
    if (xz && m.equiv_idx(*xz, yi)) return true;
  }
  return false;
}

FiniteOpcm with_algebraic_order(const FiniteOpcm& pcm) {
  std::vector<std::pair<Elem, Elem>> pairs;
  for (const auto& x : pcm.elements()) {
    for (const auto& y : pcm.elements()) {
      if (algebraic_leq(pcm, x, y)) pairs.emplace_back(x, y);
    }
  }
  return FiniteOpcm::make(Preorder::from_relation(pcm.elements(), pairs),
                          pcm.zero(), pcm.combine_triples());
}

LawReport check_algebraic_opcm(const FiniteOpcm& pcm,
                               const AlgebraicOpcmOptions& opts) {
  if (!pcm.order().is_partial_order()) {
    throw precondition_error("check_algebraic_opcm expects a PCM (discrete order)");
  }
  for (const auto& x : pcm.elements()) {
    for (const auto& y : pcm.elements()) {
      if (x != y && pcm.leq(x, y)) {
        throw precondition_error("check_algebraic_opcm expects a PCM (discrete order)");
      }
    }
  }
  const std::size_t n = pcm.size();
  LawReport report;

  // The algebraic relation must itself be a preorder before anything else.
  std::vector<bool> alg(n * n, false);
  for (ElemIdx x = 0; x < n; ++x) {
    for (ElemIdx y = 0; y < n; ++y) {
      alg[x * n + y] = algebraic_leq(pcm, pcm.element(x), pcm.element(y));
    }
  }
  auto& pre = report.add("algebraic-order-preorder");
  for (ElemIdx x = 0; x < n; ++x) {
    ++pre.cases;
    if (!alg[x * n + x]) {
      pre.fail_with({pcm.element(x)}, "x ⊑ x fails");
    }
  }
  for (ElemIdx x = 0; x < n; ++x) {
    for (ElemIdx y = 0; y < n; ++y) {
      for (ElemIdx z = 0; z < n; ++z) {
        ++pre.cases;
        if (alg[x * n + y] && alg[y * n + z] && !alg[x * n + z]) {
          pre.fail_with({pcm.element(x), pcm.element(y), pcm.element(z)},
                        "⊑ not transitive");
        }
      }
    }
  }
  if (pre.status == CheckStatus::fail) return report;

  const FiniteOpcm ordered = with_algebraic_order(pcm);
  report.merge(check_opcm_laws(ordered));

  auto& least = report.add("zero-least");
  for (const auto& x : ordered.elements()) {
    ++least.cases;
    if (!ordered.leq(ordered.zero(), x)) {
      least.fail_with({x}, "0 ⊑ x fails");
    }
  }

  auto& mono = report.add(opts.pairwise_reading ? "pairwise-monotone (x⊥y reading)"
                                                : "pairwise-monotone (literal x⊥x)");
  for (ElemIdx x = 0; x < n; ++x) {
    for (ElemIdx y = 0; y < n; ++y) {
      for (ElemIdx x2 = 0; x2 < n; ++x2) {
        for (ElemIdx y2 = 0; y2 < n; ++y2) {
          if (!alg[x * n + x2] || !alg[y * n + y2]) continue;
          if (!ordered.defined_idx(x2, y2)) continue;
          const bool hyp = opts.pairwise_reading ? ordered.defined_idx(x, y)
                                                 : ordered.defined_idx(x, x);
          if (!hyp) continue;
          ++mono.cases;
          const auto xy = ordered.combine_idx(x, y);
          if (!xy) {
            mono.fail_with({ordered.element(x), ordered.element(y),
                            ordered.element(x2), ordered.element(y2)},
                           "hypotheses hold but x⊕y undefined");
            continue;
          }
          const auto x2y2 = ordered.combine_idx(x2, y2);
          if (!alg[*xy * n + *x2y2]) {
            mono.fail_with({ordered.element(x), ordered.element(y),
                            ordered.element(x2), ordered.element(y2)},
                           "x⊕y not ⊑ x'⊕y'");
          }
        }
      }
    }
  }

  return report;
}

LawReport check_compatibility(const FiniteOpcm& m) {
  LawReport report;
  const std::size_t n = m.size();

  bool zero_least = true;
  for (ElemIdx x = 0; x < n; ++x) {
    if (!m.leq_idx(m.zero_index(), x)) { zero_least = false; break; }
  }
  auto& hyp = report.add("zero-least-hypothesis");
  hyp.cases = n;
  if (!zero_least) {
    hyp.status = CheckStatus::hypothesis_unmet;
    hyp.note = "0 is not ⪯-least; compatibility consequences not applicable";
    return report;
  }

  auto& c1 = report.add("algebraic-implies-information-order");
  for (const auto& x : m.elements()) {
    for (const auto& y : m.elements()) {
      ++c1.cases;
      if (algebraic_leq(m, x, y) && !m.leq(x, y)) {
        c1.fail_with({x, y}, "x ⊑ y but not x ⪯ y");
      }
    }
  }

  auto& c2 = report.add("operands-below-combination");
  for (ElemIdx x = 0; x < n; ++x) {
    for (ElemIdx y = 0; y < n; ++y) {
      ++c2.cases;
      const auto xy = m.combine_idx(x, y);
      if (!xy) continue;
      if (!m.leq_idx(x, *xy)) {
        c2.fail_with({m.element(x), m.element(y)}, "x not ⪯ x⊕y");
      }
      if (!m.leq_idx(y, *xy)) {
        c2.fail_with({m.element(x), m.element(y)}, "y not ⪯ x⊕y");
      }
    }
  }
  return report;
}

Elem product_pair(const Elem& x1, const Elem& x2) { return pair_name(x1, x2); }

FiniteOpcm product(const FiniteOpcm& m1, const FiniteOpcm& m2) {
  ElemSet carrier;
  for (const auto& a : m1.elements()) {
    for (const auto& b : m2.elements()) carrier.push_back(product_pair(a, b));
  }
  std::vector<std::pair<Elem, Elem>> pairs;
  for (const auto& a1 : m1.elements()) {
    for (const auto& b1 : m2.elements()) {
      for (const auto& a2 : m1.elements()) {
        for (const auto& b2 : m2.elements()) {
          if (m1.leq(a1, a2) && m2.leq(b1, b2)) {
            pairs.emplace_back(product_pair(a1, b1), product_pair(a2, b2));
          }
        }
      }
    }
  }
  std::vector<FiniteOpcm::Triple> triples;
  for (const auto& a1 : m1.elements()) {
    for (const auto& b1 : m2.elements()) {
      for (const auto& a2 : m1.elements()) {
        for (const auto& b2 : m2.elements()) {
          const auto ca = m1.combine(a1, a2);
          const auto cb = m2.combine(b1, b2);
          if (ca && cb) {
            triples.emplace_back(product_pair(a1, b1), product_pair(a2, b2),
                                 product_pair(*ca, *cb));
          }
        }
      }
    }
  }
  return FiniteOpcm::make(
      Preorder::from_relation(canon_set(std::move(carrier)), pairs),
      product_pair(m1.zero(), m2.zero()), triples);
}

FiniteOpcm quotient_opcm(const FiniteOpcm& m) {
  const QuotientResult q = quotient(m.order());
  const std::size_t n = m.size();
  std::map<std::pair<Elem, Elem>, Elem> table;
  for (ElemIdx x = 0; x < n; ++x) {
    for (ElemIdx y = 0; y < n; ++y) {
      const auto xy = m.combine_idx(x, y);
      if (!xy) continue;
      const auto key = std::make_pair(q.projection.at(m.element(x)),
                                      q.projection.at(m.element(y)));
      const Elem value = q.projection.at(m.element(*xy));
      const auto [it, inserted] = table.emplace(key, value);
      if (!inserted && it->second != value) {
        throw structural_error(
            "quotient combine ill-defined: representatives of " + key.first +
            "⊕" + key.second + " disagree (" + it->second + " vs " + value +
            "); the input violates the monoid laws");
      }
    }
  }
  std::vector<FiniteOpcm::Triple> triples;
  for (const auto& [key, value] : table) {
    triples.emplace_back(key.first, key.second, value);
  }
  return FiniteOpcm::make(q.classes, q.projection.at(m.zero()), triples);
}

}  // namespace opcmlink
