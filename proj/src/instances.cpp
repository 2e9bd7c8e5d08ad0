#include "opcmlink/instances.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <random>
#include <set>

#include "opcmlink/errors.hpp"

namespace opcmlink {

namespace {

bool is_prefix(const Elem& p, const Elem& q) {
  return p.size() <= q.size() && q.compare(0, p.size(), p) == 0;
}

std::size_t effective_cap(std::size_t cap) { return cap ? cap : max_carrier(); }

/// All non-empty subsets of a sorted base, in a deterministic order:
/// by size, then lexicographically.
std::vector<ElemSet> nonempty_subsets(const ElemSet& base, std::size_t cap,
                                      const char* what) {
  if (base.size() >= 8 * sizeof(std::size_t) ||
      ((std::size_t{1} << base.size()) - 1) > cap) {
    throw resource_error(std::string(what) + ": 2^" +
                         std::to_string(base.size()) +
                         "-1 subsets exceed cap " + std::to_string(cap));
  }
  std::vector<ElemSet> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << base.size()); ++mask) {
    ElemSet s;
    for (std::size_t i = 0; i < base.size(); ++i) {
      if (mask & (std::size_t{1} << i)) s.push_back(base[i]);
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const ElemSet& a, const ElemSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace

PrefixCodeSet PrefixCodeSet::make(ElemSet codes, std::vector<std::size_t> levels) {
  PrefixCodeSet p;
  codes.push_back("");  // the empty code is always present
  p.codes_ = canon_set(std::move(codes));
  for (const auto& c : p.codes_) validate_elem(c);
  if (levels.empty()) {
    for (const auto& c : p.codes_) levels.push_back(c.size());
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  p.levels_ = std::move(levels);
  for (const auto& c : p.codes_) {
    if (!std::binary_search(p.levels_.begin(), p.levels_.end(), c.size())) {
      throw structural_error("code '" + display_name(c) +
                             "' is not at a declared level");
    }
    for (const std::size_t lvl : p.levels_) {
      if (lvl >= c.size()) break;
      if (!set_contains(p.codes_, c.substr(0, lvl))) {
        throw structural_error("prefix closure fails: '" + c.substr(0, lvl) +
                               "' (level " + std::to_string(lvl) +
                               " prefix of '" + c + "') is missing");
      }
    }
  }
  return p;
}

PrefixCodeSet PrefixCodeSet::load(std::istream& in) {
  ElemSet codes;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) codes.push_back(line);
  }
  return make(std::move(codes));
}

ElemSet PrefixCodeSet::leaves() const {
  ElemSet out;
  const std::size_t max = levels_.back();
  for (const auto& c : codes_) {
    if (c.size() == max) out.push_back(c);
  }
  return out;
}

ElemSet PrefixCodeSet::realization(const Elem& p) const {
  if (!set_contains(codes_, p)) {
    throw structural_error("unknown code: '" + display_name(p) + "'");
  }
  ElemSet out;
  for (const auto& leaf : leaves()) {
    if (is_prefix(p, leaf)) out.push_back(leaf);
  }
  return out;
}

FiniteOpcm flat(const ElemSet& x) {
  if (x.empty()) throw precondition_error("flat algebra over an empty set");
  if (set_contains(canon_set(x), kUnknown)) {
    throw structural_error("flat base collides with the bottom element " + kUnknown);
  }
  ElemSet carrier = canon_set(x);
  carrier.push_back(kUnknown);
  std::vector<std::pair<Elem, Elem>> pairs;
  std::vector<FiniteOpcm::Triple> triples;
  for (const auto& a : carrier) {
    pairs.emplace_back(a, a);
    triples.emplace_back(a, a, a);
    if (a != kUnknown) {
      pairs.emplace_back(kUnknown, a);
      triples.emplace_back(kUnknown, a, a);
      triples.emplace_back(a, kUnknown, a);
    }
  }
  return FiniteOpcm::make(
      Preorder::from_relation(canon_set(std::move(carrier)), pairs), kUnknown,
      triples);
}

FiniteOpcm prefix_opcm(const PrefixCodeSet& codes) {
  const ElemSet& carrier = codes.codes();
  std::vector<std::pair<Elem, Elem>> pairs;
  std::vector<FiniteOpcm::Triple> triples;
  for (const auto& a : carrier) {
    for (const auto& b : carrier) {
      if (is_prefix(a, b)) {
        pairs.emplace_back(a, b);
        triples.emplace_back(a, b, b);  // the longer code
        if (a != b) triples.emplace_back(b, a, b);
      }
    }
  }
  return FiniteOpcm::make(Preorder::from_relation(carrier, pairs), "", triples);
}

FiniteOpcm possibility_of_set(const ElemSet& x, std::size_t cap) {
  if (x.empty()) throw precondition_error("possibility over an empty set");
  const ElemSet base = canon_set(x);
  const auto subsets =
      nonempty_subsets(base, effective_cap(cap), "possibility_of_set");

  ElemSet carrier;
  for (const auto& s : subsets) carrier.push_back(set_name(s));
  std::vector<std::pair<Elem, Elem>> pairs;
  std::vector<FiniteOpcm::Triple> triples;
  for (const auto& s : subsets) {
    for (const auto& t : subsets) {
      if (set_subset(t, s)) pairs.emplace_back(set_name(s), set_name(t));
      const ElemSet meet = set_intersect(s, t);
      if (!meet.empty()) {
        triples.emplace_back(set_name(s), set_name(t), set_name(meet));
      }
    }
  }
  return FiniteOpcm::make(
      Preorder::from_relation(canon_set(std::move(carrier)), pairs),
      set_name(base), triples);
}

bool check_downward_closed(const FiniteOpcm& m) {
  return check_downward_closed_report(m).ok();
}

LawReport check_downward_closed_report(const FiniteOpcm& m) {
  LawReport report;
  auto& c = report.add("oplus-downward-closed");
  const std::size_t n = m.size();
  for (ElemIdx x = 0; x < n; ++x) {
    for (ElemIdx x2 = 0; x2 < n; ++x2) {
      if (!m.leq_idx(x, x2)) continue;
      for (ElemIdx y = 0; y < n; ++y) {
        ++c.cases;
        if (m.defined_idx(x2, y) && !m.defined_idx(x, y)) {
          c.fail_with({m.element(x), m.element(x2), m.element(y)},
                      "x ⪯ x' and x'⊥y but not x⊥y");
        }
      }
    }
  }
  return report;
}

std::optional<ElemSet> possibility_combine(const FiniteOpcm& m, const ElemSet& p,
                                           const ElemSet& q) {
  if (p.empty() || q.empty()) {
    throw precondition_error("possibility combine over an empty subset");
  }
  ElemSet out;
  for (const auto& x : p) {
    for (const auto& y : q) {
      if (const auto r = m.combine(x, y)) out.push_back(*r);
    }
  }
  if (out.empty()) return std::nullopt;
  return canon_set(std::move(out));
}

namespace {

/// Grow `have` to its combine closure, starting from the given frontier.
/// Throws resource_error as soon as the closure outgrows the cap.
void close_under_combine(const FiniteOpcm& m, std::set<ElemSet>& have,
                         std::vector<ElemSet> frontier, std::size_t cap) {
  while (!frontier.empty()) {
    std::vector<ElemSet> next;
    const std::vector<ElemSet> snapshot(have.begin(), have.end());
    for (const auto& p : frontier) {
      for (const auto& q : snapshot) {
        for (const auto r : {possibility_combine(m, p, q),
                             possibility_combine(m, q, p)}) {
          if (r && have.insert(*r).second) {
            next.push_back(*r);
            if (have.size() > cap) {
              throw resource_error(
                  "possibility_of_opcm: combine closure exceeds cap " +
                  std::to_string(cap));
            }
          }
        }
      }
    }
    frontier = std::move(next);
  }
}

}  // namespace

FiniteOpcm possibility_of_opcm(const FiniteOpcm& m, std::size_t cap) {
  const auto closure_report = check_downward_closed_report(m);
  if (!closure_report.ok()) {
    throw precondition_error(
        "possibility_of_opcm requires a ⊕-downward-closed carrier:\n" +
        closure_report.to_text());
  }
  const std::size_t limit = effective_cap(cap);

  std::vector<ElemSet> subsets;
  if (m.size() <= 5) {
    subsets = nonempty_subsets(m.elements(), limit, "possibility_of_opcm");
  } else {
    // Sampled carrier: singletons and {0} always, then pairs and triples in a
    // deterministic shuffled order, each kept only if the combine closure
    // still fits the cap.
    std::vector<ElemSet> seeds;
    seeds.push_back({m.zero()});
    for (const auto& e : m.elements()) seeds.push_back({e});
    std::vector<ElemSet> candidates;
    const ElemSet& es = m.elements();
    for (std::size_t i = 0; i < es.size(); ++i) {
      for (std::size_t j = i + 1; j < es.size(); ++j) {
        candidates.push_back(canon_set({es[i], es[j]}));
        for (std::size_t k = j + 1; k < es.size(); ++k) {
          candidates.push_back(canon_set({es[i], es[j], es[k]}));
        }
      }
    }
    std::mt19937 rng(0x9e3779b9);
    std::shuffle(candidates.begin(), candidates.end(), rng);
    std::vector<ElemSet> closed = close_under_combine(m, seeds, limit);
    for (const auto& c : candidates) {
      std::vector<ElemSet> trial = closed;
      trial.push_back(c);
      try {
        trial = close_under_combine(m, trial, limit);
      } catch (const resource_error&) {
        continue;
      }
      closed = std::move(trial);
    }
    subsets = std::move(closed);
  }

  ElemSet carrier;
  std::map<ElemSet, Elem> names;
  for (const auto& s : subsets) {
    names[s] = set_name(s);
    carrier.push_back(names[s]);
  }
  std::vector<std::pair<Elem, Elem>> pairs;
  std::vector<FiniteOpcm::Triple> triples;
  for (const auto& p : subsets) {
    for (const auto& q : subsets) {
      if (lift(m.order(), Lift::sharp, p, q)) {
        pairs.emplace_back(names.at(p), names.at(q));
      }
      if (const auto r = possibility_combine(m, p, q)) {
        const auto it = names.find(*r);
        if (it == names.end()) {
          throw structural_error(
              "possibility_of_opcm: carrier not closed under combine");
        }
        triples.emplace_back(names.at(p), names.at(q), it->second);
      }
    }
  }
  return FiniteOpcm::make(
      Preorder::from_relation(canon_set(std::move(carrier)), pairs),
      set_name({m.zero()}), triples);
}

}  // namespace opcmlink
