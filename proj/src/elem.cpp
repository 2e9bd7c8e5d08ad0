#include "opcmlink/elem.hpp"

#include <algorithm>

#include "opcmlink/errors.hpp"

namespace opcmlink {

ElemSet canon_set(ElemSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool set_contains(const ElemSet& s, const Elem& x) {
  return std::binary_search(s.begin(), s.end(), x);
}

ElemSet set_union(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElemSet set_intersect(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

bool set_subset(const ElemSet& sub, const ElemSet& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

std::string display_name(const Elem& e) { return e.empty() ? "ε" : e; }

Elem set_name(const ElemSet& s) {
  Elem out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += s[i];
  }
  out += "}";
  return out;
}

Elem pair_name(const Elem& a, const Elem& b) { return "(" + a + "," + b + ")"; }

void validate_elem(const Elem& e) {
  if (e.find('\t') != Elem::npos || e.find('\n') != Elem::npos ||
      e.find('\r') != Elem::npos) {
    throw structural_error("element id contains tab or newline: '" + e + "'");
  }
}

}  // namespace opcmlink
