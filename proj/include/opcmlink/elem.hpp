#pragma once

#include <string>
#include <vector>

namespace opcmlink {

/// Opaque element identifier. The empty string is a legal id (it names the
/// empty prefix code); ids may not contain tabs or newlines.
using Elem = std::string;

using ElemIdx = std::size_t;

/// Canonical subset representation: sorted, deduplicated.
using ElemSet = std::vector<Elem>;

/// Sort + dedupe.
ElemSet canon_set(ElemSet s);

bool set_contains(const ElemSet& s, const Elem& x);

ElemSet set_union(const ElemSet& a, const ElemSet& b);
ElemSet set_intersect(const ElemSet& a, const ElemSet& b);
bool set_subset(const ElemSet& sub, const ElemSet& super);

/// Human-facing spelling: the empty id prints as ε.
std::string display_name(const Elem& e);

/// "{x,y,z}" with members sorted; used to name powerset carrier elements.
Elem set_name(const ElemSet& s);

/// "(x,y)" pair spelling; used to name product carrier elements.
Elem pair_name(const Elem& a, const Elem& b);

/// Throws structural_error if the id contains a tab or newline.
void validate_elem(const Elem& e);

}  // namespace opcmlink
