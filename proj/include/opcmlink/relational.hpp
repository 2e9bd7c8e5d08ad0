#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>

#include "opcmlink/grothendieck.hpp"

namespace opcmlink {

/// A single-parent generalization tree: an ordered list of levels with a
/// total parent map from each level's values to the previous level's.
/// Level 0 holds the single root.
class Hierarchy {
 public:
  /// parents[k] maps level-(k+1) values to level-k values;
  /// levels.size() == parents.size() + 1.
  static Hierarchy make(std::vector<std::string> levels,
                        std::vector<std::map<Elem, Elem>> parents);

  const std::vector<std::string>& levels() const { return levels_; }
  std::size_t level_count() const { return levels_.size(); }
  /// Index of a level name; numeric strings are taken as indices directly.
  std::size_t level_index(const std::string& level) const;
  ElemSet values_at(std::size_t level) const;
  const Elem& root() const;

  bool contains(const Elem& value) const;
  std::size_t level_of(const Elem& value) const;
  /// Ancestor at the given level, which must not exceed the value's own.
  Elem ancestor(const Elem& value, std::size_t level) const;

  /// Information order: x ⪯ y iff x is an ancestor-or-self of y.
  bool info_leq(const Elem& x, const Elem& y) const;

 private:
  std::vector<std::string> levels_;
  std::vector<std::map<Elem, Elem>> parents_;
  std::map<Elem, std::size_t> level_of_;
};

/// Hierarchy file: a JSON object
///   { attribute: { "levels": [names...], "parents": [{child: parent}...] } }
std::map<std::string, Hierarchy> load_hierarchies(std::istream& in);

/// The known attribute names with their finite value domains and optional
/// generalization hierarchies.
class AttributeSchema {
 public:
  static AttributeSchema make(std::map<std::string, ElemSet> domains,
                              std::map<std::string, Hierarchy> hierarchies = {});

  const std::vector<std::string>& attributes() const { return attrs_; }
  bool has_attribute(const std::string& a) const;
  const ElemSet& domain(const std::string& a) const;
  const Hierarchy* hierarchy(const std::string& a) const;

  /// Schema JSON: { "attributes": { name: [values...] },
  ///                "hierarchies": { ... as load_hierarchies ... } }
  static AttributeSchema load(std::istream& in);

  bool operator==(const AttributeSchema& other) const;

 private:
  std::vector<std::string> attrs_;  // sorted
  std::map<std::string, ElemSet> domains_;
  std::map<std::string, Hierarchy> hierarchies_;
};

using SchemaPtr = std::shared_ptr<const AttributeSchema>;

/// A tuple over a sorted attribute list: values aligned with the attributes.
using Tuple = std::vector<Elem>;

/// A non-empty set of total assignments over a subset of the schema's
/// attributes — the possibility representation of tabular data. Tuples are
/// canonicalized (sorted, deduplicated) and validated against the domains.
class Relation {
 public:
  static Relation make(SchemaPtr schema, std::vector<std::string> attrs,
                       std::vector<Tuple> tuples);

  const AttributeSchema& schema() const { return *schema_; }
  SchemaPtr schema_ptr() const { return schema_; }
  const std::vector<std::string>& attrs() const { return attrs_; }
  const std::vector<Tuple>& tuples() const { return tuples_; }
  std::size_t arity() const { return attrs_.size(); }
  std::size_t size() const { return tuples_.size(); }

  bool operator==(const Relation& other) const;

 private:
  SchemaPtr schema_;
  std::vector<std::string> attrs_;  // sorted
  std::vector<Tuple> tuples_;       // sorted, unique, non-empty
};

/// Restriction of every tuple to A ⊆ attrs; A may be empty (the unique
/// empty-tuple relation).
Relation project(const Relation& r, const std::vector<std::string>& a);

/// Padding with all value combinations of the new attributes — the preimage
/// of the projection, so it adds no information.
Relation extend(const Relation& r, const std::vector<std::string>& b);

/// Tuples over the union of the attribute sets whose restrictions lie in
/// both operands; hash-partitioned on the shared attributes; nullopt when
/// the match is empty (inconsistent data).
std::optional<Relation> natural_join(const Relation& r, const Relation& s);

/// The full relation over a set of attributes (every combination).
Relation full_relation(SchemaPtr schema, const std::vector<std::string>& attrs);

/// Every tuple's value of `attr` replaced by its level-`level` ancestor; the
/// result lives over a schema whose domain for `attr` is that level's value
/// set.
Relation generalize(const Relation& r, const std::string& attr,
                    std::size_t level);

/// "(v1,v2,...)" and "{(..),(..)}" — the carrier spellings used by the
/// relational fibers.
Elem tuple_name(const Tuple& t);
Elem relation_set_name(const Relation& r);

/// All relations over the given attribute subset, in fiber carrier order.
std::vector<Relation> enumerate_relations(SchemaPtr schema,
                                          const std::vector<std::string>& attrs,
                                          std::size_t cap = 0);

/// The indexed family (ℙ(𝔄), ⊆, ∅, ∪) ↦ possibility of Φ_A with padding
/// transitions; passes check_functor.
IndexedFamily relational_family(SchemaPtr schema, std::size_t cap = 0);

/// The central derived-operation equality: the completion's ⊞ coincides with
/// natural join — same definedness, exactly equal results — over every pair
/// of completion elements.
LawReport check_join_is_boxplus(SchemaPtr schema, std::size_t cap = 0);

}  // namespace opcmlink
