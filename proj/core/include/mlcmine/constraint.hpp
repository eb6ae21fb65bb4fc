#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mlcmine/hierarchy.hpp"
#include "mlcmine/item_code.hpp"
#include "mlcmine/itemset.hpp"

namespace mlcm {

/// One element of a conjunction: an item, optionally negated.
struct Literal {
  ItemCode item;
  bool negated = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

/// An existence constraint in disjunctive normal form: a disjunction of
/// conjunctions of literals. Hierarchy-aware semantics:
///   positive literal e  - satisfied when the itemset contains e.item or one
///                         of its descendants;
///   negative literal e  - satisfied when the itemset contains neither
///                         e.item nor any of its descendants.
/// An itemset satisfies the constraint when every literal of at least one
/// conjunction is satisfied.
class Constraint {
 public:
  using Conjunction = std::vector<Literal>;

  /// Validates: at least one conjunction, no empty conjunction, and no item
  /// carrying both signs within one conjunction. Throws ParseError.
  explicit Constraint(std::vector<Conjunction> conjunctions);

  const std::vector<Conjunction>& conjunctions() const { return conjunctions_; }

  /// Canonical text in the input grammar, with dotted item codes:
  /// conjunctions joined by OR, literals by AND, multi-literal conjunctions
  /// parenthesized when the constraint has several. parse_constraint of the
  /// result reproduces the constraint exactly.
  std::string to_string() const;

  friend bool operator==(const Constraint&, const Constraint&) = default;

 private:
  std::vector<Conjunction> conjunctions_;
};

/// A constraint split for pre-pruning: `neg` lists the items excluded from
/// mining (each interpreted as a negated literal conjoined with everything),
/// `aff` is a positive-only DNF applied as a post-filter. An absent `aff`
/// means unconstrained: every frequent itemset passes.
struct SplitConstraint {
  std::vector<ItemCode> neg;
  std::optional<Constraint> aff;
};

/// Parses the constraint grammar (keywords case-insensitive):
///   constraint := conj ( OR conj )*
///   conj       := lit ( AND lit )*
///   lit        := [ NOT ] item | '(' constraint ')'
/// Precedence NOT > AND > OR. Parentheses are accepted only where the result
/// remains a disjunction of conjunctions; an OR group under an AND is
/// rejected. Item tokens resolve against `h` (codes or labels).
Constraint parse_constraint(std::string_view text, const ConceptHierarchy& h);

/// Parses the split form. `neg_text` is a comma- or AND-separated list of
/// `NOT item` entries (bare items are read as negated); empty means no
/// pruning. `aff_text` parses via parse_constraint and must contain no NOT;
/// empty means unconstrained. Rejects an aff literal equal to or descending
/// from a neg item (unsatisfiable after pruning).
SplitConstraint parse_split_constraint(std::string_view neg_text,
                                       std::string_view aff_text,
                                       const ConceptHierarchy& h);

/// Canonical text of the neg part: `NOT g1 AND NOT g2 AND ...`.
std::string neg_to_string(std::span<const ItemCode> neg);

/// The flat DNF equivalent of a split constraint: every `NOT g` appended to
/// each conjunction of aff. Unconstrained aff with a non-empty neg yields the
/// single all-negative conjunction; nullopt when both parts are empty.
std::optional<Constraint> split_to_flat(const SplitConstraint& sc);

bool evaluate_literal(const ConceptHierarchy& h, const Itemset& s, const Literal& e);
bool evaluate_constraint(const ConceptHierarchy& h, const Itemset& s,
                         const Constraint& ct);

/// Positive-only evaluation for the split form's aff part; nullopt (the
/// unconstrained sentinel) accepts everything. Precondition: no literal of
/// `aff` is negated.
bool evaluate_affirmation(const ConceptHierarchy& h, const Itemset& s,
                          const std::optional<Constraint>& aff);

/// The subsequence of `sets` whose itemsets satisfy `ct`; order and supports
/// are preserved.
std::vector<FrequentItemset> filter_frequent(const ConceptHierarchy& h,
                                             std::span<const FrequentItemset> sets,
                                             const Constraint& ct);

}  // namespace mlcm
