#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mlcmine/item_code.hpp"

namespace mlcm {

/// Parameters for synthetic taxonomy generation. Every internal node gets a
/// child count drawn uniformly from [fanout_min, fanout_max]; every branch
/// reaches depth `levels` exactly.
struct HierarchyGenParams {
  std::uint32_t roots = 10;
  int levels = 3;
  std::uint32_t fanout_min = 2;
  std::uint32_t fanout_max = 3;
  std::uint64_t seed = 0;
};

/// A concept hierarchy (taxonomy): a rooted forest of items identified by
/// positional codes. The virtual root sits at level 0 and is never a node.
///
/// Immutable after construction; pruning returns a new value. Node ordinals
/// are never renumbered, so codes remain comparable across pruned and
/// unpruned copies of the same taxonomy.
class ConceptHierarchy {
 public:
  /// The literal parent token that introduces a level-1 item in edge lists
  /// and hierarchy files.
  static constexpr std::string_view kRootToken = "ROOT";

  ConceptHierarchy() = default;

  /// Builds from (parent label, child label) edges. A parent must be
  /// kRootToken or a label introduced by an earlier edge. Codes are assigned
  /// by child order of first appearance. Throws ValidationError on a
  /// duplicate child label under one parent, a label with two parents, or an
  /// unknown parent label.
  static ConceptHierarchy from_edges(
      std::span<const std::pair<std::string, std::string>> edges);

  /// Reads the tab-separated edge format (`parent<TAB>child`, '#' comments).
  static ConceptHierarchy load(std::istream& in);
  void save(std::ostream& out) const;

  /// Deterministic synthetic taxonomy; nodes are labeled with their dotted
  /// codes. Throws ValidationError on non-positive parameters.
  static ConceptHierarchy generate(const HierarchyGenParams& params);

  bool empty() const { return nodes_.empty(); }
  std::size_t node_count() const { return nodes_.size(); }
  int max_level() const { return max_level_; }

  /// All nodes in lexicographic path order.
  const std::vector<ItemCode>& nodes() const { return nodes_; }

  bool contains(const ItemCode& code) const;

  /// Strict descendants of `code`, in lexicographic order; empty for a
  /// terminal item. Throws ValidationError if `code` is not a node.
  std::vector<ItemCode> descendants_of(const ItemCode& code) const;

  /// True iff ancestor == node or ancestor's path is a proper prefix of
  /// node's. Both codes must be nodes.
  bool is_self_or_descendant(const ItemCode& ancestor, const ItemCode& node) const;

  /// Copy with every item of `neg_items` and all its descendants removed.
  /// Surviving codes and max_level are unchanged. Throws ValidationError if
  /// a neg item is not a node.
  ConceptHierarchy pruned(std::span<const ItemCode> neg_items) const;

  /// All codes of length `level`, in lexicographic order. Throws
  /// ValidationError when level is outside 1..max_level.
  std::vector<ItemCode> items_at_level(int level) const;

  /// Items at the deepest level; the only items transactions may contain.
  std::vector<ItemCode> terminal_items() const;

  /// Largest child ordinal appearing in any code. 0 for an empty hierarchy.
  std::uint32_t max_ordinal() const { return max_ordinal_; }

  /// Resolves an item token: dotted, digit, or starred code form (digit form
  /// applies only while max_ordinal() <= 9), else a display label. Throws
  /// ValidationError when the token names nothing in this hierarchy.
  ItemCode resolve(std::string_view token) const;

  const std::string* label_of(const ItemCode& code) const;

  /// Starred form when representable, dotted otherwise.
  std::string display(const ItemCode& code) const { return code.starred(max_level_); }

  bool operator==(const ConceptHierarchy& other) const = default;

 private:
  void index_nodes();  // rebuilds derived fields from nodes_ + labels_

  std::vector<ItemCode> nodes_;  // sorted, prefix-closed
  std::map<ItemCode, std::string> labels_;
  std::map<std::string, ItemCode, std::less<>> code_by_label_;
  int max_level_ = 0;
  std::uint32_t max_ordinal_ = 0;
};

}  // namespace mlcm
