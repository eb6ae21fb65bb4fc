#include "mlcmine/hierarchy.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "mlcmine/errors.hpp"

namespace mlcm {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

void ConceptHierarchy::index_nodes() {
  std::sort(nodes_.begin(), nodes_.end());
  max_level_ = 0;
  max_ordinal_ = 0;
  code_by_label_.clear();
  for (const ItemCode& code : nodes_) {
    max_level_ = std::max(max_level_, code.level());
    for (std::uint32_t ordinal : code.path()) {
      max_ordinal_ = std::max(max_ordinal_, ordinal);
    }
  }
  for (const auto& [code, label] : labels_) {
    code_by_label_.emplace(label, code);
  }
}

ConceptHierarchy ConceptHierarchy::from_edges(
    std::span<const std::pair<std::string, std::string>> edges) {
  ConceptHierarchy h;
  std::map<std::string, ItemCode, std::less<>> code_of;
  std::map<ItemCode, std::uint32_t> child_count;

  for (const auto& [parent_label, child_label] : edges) {
    ItemCode parent;  // empty path = virtual root
    if (parent_label != kRootToken) {
      auto it = code_of.find(parent_label);
      if (it == code_of.end()) {
        throw ValidationError("unknown parent label '" + parent_label +
                              "': parents must be ROOT or a previously introduced item");
      }
      parent = it->second;
    }
    if (auto it = code_of.find(child_label); it != code_of.end()) {
      const ItemCode& existing = it->second;
      const bool same_parent = existing.level() == parent.level() + 1 &&
                               parent.is_self_or_ancestor_of(existing);
      if (same_parent) {
        throw ValidationError("duplicate child label '" + child_label +
                              "' under parent '" + parent_label + "'");
      }
      throw ValidationError("item '" + child_label +
                            "' has two distinct parents; multi-parent taxonomies "
                            "are not supported");
    }
    const std::uint32_t ordinal = ++child_count[parent];
    ItemCode code = parent.child(ordinal);
    code_of.emplace(child_label, code);
    h.labels_.emplace(code, child_label);
    h.nodes_.push_back(std::move(code));
  }
  h.index_nodes();
  return h;
}

ConceptHierarchy ConceptHierarchy::load(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    const std::size_t tab = view.find('\t');
    if (tab == std::string_view::npos) {
      throw ParseError("hierarchy line " + std::to_string(line_no) +
                       ": expected 'parent<TAB>child'");
    }
    std::string_view parent = trim(view.substr(0, tab));
    std::string_view child = trim(view.substr(tab + 1));
    if (parent.empty() || child.empty()) {
      throw ParseError("hierarchy line " + std::to_string(line_no) +
                       ": empty parent or child label");
    }
    edges.emplace_back(std::string(parent), std::string(child));
  }
  return from_edges(edges);
}

void ConceptHierarchy::save(std::ostream& out) const {
  for (const ItemCode& code : nodes_) {
    const std::string* label = label_of(code);
    const std::string child = label ? *label : code.dotted();
    if (code.level() == 1) {
      out << kRootToken << '\t' << child << '\n';
    } else {
      const ItemCode parent = code.parent();
      const std::string* parent_label = label_of(parent);
      out << (parent_label ? *parent_label : parent.dotted()) << '\t' << child << '\n';
    }
  }
}

ConceptHierarchy ConceptHierarchy::generate(const HierarchyGenParams& params) {
  if (params.roots < 1 || params.levels < 1 || params.fanout_min < 1 ||
      params.fanout_max < params.fanout_min) {
    throw ValidationError("hierarchy generation requires roots >= 1, levels >= 1 and "
                          "1 <= fanout_min <= fanout_max");
  }
  std::mt19937_64 rng(params.seed);
  std::uniform_int_distribution<std::uint32_t> fanout(params.fanout_min,
                                                      params.fanout_max);
  ConceptHierarchy h;
  std::vector<ItemCode> frontier;
  frontier.reserve(params.roots);
  for (std::uint32_t r = 1; r <= params.roots; ++r) {
    frontier.push_back(ItemCode({r}));
  }
  for (int level = 1; level <= params.levels; ++level) {
    std::vector<ItemCode> next;
    for (ItemCode& code : frontier) {
      if (level < params.levels) {
        const std::uint32_t children = fanout(rng);
        for (std::uint32_t c = 1; c <= children; ++c) {
          next.push_back(code.child(c));
        }
      }
      h.labels_.emplace(code, code.dotted());
      h.nodes_.push_back(std::move(code));
    }
    frontier = std::move(next);
  }
  h.index_nodes();
  return h;
}

bool ConceptHierarchy::contains(const ItemCode& code) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), code);
}

std::vector<ItemCode> ConceptHierarchy::descendants_of(const ItemCode& code) const {
  if (!contains(code)) {
    throw ValidationError("item " + code.dotted() + " is not in the hierarchy");
  }
  // Descendants of a code sort contiguously right after it.
  std::vector<ItemCode> out;
  auto it = std::upper_bound(nodes_.begin(), nodes_.end(), code);
  while (it != nodes_.end() && code.is_ancestor_of(*it)) {
    out.push_back(*it);
    ++it;
  }
  return out;
}

bool ConceptHierarchy::is_self_or_descendant(const ItemCode& ancestor,
                                             const ItemCode& node) const {
  if (!contains(ancestor)) {
    throw ValidationError("item " + ancestor.dotted() + " is not in the hierarchy");
  }
  if (!contains(node)) {
    throw ValidationError("item " + node.dotted() + " is not in the hierarchy");
  }
  return ancestor.is_self_or_ancestor_of(node);
}

ConceptHierarchy ConceptHierarchy::pruned(std::span<const ItemCode> neg_items) const {
  for (const ItemCode& g : neg_items) {
    if (!contains(g)) {
      throw ValidationError("cannot prune unknown item " + g.dotted());
    }
  }
  auto removed = [&](const ItemCode& code) {
    return std::any_of(neg_items.begin(), neg_items.end(), [&](const ItemCode& g) {
      return g.is_self_or_ancestor_of(code);
    });
  };
  ConceptHierarchy out;
  out.max_level_ = max_level_;  // level numbering survives pruning
  for (const ItemCode& code : nodes_) {
    if (removed(code)) continue;
    if (auto it = labels_.find(code); it != labels_.end()) {
      out.labels_.emplace(*it);
    }
    out.nodes_.push_back(code);
  }
  const int original_max_level = max_level_;
  out.index_nodes();
  out.max_level_ = original_max_level;
  return out;
}

std::vector<ItemCode> ConceptHierarchy::items_at_level(int level) const {
  if (level < 1 || level > max_level_) {
    throw ValidationError("level " + std::to_string(level) + " is outside 1.." +
                          std::to_string(max_level_));
  }
  std::vector<ItemCode> out;
  for (const ItemCode& code : nodes_) {
    if (code.level() == level) out.push_back(code);
  }
  return out;
}

std::vector<ItemCode> ConceptHierarchy::terminal_items() const {
  if (max_level_ == 0) return {};
  return items_at_level(max_level_);
}

ItemCode ConceptHierarchy::resolve(std::string_view token) const {
  ItemCode code;
  bool parsed = false;
  try {
    code = ItemCode::parse(token, /*digits_as_path=*/max_ordinal_ <= 9);
    parsed = true;
  } catch (const ParseError&) {
    // Not a code form; fall through to label lookup.
  }
  if (parsed && contains(code)) return code;
  if (auto it = code_by_label_.find(token); it != code_by_label_.end()) {
    return it->second;
  }
  throw ValidationError("unknown item '" + std::string(token) + "'");
}

const std::string* ConceptHierarchy::label_of(const ItemCode& code) const {
  auto it = labels_.find(code);
  return it == labels_.end() ? nullptr : &it->second;
}

}  // namespace mlcm
