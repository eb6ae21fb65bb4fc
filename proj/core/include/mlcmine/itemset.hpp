#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "mlcmine/item_code.hpp"

namespace mlcm {

/// A non-empty, duplicate-free set of item codes, all at the same abstraction
/// level, stored in lexicographic path order.
class Itemset {
 public:
  /// Normalizes (sorts, removes duplicates) and validates. Throws
  /// ValidationError when empty or mixing levels.
  explicit Itemset(std::vector<ItemCode> items);
  Itemset(std::initializer_list<ItemCode> items);

  const std::vector<ItemCode>& items() const { return items_; }
  int level() const { return level_; }
  int size() const { return static_cast<int>(items_.size()); }

  bool contains(const ItemCode& code) const;

  /// Dotted members joined with '+', e.g. "1.1+2.1".
  std::string dotted() const;
  /// Starred members joined with '+', e.g. "11*+21*".
  std::string starred(int max_level) const;

  friend auto operator<=>(const Itemset& a, const Itemset& b) {
    return a.items_ <=> b.items_;
  }
  friend bool operator==(const Itemset& a, const Itemset& b) {
    return a.items_ == b.items_;
  }

 private:
  std::vector<ItemCode> items_;
  int level_ = 0;
};

/// An itemset together with its support count.
struct FrequentItemset {
  Itemset itemset;
  std::uint32_t support = 0;

  friend bool operator==(const FrequentItemset&, const FrequentItemset&) = default;
};

}  // namespace mlcm
