#include "mlcmine/itemset.hpp"

#include <algorithm>
#include <sstream>

#include "mlcmine/errors.hpp"

namespace mlcm {

Itemset::Itemset(std::vector<ItemCode> items) : items_(std::move(items)) {
  if (items_.empty()) throw ValidationError("itemsets are non-empty");
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  level_ = items_.front().level();
  for (const ItemCode& code : items_) {
    if (code.level() != level_) {
      throw ValidationError("itemset mixes abstraction levels: " +
                            items_.front().dotted() + " vs " + code.dotted());
    }
  }
}

Itemset::Itemset(std::initializer_list<ItemCode> items)
    : Itemset(std::vector<ItemCode>(items)) {}

bool Itemset::contains(const ItemCode& code) const {
  return std::binary_search(items_.begin(), items_.end(), code);
}

std::string Itemset::dotted() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (i > 0) out << '+';
    out << items_[i].dotted();
  }
  return out.str();
}

std::string Itemset::starred(int max_level) const {
  std::ostringstream out;
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (i > 0) out << '+';
    out << items_[i].starred(max_level);
  }
  return out.str();
}

}  // namespace mlcm
