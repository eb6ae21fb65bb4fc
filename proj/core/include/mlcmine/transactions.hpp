#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "mlcmine/hierarchy.hpp"
#include "mlcmine/item_code.hpp"
#include "mlcmine/itemset.hpp"

namespace mlcm {

/// One transaction: a TID and a duplicate-free set of terminal items, kept in
/// lexicographic order.
struct Transaction {
  std::uint64_t tid = 0;
  std::vector<ItemCode> items;

  friend bool operator==(const Transaction&, const Transaction&) = default;
};

/// An ordered list of transactions with unique TIDs. Immutable after load;
/// pruning returns a new value.
class TransactionDatabase {
 public:
  TransactionDatabase() = default;
  /// Validates TID uniqueness and normalizes each transaction's item list.
  explicit TransactionDatabase(std::vector<Transaction> transactions);

  /// Reads `TID<TAB>code,code,...` lines ('#' comments). Items must resolve
  /// to terminal nodes of `h`; duplicates within a record are dropped.
  /// Throws ParseError / ValidationError.
  static TransactionDatabase load(std::istream& in, const ConceptHierarchy& h);
  void save(std::ostream& out) const;

  /// Deterministic synthetic database: per-transaction item counts are
  /// Poisson(mean_items) clamped to [1, #terminals]; items are drawn
  /// uniformly without replacement from the terminal items of `h`.
  /// Throws ValidationError when `h` has no terminal items.
  static TransactionDatabase generate(const ConceptHierarchy& h, std::uint64_t count,
                                      double mean_items, std::uint64_t seed);

  const std::vector<Transaction>& transactions() const { return transactions_; }
  std::size_t size() const { return transactions_.size(); }
  bool empty() const { return transactions_.empty(); }

  auto begin() const { return transactions_.begin(); }
  auto end() const { return transactions_.end(); }

  friend bool operator==(const TransactionDatabase&, const TransactionDatabase&) = default;

 private:
  std::vector<Transaction> transactions_;
};

/// True iff some item of `t` equals `x` or has `x` as an ancestor.
bool transaction_supports(const ConceptHierarchy& h, const Transaction& t,
                          const ItemCode& x);

/// Number of transactions supporting every member of `s`.
std::uint32_t itemset_support(const ConceptHierarchy& h, const TransactionDatabase& db,
                              const Itemset& s);

/// Copy of `db` with every item equal to or descending from a neg item
/// removed. Transactions that become empty are kept (they support nothing),
/// so percentage thresholds stay comparable across pruned and unpruned runs.
TransactionDatabase prune_database(const ConceptHierarchy& h,
                                   const TransactionDatabase& db,
                                   std::span<const ItemCode> neg_items);

}  // namespace mlcm
