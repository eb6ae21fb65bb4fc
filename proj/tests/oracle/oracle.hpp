#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mlcmine/constraint.hpp"
#include "mlcmine/hierarchy.hpp"
#include "mlcmine/itemset.hpp"
#include "mlcmine/transactions.hpp"

// Brute-force reference used only by tests. It enumerates every k-subset of
// the level-l items and counts supports by scanning raw transaction items,
// sharing no candidate generation, indexing or pruning logic with the miner.
namespace mlcm::oracle {

inline constexpr std::uint64_t kDefaultComboLimit = 1'000'000;

/// All frequent k-itemsets at `level`, canonical order, by exhaustive
/// enumeration. Throws ValidationError when C(#items, k) exceeds `limit`.
std::vector<FrequentItemset> oracle_frequent(const ConceptHierarchy& h,
                                             const TransactionDatabase& db, int level,
                                             int k, std::uint32_t minsup,
                                             std::uint64_t limit = kDefaultComboLimit);

/// oracle_frequent filtered through evaluate_constraint; nullopt passes
/// everything.
std::vector<FrequentItemset> oracle_filtered(const ConceptHierarchy& h,
                                             const TransactionDatabase& db, int level,
                                             int k, std::uint32_t minsup,
                                             const std::optional<Constraint>& ct,
                                             std::uint64_t limit = kDefaultComboLimit);

}  // namespace mlcm::oracle
