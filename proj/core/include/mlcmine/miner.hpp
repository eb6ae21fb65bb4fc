#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mlcmine/constraint.hpp"
#include "mlcmine/hierarchy.hpp"
#include "mlcmine/itemset.hpp"
#include "mlcmine/transactions.hpp"

namespace mlcm {

/// Per-level minimum support thresholds, stored as absolute transaction
/// counts. Thresholds need not decrease with depth.
class MinSupTable {
 public:
  /// Absolute thresholds, one per level starting at level 1; each must be
  /// >= 1.
  static MinSupTable absolute(std::vector<std::uint32_t> thresholds);

  /// Parses entries like "5" (absolute) or "30%" (percentage of `db_size`,
  /// rounded up and clamped to at least 1).
  static MinSupTable parse(std::span<const std::string> entries,
                           std::uint64_t db_size);

  std::uint32_t at(int level) const;
  int levels() const { return static_cast<int>(thresholds_.size()); }
  const std::vector<std::uint32_t>& values() const { return thresholds_; }

 private:
  std::vector<std::uint32_t> thresholds_;
};

/// One (level, k) pass of the level-wise search.
struct MiningPass {
  int k = 0;
  /// Candidates whose supports were counted in this pass.
  std::uint64_t candidates = 0;
  std::vector<FrequentItemset> frequent;  // L[l,k]
  std::vector<FrequentItemset> filtered;  // L[l,k]^CT

  friend bool operator==(const MiningPass&, const MiningPass&) = default;
};

struct LevelResult {
  int level = 0;
  std::uint32_t minsup = 0;
  std::vector<MiningPass> passes;
  /// Union over k of the filtered lists, ordered by k then lexicographically.
  std::vector<FrequentItemset> union_filtered;

  friend bool operator==(const LevelResult&, const LevelResult&) = default;
};

/// Machine-independent work counters. `support_computations` is the number
/// of support increments performed (one per candidate-transaction hit),
/// the quantity the pre-pruning strategy exists to reduce.
struct MiningCounters {
  std::uint64_t candidates_generated = 0;
  std::uint64_t support_computations = 0;

  friend bool operator==(const MiningCounters&, const MiningCounters&) = default;
};

struct MiningResult {
  std::string algorithm;  // "basic", "tag" or "prune"
  /// True for the test-and-generate strategy, which is documented as
  /// incomplete: a failing k-itemset can still seed a satisfying
  /// (k+1)-itemset, so filtering candidates loses results.
  bool incomplete = false;
  int max_level = 0;
  std::uint64_t transaction_count = 0;
  std::vector<std::uint32_t> minsup;
  std::string constraint_text;          // flat constraint (basic/tag)
  std::string neg_text;                 // split constraint (prune)
  std::string aff_text;
  MiningCounters counters;
  double elapsed_ms = 0.0;
  std::vector<LevelResult> levels;

  const MiningPass* pass(int level, int k) const;
  std::span<const FrequentItemset> frequent(int level, int k) const;
  std::span<const FrequentItemset> filtered(int level, int k) const;
};

/// Frequent level-l singletons in canonical order.
std::vector<FrequentItemset> get_1_itemsets(const ConceptHierarchy& h,
                                            const TransactionDatabase& db, int level,
                                            const MinSupTable& minsup);

/// Apriori candidate generation: joins `prev` (frequent (k-1)-itemsets in
/// canonical order) on the first k-2 items, then keeps a candidate only if
/// all of its (k-1)-subsets appear in `prev`. Throws ValidationError when
/// `prev` mixes levels or sizes.
std::vector<Itemset> get_candidate_set(std::span<const Itemset> prev);

/// The candidates supported by `t` (every member matched by
/// transaction_supports), in input order.
std::vector<Itemset> get_subsets(std::span<const Itemset> candidates,
                                 const ConceptHierarchy& h, const Transaction& t);

/// Scenario 1: full level-wise search, constraint applied as a post-filter.
/// Supports are counted for every candidate. nullopt mines unconstrained.
MiningResult mine_basic(const ConceptHierarchy& h, const TransactionDatabase& db,
                        const MinSupTable& minsup,
                        const std::optional<Constraint>& ct);

/// Scenario 2: like mine_basic but candidates failing the constraint are
/// discarded before support counting and excluded from later joins. Kept to
/// demonstrate its incompleteness; the result is marked `incomplete`.
MiningResult mine_test_and_generate(const ConceptHierarchy& h,
                                    const TransactionDatabase& db,
                                    const MinSupTable& minsup,
                                    const std::optional<Constraint>& ct);

/// Scenario 3 (MLC-Prune): prunes the hierarchy and database by sc.neg, runs
/// the level-wise search on the pruned pair, then post-filters with sc.aff.
/// Level numbering and the transaction count come from the original inputs.
MiningResult mine_mlc_prune(const ConceptHierarchy& h, const TransactionDatabase& db,
                            const MinSupTable& minsup, const SplitConstraint& sc);

struct SupportMismatch {
  Itemset itemset;
  std::uint32_t support_a = 0;
  std::uint32_t support_b = 0;
};

struct CellDifference {
  int level = 0;
  int k = 0;
  std::vector<FrequentItemset> only_in_a;
  std::vector<FrequentItemset> only_in_b;
  std::vector<SupportMismatch> support_mismatches;
};

struct ComparisonReport {
  std::vector<CellDifference> cells;  // cells with at least one difference
  std::int64_t candidates_delta = 0;  // a minus b
  std::int64_t support_computations_delta = 0;
  double elapsed_delta_ms = 0.0;

  bool identical() const { return cells.empty(); }
  std::string summary() const;
};

/// Compares the constraint-filtered outputs of two runs per (level, k):
/// itemsets present on one side only and support mismatches on the
/// intersection, plus counter and wall-time deltas.
ComparisonReport compare_runs(const MiningResult& a, const MiningResult& b);

}  // namespace mlcm
