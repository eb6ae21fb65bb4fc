#include "mlcmine/miner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "mlcmine/errors.hpp"

namespace mlcm {

// --- MinSupTable ------------------------------------------------------------

MinSupTable MinSupTable::absolute(std::vector<std::uint32_t> thresholds) {
  for (std::uint32_t value : thresholds) {
    if (value == 0) throw ValidationError("minimum support thresholds must be >= 1");
  }
  MinSupTable table;
  table.thresholds_ = std::move(thresholds);
  return table;
}

MinSupTable MinSupTable::parse(std::span<const std::string> entries,
                               std::uint64_t db_size) {
  std::vector<std::uint32_t> thresholds;
  thresholds.reserve(entries.size());
  for (const std::string& entry : entries) {
    if (entry.empty()) throw ParseError("empty minsup entry");
    try {
      if (entry.back() == '%') {
        const double pct = std::stod(entry.substr(0, entry.size() - 1));
        if (pct < 0.0 || pct > 100.0) {
          throw ParseError("percentage minsup must be in 0..100: " + entry);
        }
        const auto absolute = static_cast<std::uint64_t>(
            std::ceil(pct / 100.0 * static_cast<double>(db_size)));
        thresholds.push_back(static_cast<std::uint32_t>(std::max<std::uint64_t>(absolute, 1)));
      } else {
        const long value = std::stol(entry);
        if (value < 1) throw ParseError("absolute minsup must be >= 1: " + entry);
        thresholds.push_back(static_cast<std::uint32_t>(value));
      }
    } catch (const std::invalid_argument&) {
      throw ParseError("invalid minsup entry '" + entry + "'");
    } catch (const std::out_of_range&) {
      throw ParseError("minsup entry out of range '" + entry + "'");
    }
  }
  return absolute(std::move(thresholds));
}

std::uint32_t MinSupTable::at(int level) const {
  if (level < 1 || level > levels()) {
    throw ValidationError("no minsup threshold for level " + std::to_string(level));
  }
  return thresholds_[static_cast<std::size_t>(level - 1)];
}

// --- MiningResult lookups ----------------------------------------------------

const MiningPass* MiningResult::pass(int level, int k) const {
  for (const LevelResult& lr : levels) {
    if (lr.level != level) continue;
    for (const MiningPass& p : lr.passes) {
      if (p.k == k) return &p;
    }
  }
  return nullptr;
}

std::span<const FrequentItemset> MiningResult::frequent(int level, int k) const {
  const MiningPass* p = pass(level, k);
  return p ? std::span<const FrequentItemset>(p->frequent)
           : std::span<const FrequentItemset>();
}

std::span<const FrequentItemset> MiningResult::filtered(int level, int k) const {
  const MiningPass* p = pass(level, k);
  return p ? std::span<const FrequentItemset>(p->filtered)
           : std::span<const FrequentItemset>();
}

// --- public building blocks ---------------------------------------------------

namespace {

/// Level-l generalizations of a transaction: the distinct length-l prefixes
/// of its items, sorted.
std::vector<ItemCode> generalize(const Transaction& t, int level) {
  std::vector<ItemCode> out;
  out.reserve(t.items.size());
  for (const ItemCode& item : t.items) {
    if (item.level() >= level) out.push_back(item.prefix(level));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

using GeneralizedDb = std::vector<std::vector<ItemCode>>;

GeneralizedDb generalize_db(const TransactionDatabase& db, int level) {
  GeneralizedDb out;
  out.reserve(db.size());
  for (const Transaction& t : db) out.push_back(generalize(t, level));
  return out;
}

bool itemset_in(const std::vector<ItemCode>& sorted_codes, const Itemset& s) {
  return std::includes(sorted_codes.begin(), sorted_codes.end(), s.items().begin(),
                       s.items().end());
}

}  // namespace

std::vector<FrequentItemset> get_1_itemsets(const ConceptHierarchy& h,
                                            const TransactionDatabase& db, int level,
                                            const MinSupTable& minsup) {
  const std::uint32_t threshold = minsup.at(level);
  const std::vector<ItemCode> items = h.items_at_level(level);
  std::map<ItemCode, std::uint32_t> counts;
  for (const ItemCode& code : items) counts.emplace(code, 0);
  for (const Transaction& t : db) {
    for (const ItemCode& g : generalize(t, level)) {
      if (auto it = counts.find(g); it != counts.end()) ++it->second;
    }
  }
  std::vector<FrequentItemset> out;
  for (const ItemCode& code : items) {
    const std::uint32_t support = counts[code];
    if (support >= threshold) out.push_back({Itemset({code}), support});
  }
  return out;
}

std::vector<Itemset> get_candidate_set(std::span<const Itemset> prev) {
  if (prev.empty()) return {};
  const int level = prev.front().level();
  const int size = prev.front().size();
  for (const Itemset& s : prev) {
    if (s.level() != level) {
      throw ValidationError("candidate generation requires itemsets of one level");
    }
    if (s.size() != size) {
      throw ValidationError("candidate generation requires itemsets of one size");
    }
  }
  std::vector<Itemset> sorted(prev.begin(), prev.end());
  std::sort(sorted.begin(), sorted.end());

  std::vector<Itemset> candidates;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const auto& a = sorted[i].items();
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      const auto& b = sorted[j].items();
      // Join on the first k-2 items; sortedness makes the shared prefix
      // contiguous, so the inner loop can stop at the first mismatch.
      if (!std::equal(a.begin(), a.end() - 1, b.begin())) break;

      std::vector<ItemCode> joined = a;
      joined.push_back(b.back());
      Itemset candidate(std::move(joined));

      // Apriori prune: every (k-1)-subset must be frequent.
      bool keep = true;
      const auto& items = candidate.items();
      for (std::size_t drop = 0; keep && drop < items.size(); ++drop) {
        std::vector<ItemCode> subset;
        subset.reserve(items.size() - 1);
        for (std::size_t m = 0; m < items.size(); ++m) {
          if (m != drop) subset.push_back(items[m]);
        }
        keep = std::binary_search(sorted.begin(), sorted.end(), Itemset(std::move(subset)));
      }
      if (keep) candidates.push_back(std::move(candidate));
    }
  }
  return candidates;
}

std::vector<Itemset> get_subsets(std::span<const Itemset> candidates,
                                 const ConceptHierarchy& h, const Transaction& t) {
  std::vector<Itemset> out;
  for (const Itemset& candidate : candidates) {
    const auto& items = candidate.items();
    const bool supported = std::all_of(items.begin(), items.end(), [&](const ItemCode& x) {
      return transaction_supports(h, t, x);
    });
    if (supported) out.push_back(candidate);
  }
  return out;
}

// --- level-wise engine ---------------------------------------------------------

namespace {

using ItemsetPredicate = std::function<bool(const Itemset&)>;

struct EngineSpec {
  const ConceptHierarchy* universe = nullptr;  // item source for every level
  const TransactionDatabase* db = nullptr;     // scanned for supports
  const MinSupTable* minsup = nullptr;
  int max_level = 0;
  ItemsetPredicate prefilter;   // drops candidates before counting (scenario 2)
  ItemsetPredicate postfilter;  // selects L[l,k]^CT from L[l,k]
};

void run_levelwise(const EngineSpec& spec, MiningResult& result) {
  const ConceptHierarchy& h = *spec.universe;
  const TransactionDatabase& db = *spec.db;

  for (int level = 1; level <= spec.max_level; ++level) {
    LevelResult lr;
    lr.level = level;
    lr.minsup = spec.minsup->at(level);

    const GeneralizedDb gdb = generalize_db(db, level);

    // k = 1: every level-l item is a candidate singleton.
    std::vector<Itemset> candidates;
    for (const ItemCode& code : h.items_at_level(level)) {
      candidates.push_back(Itemset({code}));
    }

    for (int k = 1; !candidates.empty(); ++k) {
      if (spec.prefilter) {
        std::erase_if(candidates,
                      [&](const Itemset& c) { return !spec.prefilter(c); });
      }
      result.counters.candidates_generated += candidates.size();

      std::vector<std::uint32_t> counts(candidates.size(), 0);
      for (const std::vector<ItemCode>& row : gdb) {
        if (row.size() < static_cast<std::size_t>(k)) continue;
        for (std::size_t c = 0; c < candidates.size(); ++c) {
          if (itemset_in(row, candidates[c])) {
            ++counts[c];
            ++result.counters.support_computations;
          }
        }
      }

      MiningPass pass;
      pass.k = k;
      pass.candidates = candidates.size();
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        if (counts[c] >= lr.minsup) {
          pass.frequent.push_back({candidates[c], counts[c]});
        }
      }
      if (spec.postfilter) {
        for (const FrequentItemset& entry : pass.frequent) {
          if (spec.postfilter(entry.itemset)) pass.filtered.push_back(entry);
        }
      } else {
        pass.filtered = pass.frequent;
      }

      std::vector<Itemset> prev;
      prev.reserve(pass.frequent.size());
      for (const FrequentItemset& entry : pass.frequent) prev.push_back(entry.itemset);

      lr.passes.push_back(std::move(pass));
      candidates = get_candidate_set(prev);
    }

    for (const MiningPass& pass : lr.passes) {
      lr.union_filtered.insert(lr.union_filtered.end(), pass.filtered.begin(),
                               pass.filtered.end());
    }
    result.levels.push_back(std::move(lr));
  }
}

void check_minsup_levels(const ConceptHierarchy& h, const MinSupTable& minsup) {
  if (minsup.levels() != h.max_level()) {
    throw ValidationError("minsup threshold count (" + std::to_string(minsup.levels()) +
                          ") does not match the hierarchy's level count (" +
                          std::to_string(h.max_level()) + ")");
  }
}

double elapsed_ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                   start)
      .count();
}

void validate_split(const ConceptHierarchy& h, const SplitConstraint& sc) {
  for (const ItemCode& g : sc.neg) {
    if (!h.contains(g)) {
      throw ValidationError("neg item " + g.dotted() + " is not in the hierarchy");
    }
  }
  if (!sc.aff.has_value()) return;
  for (const auto& conj : sc.aff->conjunctions()) {
    for (const Literal& lit : conj) {
      if (lit.negated) {
        throw ValidationError("the aff part of a split constraint may not negate items");
      }
      for (const ItemCode& g : sc.neg) {
        if (g.is_self_or_ancestor_of(lit.item)) {
          throw ValidationError("aff literal " + lit.item.dotted() +
                                " is pruned away by neg item " + g.dotted());
        }
      }
    }
  }
}

}  // namespace

MiningResult mine_basic(const ConceptHierarchy& h, const TransactionDatabase& db,
                        const MinSupTable& minsup,
                        const std::optional<Constraint>& ct) {
  check_minsup_levels(h, minsup);
  const auto start = std::chrono::steady_clock::now();

  MiningResult result;
  result.algorithm = "basic";
  result.max_level = h.max_level();
  result.transaction_count = db.size();
  result.minsup = minsup.values();
  if (ct.has_value()) result.constraint_text = ct->to_string();

  EngineSpec spec;
  spec.universe = &h;
  spec.db = &db;
  spec.minsup = &minsup;
  spec.max_level = h.max_level();
  if (ct.has_value()) {
    spec.postfilter = [&h, &ct](const Itemset& s) {
      return evaluate_constraint(h, s, *ct);
    };
  }
  run_levelwise(spec, result);

  result.elapsed_ms = elapsed_ms_since(start);
  return result;
}

MiningResult mine_test_and_generate(const ConceptHierarchy& h,
                                    const TransactionDatabase& db,
                                    const MinSupTable& minsup,
                                    const std::optional<Constraint>& ct) {
  check_minsup_levels(h, minsup);
  const auto start = std::chrono::steady_clock::now();

  MiningResult result;
  result.algorithm = "tag";
  result.incomplete = true;
  result.max_level = h.max_level();
  result.transaction_count = db.size();
  result.minsup = minsup.values();
  if (ct.has_value()) result.constraint_text = ct->to_string();

  EngineSpec spec;
  spec.universe = &h;
  spec.db = &db;
  spec.minsup = &minsup;
  spec.max_level = h.max_level();
  if (ct.has_value()) {
    spec.prefilter = [&h, &ct](const Itemset& s) {
      return evaluate_constraint(h, s, *ct);
    };
  }
  run_levelwise(spec, result);

  result.elapsed_ms = elapsed_ms_since(start);
  return result;
}

MiningResult mine_mlc_prune(const ConceptHierarchy& h, const TransactionDatabase& db,
                            const MinSupTable& minsup, const SplitConstraint& sc) {
  check_minsup_levels(h, minsup);
  validate_split(h, sc);
  const auto start = std::chrono::steady_clock::now();

  MiningResult result;
  result.algorithm = "prune";
  result.max_level = h.max_level();        // level numbering is not affected
  result.transaction_count = db.size();    // by pruning
  result.minsup = minsup.values();
  result.neg_text = neg_to_string(sc.neg);
  if (sc.aff.has_value()) result.aff_text = sc.aff->to_string();

  const ConceptHierarchy pruned_h = h.pruned(sc.neg);
  const TransactionDatabase pruned_db = prune_database(h, db, sc.neg);

  EngineSpec spec;
  spec.universe = &pruned_h;
  spec.db = &pruned_db;
  spec.minsup = &minsup;
  spec.max_level = h.max_level();
  if (sc.aff.has_value()) {
    const Constraint& aff = *sc.aff;
    spec.postfilter = [&pruned_h, &aff](const Itemset& s) {
      return evaluate_constraint(pruned_h, s, aff);
    };
  }
  run_levelwise(spec, result);

  result.elapsed_ms = elapsed_ms_since(start);
  return result;
}

// --- run comparison -------------------------------------------------------------

ComparisonReport compare_runs(const MiningResult& a, const MiningResult& b) {
  ComparisonReport report;
  report.candidates_delta =
      static_cast<std::int64_t>(a.counters.candidates_generated) -
      static_cast<std::int64_t>(b.counters.candidates_generated);
  report.support_computations_delta =
      static_cast<std::int64_t>(a.counters.support_computations) -
      static_cast<std::int64_t>(b.counters.support_computations);
  report.elapsed_delta_ms = a.elapsed_ms - b.elapsed_ms;

  // Visit every (level, k) cell present in either run.
  std::map<std::pair<int, int>, bool> cells;
  for (const MiningResult* r : {&a, &b}) {
    for (const LevelResult& lr : r->levels) {
      for (const MiningPass& p : lr.passes) cells.emplace(std::pair{lr.level, p.k}, true);
    }
  }

  for (const auto& [cell, unused] : cells) {
    const auto [level, k] = cell;
    std::map<Itemset, std::uint32_t> in_a, in_b;
    for (const FrequentItemset& f : a.filtered(level, k)) in_a.emplace(f.itemset, f.support);
    for (const FrequentItemset& f : b.filtered(level, k)) in_b.emplace(f.itemset, f.support);

    CellDifference diff;
    diff.level = level;
    diff.k = k;
    for (const auto& [itemset, support] : in_a) {
      auto it = in_b.find(itemset);
      if (it == in_b.end()) {
        diff.only_in_a.push_back({itemset, support});
      } else if (it->second != support) {
        diff.support_mismatches.push_back({itemset, support, it->second});
      }
    }
    for (const auto& [itemset, support] : in_b) {
      if (!in_a.contains(itemset)) diff.only_in_b.push_back({itemset, support});
    }
    if (!diff.only_in_a.empty() || !diff.only_in_b.empty() ||
        !diff.support_mismatches.empty()) {
      report.cells.push_back(std::move(diff));
    }
  }
  return report;
}

std::string ComparisonReport::summary() const {
  std::ostringstream out;
  if (identical()) {
    out << "filtered outputs are identical\n";
  } else {
    for (const CellDifference& diff : cells) {
      out << "L[" << diff.level << "," << diff.k << "]: ";
      out << diff.only_in_a.size() << " only in A, " << diff.only_in_b.size()
          << " only in B, " << diff.support_mismatches.size() << " support mismatches\n";
      for (const FrequentItemset& f : diff.only_in_a) {
        out << "  A only: {" << f.itemset.dotted() << "} " << f.support << "\n";
      }
      for (const FrequentItemset& f : diff.only_in_b) {
        out << "  B only: {" << f.itemset.dotted() << "} " << f.support << "\n";
      }
      for (const SupportMismatch& m : diff.support_mismatches) {
        out << "  support: {" << m.itemset.dotted() << "} " << m.support_a << " vs "
            << m.support_b << "\n";
      }
    }
  }
  out << "candidates delta: " << candidates_delta
      << ", support computations delta: " << support_computations_delta
      << ", elapsed delta: " << elapsed_delta_ms << " ms\n";
  return out.str();
}

}  // namespace mlcm
