#include "mlcmine/transactions.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <random>
#include <set>
#include <string>

#include "mlcmine/errors.hpp"

namespace mlcm {

namespace {

void normalize(Transaction& t) {
  std::sort(t.items.begin(), t.items.end());
  t.items.erase(std::unique(t.items.begin(), t.items.end()), t.items.end());
}

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

TransactionDatabase::TransactionDatabase(std::vector<Transaction> transactions)
    : transactions_(std::move(transactions)) {
  std::set<std::uint64_t> seen;
  for (Transaction& t : transactions_) {
    if (!seen.insert(t.tid).second) {
      throw ValidationError("duplicate TID " + std::to_string(t.tid));
    }
    normalize(t);
  }
}

TransactionDatabase TransactionDatabase::load(std::istream& in,
                                              const ConceptHierarchy& h) {
  std::vector<Transaction> transactions;
  std::set<std::uint64_t> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    const std::size_t tab = view.find('\t');
    if (tab == std::string_view::npos) {
      throw ParseError("transaction line " + std::to_string(line_no) +
                       ": expected 'TID<TAB>code,code,...'");
    }
    std::string_view tid_text = trim(view.substr(0, tab));
    Transaction t;
    auto [ptr, ec] =
        std::from_chars(tid_text.data(), tid_text.data() + tid_text.size(), t.tid);
    if (ec != std::errc{} || ptr != tid_text.data() + tid_text.size()) {
      throw ParseError("transaction line " + std::to_string(line_no) +
                       ": TID must be a non-negative integer");
    }
    if (!seen.insert(t.tid).second) {
      throw ValidationError("transaction line " + std::to_string(line_no) +
                            ": duplicate TID " + std::to_string(t.tid));
    }
    std::string_view items = view.substr(tab + 1);
    std::size_t start = 0;
    while (start <= items.size()) {
      std::size_t comma = items.find(',', start);
      if (comma == std::string_view::npos) comma = items.size();
      std::string_view token = trim(items.substr(start, comma - start));
      if (!token.empty()) {
        ItemCode code = h.resolve(token);
        if (code.level() != h.max_level()) {
          throw ValidationError("transaction line " + std::to_string(line_no) +
                                ": item " + code.dotted() +
                                " is not a terminal item (transactions may only "
                                "contain items at the deepest level)");
        }
        t.items.push_back(std::move(code));
      }
      start = comma + 1;
      if (comma == items.size()) break;
    }
    normalize(t);
    transactions.push_back(std::move(t));
  }
  TransactionDatabase db;
  db.transactions_ = std::move(transactions);
  return db;
}

void TransactionDatabase::save(std::ostream& out) const {
  for (const Transaction& t : transactions_) {
    out << t.tid << '\t';
    for (std::size_t i = 0; i < t.items.size(); ++i) {
      if (i > 0) out << ',';
      out << t.items[i].dotted();
    }
    out << '\n';
  }
}

TransactionDatabase TransactionDatabase::generate(const ConceptHierarchy& h,
                                                  std::uint64_t count,
                                                  double mean_items,
                                                  std::uint64_t seed) {
  const std::vector<ItemCode> terminals = h.terminal_items();
  if (terminals.empty()) {
    throw ValidationError("cannot generate transactions: hierarchy has no terminal items");
  }
  std::mt19937_64 rng(seed);
  std::poisson_distribution<std::uint64_t> size_dist(mean_items);
  const std::uint64_t max_items = terminals.size();

  std::vector<Transaction> transactions;
  transactions.reserve(count);
  std::vector<std::uint32_t> picked;
  for (std::uint64_t tid = 1; tid <= count; ++tid) {
    const std::uint64_t n = std::clamp<std::uint64_t>(size_dist(rng), 1, max_items);
    // Floyd's algorithm: n distinct indices out of max_items.
    picked.clear();
    for (std::uint64_t j = max_items - n; j < max_items; ++j) {
      std::uniform_int_distribution<std::uint64_t> pick(0, j);
      const std::uint32_t candidate = static_cast<std::uint32_t>(pick(rng));
      if (std::find(picked.begin(), picked.end(), candidate) != picked.end()) {
        picked.push_back(static_cast<std::uint32_t>(j));
      } else {
        picked.push_back(candidate);
      }
    }
    Transaction t;
    t.tid = tid;
    t.items.reserve(picked.size());
    for (std::uint32_t index : picked) t.items.push_back(terminals[index]);
    normalize(t);
    transactions.push_back(std::move(t));
  }
  TransactionDatabase db;
  db.transactions_ = std::move(transactions);
  return db;
}

bool transaction_supports(const ConceptHierarchy&, const Transaction& t,
                          const ItemCode& x) {
  return std::any_of(t.items.begin(), t.items.end(),
                     [&](const ItemCode& item) { return x.is_self_or_ancestor_of(item); });
}

std::uint32_t itemset_support(const ConceptHierarchy& h, const TransactionDatabase& db,
                              const Itemset& s) {
  std::uint32_t count = 0;
  for (const Transaction& t : db) {
    const bool all = std::all_of(s.items().begin(), s.items().end(), [&](const ItemCode& x) {
      return transaction_supports(h, t, x);
    });
    if (all) ++count;
  }
  return count;
}

TransactionDatabase prune_database(const ConceptHierarchy& h,
                                   const TransactionDatabase& db,
                                   std::span<const ItemCode> neg_items) {
  for (const ItemCode& g : neg_items) {
    if (!h.contains(g)) {
      throw ValidationError("cannot prune unknown item " + g.dotted());
    }
  }
  std::vector<Transaction> pruned;
  pruned.reserve(db.size());
  for (const Transaction& t : db) {
    Transaction copy;
    copy.tid = t.tid;
    copy.items.reserve(t.items.size());
    for (const ItemCode& item : t.items) {
      const bool removed =
          std::any_of(neg_items.begin(), neg_items.end(),
                      [&](const ItemCode& g) { return g.is_self_or_ancestor_of(item); });
      if (!removed) copy.items.push_back(item);
    }
    pruned.push_back(std::move(copy));  // empty transactions are retained
  }
  return TransactionDatabase(std::move(pruned));
}

}  // namespace mlcm
