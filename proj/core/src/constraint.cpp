#include "mlcmine/constraint.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "mlcmine/errors.hpp"

namespace mlcm {

namespace {

void check_signs(const Constraint::Conjunction& conj) {
  for (std::size_t i = 0; i < conj.size(); ++i) {
    for (std::size_t j = i + 1; j < conj.size(); ++j) {
      if (conj[i].item == conj[j].item && conj[i].negated != conj[j].negated) {
        throw ParseError("item " + conj[i].item.dotted() +
                         " appears both negated and non-negated in one conjunction");
      }
    }
  }
}

// --- tokenizer ------------------------------------------------------------

enum class TokenKind { Item, And, Or, Not, LParen, RParen, End };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t position;
};

bool is_item_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '.' || c == '*' ||
         c == '_' || c == '-';
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++i;
      continue;
    }
    if (c == '(') {
      tokens.push_back({TokenKind::LParen, "(", i++});
      continue;
    }
    if (c == ')') {
      tokens.push_back({TokenKind::RParen, ")", i++});
      continue;
    }
    if (!is_item_char(c)) {
      throw ParseError("unexpected character '" + std::string(1, c) + "'", i);
    }
    std::size_t start = i;
    while (i < text.size() && is_item_char(text[i])) ++i;
    std::string word(text.substr(start, i - start));
    std::string upper = word;
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
    if (upper == "AND") {
      tokens.push_back({TokenKind::And, std::move(word), start});
    } else if (upper == "OR") {
      tokens.push_back({TokenKind::Or, std::move(word), start});
    } else if (upper == "NOT") {
      tokens.push_back({TokenKind::Not, std::move(word), start});
    } else {
      tokens.push_back({TokenKind::Item, std::move(word), start});
    }
  }
  tokens.push_back({TokenKind::End, "", text.size()});
  return tokens;
}

// --- recursive descent ----------------------------------------------------
//
// Units inside a conjunction may be single literals or parenthesized
// sub-constraints. A parenthesized disjunction is legal only when it stands
// alone in its conjunction (then its clauses merge into the outer
// disjunction); combined with AND it would need distribution, which the
// grammar rejects.

class Parser {
 public:
  Parser(std::string_view text, const ConceptHierarchy& h)
      : tokens_(tokenize(text)), h_(h) {}

  Constraint parse() {
    std::vector<Constraint::Conjunction> conjunctions = parse_disjunction();
    expect(TokenKind::End, "expected end of constraint");
    for (const auto& conj : conjunctions) check_signs(conj);
    return Constraint(std::move(conjunctions));
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  void expect(TokenKind kind, const std::string& message) {
    if (peek().kind != kind) throw ParseError(message, peek().position);
    ++pos_;
  }

  std::vector<Constraint::Conjunction> parse_disjunction() {
    std::vector<Constraint::Conjunction> conjunctions = parse_conjunction();
    while (peek().kind == TokenKind::Or) {
      advance();
      auto next = parse_conjunction();
      conjunctions.insert(conjunctions.end(), std::make_move_iterator(next.begin()),
                          std::make_move_iterator(next.end()));
    }
    return conjunctions;
  }

  // Returns the unit's DNF clauses (one clause unless the unit was a
  // parenthesized disjunction).
  std::vector<Constraint::Conjunction> parse_unit() {
    const Token& token = peek();
    switch (token.kind) {
      case TokenKind::Not: {
        advance();
        if (peek().kind == TokenKind::LParen) {
          // NOT may wrap a parenthesized single item, e.g. "NOT (3**)";
          // anything larger under NOT leaves DNF.
          const std::size_t paren_pos = peek().position;
          advance();
          auto inner = parse_disjunction();
          expect(TokenKind::RParen, "expected ')'");
          if (inner.size() != 1 || inner[0].size() != 1 || inner[0][0].negated) {
            throw ParseError(
                "non-DNF nesting: NOT may only apply to a single item", paren_pos);
          }
          return {{Literal{std::move(inner[0][0].item), true}}};
        }
        if (peek().kind != TokenKind::Item) {
          throw ParseError("expected item after NOT", peek().position);
        }
        const Token item = advance();
        return {{Literal{resolve(item), true}}};
      }
      case TokenKind::Item: {
        const Token item = advance();
        return {{Literal{resolve(item), false}}};
      }
      case TokenKind::LParen: {
        advance();
        auto inner = parse_disjunction();
        expect(TokenKind::RParen, "expected ')'");
        return inner;
      }
      default:
        throw ParseError("expected item, NOT or '('", token.position);
    }
  }

  std::vector<Constraint::Conjunction> parse_conjunction() {
    const std::size_t start = peek().position;
    std::vector<Constraint::Conjunction> clauses = parse_unit();
    while (peek().kind == TokenKind::And) {
      advance();
      auto unit = parse_unit();
      if (clauses.size() != 1 || unit.size() != 1) {
        throw ParseError("non-DNF nesting: an OR group cannot appear under AND", start);
      }
      clauses[0].insert(clauses[0].end(), std::make_move_iterator(unit[0].begin()),
                        std::make_move_iterator(unit[0].end()));
    }
    return clauses;
  }

  ItemCode resolve(const Token& token) {
    try {
      return h_.resolve(token.text);
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), token.position);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const ConceptHierarchy& h_;
};

}  // namespace

Constraint::Constraint(std::vector<Conjunction> conjunctions)
    : conjunctions_(std::move(conjunctions)) {
  if (conjunctions_.empty()) {
    throw ParseError("a constraint needs at least one conjunction");
  }
  for (const Conjunction& conj : conjunctions_) {
    if (conj.empty()) throw ParseError("empty conjunction in constraint");
    check_signs(conj);
  }
}

std::string Constraint::to_string() const {
  std::ostringstream out;
  const bool many = conjunctions_.size() > 1;
  for (std::size_t i = 0; i < conjunctions_.size(); ++i) {
    if (i > 0) out << " OR ";
    const Conjunction& conj = conjunctions_[i];
    const bool wrap = many && conj.size() > 1;
    if (wrap) out << '(';
    for (std::size_t j = 0; j < conj.size(); ++j) {
      if (j > 0) out << " AND ";
      if (conj[j].negated) out << "NOT ";
      out << conj[j].item.dotted();
    }
    if (wrap) out << ')';
  }
  return out.str();
}

Constraint parse_constraint(std::string_view text, const ConceptHierarchy& h) {
  return Parser(text, h).parse();
}

SplitConstraint parse_split_constraint(std::string_view neg_text,
                                       std::string_view aff_text,
                                       const ConceptHierarchy& h) {
  SplitConstraint sc;

  // neg: comma- or AND-separated `NOT item` entries; bare items are negated.
  std::string neg(neg_text);
  for (char& c : neg) {
    if (c == ',') c = ' ';
  }
  std::istringstream stream(neg);
  std::string word;
  bool pending_not = false;
  while (stream >> word) {
    std::string upper = word;
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
    if (upper == "AND") {
      if (pending_not) throw ParseError("expected item after NOT in neg part");
      continue;
    }
    if (upper == "NOT") {
      if (pending_not) throw ParseError("NOT NOT is not allowed in neg part");
      pending_not = true;
      continue;
    }
    if (upper == "OR") {
      throw ParseError("the neg part is a pure conjunction; OR is not allowed");
    }
    sc.neg.push_back(h.resolve(word));
    pending_not = false;
  }
  if (pending_not) throw ParseError("dangling NOT in neg part");
  std::sort(sc.neg.begin(), sc.neg.end());
  sc.neg.erase(std::unique(sc.neg.begin(), sc.neg.end()), sc.neg.end());

  bool aff_empty = true;
  for (char c : aff_text) {
    if (c != ' ' && c != '\t' && c != '\r' && c != '\n') {
      aff_empty = false;
      break;
    }
  }
  if (!aff_empty) {
    Constraint aff = parse_constraint(aff_text, h);
    for (const auto& conj : aff.conjunctions()) {
      for (const Literal& lit : conj) {
        if (lit.negated) {
          throw ParseError("the aff part may not contain NOT (item " +
                           lit.item.dotted() + ")");
        }
        for (const ItemCode& g : sc.neg) {
          if (g.is_self_or_ancestor_of(lit.item)) {
            throw ParseError("aff literal " + lit.item.dotted() +
                             " is pruned away by neg item " + g.dotted() +
                             " and can never be satisfied");
          }
        }
      }
    }
    sc.aff = std::move(aff);
  }
  return sc;
}

std::string neg_to_string(std::span<const ItemCode> neg) {
  std::ostringstream out;
  for (std::size_t i = 0; i < neg.size(); ++i) {
    if (i > 0) out << " AND ";
    out << "NOT " << neg[i].dotted();
  }
  return out.str();
}

std::optional<Constraint> split_to_flat(const SplitConstraint& sc) {
  if (!sc.aff.has_value() && sc.neg.empty()) return std::nullopt;
  std::vector<Constraint::Conjunction> conjunctions;
  if (sc.aff.has_value()) {
    conjunctions = sc.aff->conjunctions();
  } else {
    conjunctions.emplace_back();  // single conjunction of pure negations
  }
  for (Constraint::Conjunction& conj : conjunctions) {
    for (const ItemCode& g : sc.neg) {
      conj.push_back(Literal{g, true});
    }
  }
  return Constraint(std::move(conjunctions));
}

bool evaluate_literal(const ConceptHierarchy&, const Itemset& s, const Literal& e) {
  const bool hit = std::any_of(s.items().begin(), s.items().end(), [&](const ItemCode& m) {
    return e.item.is_self_or_ancestor_of(m);
  });
  return e.negated ? !hit : hit;
}

bool evaluate_constraint(const ConceptHierarchy& h, const Itemset& s,
                         const Constraint& ct) {
  for (const Constraint::Conjunction& conj : ct.conjunctions()) {
    const bool all = std::all_of(conj.begin(), conj.end(), [&](const Literal& e) {
      return evaluate_literal(h, s, e);
    });
    if (all) return true;
  }
  return false;
}

bool evaluate_affirmation(const ConceptHierarchy& h, const Itemset& s,
                          const std::optional<Constraint>& aff) {
  if (!aff.has_value()) return true;
  return evaluate_constraint(h, s, *aff);
}

std::vector<FrequentItemset> filter_frequent(const ConceptHierarchy& h,
                                             std::span<const FrequentItemset> sets,
                                             const Constraint& ct) {
  std::vector<FrequentItemset> out;
  for (const FrequentItemset& entry : sets) {
    if (evaluate_constraint(h, entry.itemset, ct)) out.push_back(entry);
  }
  return out;
}

}  // namespace mlcm
