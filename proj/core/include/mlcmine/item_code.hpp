#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mlcm {

/// Positional code of an item in a concept hierarchy.
///
/// The code is the path of child ordinals from the (virtual) root down to the
/// item; its length is the item's abstraction level. Ordinals start at 1.
/// Ancestry is a prefix relation: [1] is an ancestor of [1,2] and [1,2,3].
///
/// Text forms:
///   dotted   "1.1.2"  - canonical, works for any branching factor
///   digits   "112"    - one ordinal per digit, only when every ordinal <= 9
///   starred  "11*"    - digits padded with '*' up to the terminal level;
///                       the stars are a display convention and carry no data
class ItemCode {
 public:
  ItemCode() = default;
  explicit ItemCode(std::vector<std::uint32_t> path);
  ItemCode(std::initializer_list<std::uint32_t> path);

  /// Parses the dotted form only ("1.1.2"). Throws ParseError.
  static ItemCode parse_dotted(std::string_view token);

  /// Parses any of the three text forms. `digits_as_path` selects how an
  /// all-digit token such as "112" is read: one ordinal per digit (true) or
  /// a single level-1 ordinal (false). Callers that know the hierarchy pick
  /// the per-digit reading iff every ordinal in the hierarchy is <= 9.
  static ItemCode parse(std::string_view token, bool digits_as_path);

  const std::vector<std::uint32_t>& path() const { return path_; }
  int level() const { return static_cast<int>(path_.size()); }
  bool empty() const { return path_.empty(); }

  /// Path truncated to the first `level` elements. Requires level <= level().
  ItemCode prefix(int level) const;
  /// Requires level() >= 2.
  ItemCode parent() const;
  /// Code extended by one more ordinal.
  ItemCode child(std::uint32_t ordinal) const;

  /// Strict ancestry: this path is a proper prefix of `other`'s.
  bool is_ancestor_of(const ItemCode& other) const;
  bool is_self_or_ancestor_of(const ItemCode& other) const;

  std::string dotted() const;
  /// Digit form padded with '*' to `max_level`, e.g. [1,1] -> "11*" when
  /// max_level is 3. Falls back to the dotted form when an ordinal exceeds 9.
  std::string starred(int max_level) const;

  friend auto operator<=>(const ItemCode&, const ItemCode&) = default;

 private:
  std::vector<std::uint32_t> path_;
};

std::string to_string(const ItemCode& code);

}  // namespace mlcm
