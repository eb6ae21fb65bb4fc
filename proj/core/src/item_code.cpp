#include "mlcmine/item_code.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "mlcmine/errors.hpp"

namespace mlcm {

namespace {

std::uint32_t parse_ordinal(std::string_view text, std::string_view whole_token) {
  std::uint32_t value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || value == 0) {
    throw ParseError("invalid item code '" + std::string(whole_token) +
                     "': ordinals are integers >= 1");
  }
  return value;
}

}  // namespace

ItemCode::ItemCode(std::vector<std::uint32_t> path) : path_(std::move(path)) {
  for (std::uint32_t ordinal : path_) {
    if (ordinal == 0) throw ParseError("item code ordinals start at 1");
  }
}

ItemCode::ItemCode(std::initializer_list<std::uint32_t> path)
    : ItemCode(std::vector<std::uint32_t>(path)) {}

ItemCode ItemCode::parse_dotted(std::string_view token) {
  if (token.empty()) throw ParseError("empty item code");
  std::vector<std::uint32_t> path;
  std::size_t start = 0;
  while (start <= token.size()) {
    std::size_t dot = token.find('.', start);
    if (dot == std::string_view::npos) dot = token.size();
    if (dot == start) throw ParseError("invalid item code '" + std::string(token) + "'");
    path.push_back(parse_ordinal(token.substr(start, dot - start), token));
    start = dot + 1;
    if (dot == token.size()) break;
  }
  return ItemCode(std::move(path));
}

ItemCode ItemCode::parse(std::string_view token, bool digits_as_path) {
  if (token.empty()) throw ParseError("empty item code");
  if (token.find('.') != std::string_view::npos) return parse_dotted(token);

  const std::size_t star = token.find('*');
  if (star != std::string_view::npos) {
    // Starred form: digits followed by one or more '*'.
    std::string_view digits = token.substr(0, star);
    if (digits.empty() ||
        token.find_first_not_of('*', star) != std::string_view::npos) {
      throw ParseError("invalid item code '" + std::string(token) + "'");
    }
    std::vector<std::uint32_t> path;
    for (char c : digits) {
      if (c < '1' || c > '9') {
        throw ParseError("invalid item code '" + std::string(token) +
                         "': starred codes use digits 1-9");
      }
      path.push_back(static_cast<std::uint32_t>(c - '0'));
    }
    return ItemCode(std::move(path));
  }

  if (digits_as_path && token.size() > 1) {
    std::vector<std::uint32_t> path;
    for (char c : token) {
      if (c < '1' || c > '9') {
        throw ParseError("invalid item code '" + std::string(token) +
                         "': digit codes use digits 1-9");
      }
      path.push_back(static_cast<std::uint32_t>(c - '0'));
    }
    return ItemCode(std::move(path));
  }

  return ItemCode({parse_ordinal(token, token)});
}

ItemCode ItemCode::prefix(int level) const {
  return ItemCode(std::vector<std::uint32_t>(path_.begin(), path_.begin() + level));
}

ItemCode ItemCode::parent() const { return prefix(static_cast<int>(path_.size()) - 1); }

ItemCode ItemCode::child(std::uint32_t ordinal) const {
  std::vector<std::uint32_t> path = path_;
  path.push_back(ordinal);
  return ItemCode(std::move(path));
}

bool ItemCode::is_ancestor_of(const ItemCode& other) const {
  return path_.size() < other.path_.size() &&
         std::equal(path_.begin(), path_.end(), other.path_.begin());
}

bool ItemCode::is_self_or_ancestor_of(const ItemCode& other) const {
  return path_.size() <= other.path_.size() &&
         std::equal(path_.begin(), path_.end(), other.path_.begin());
}

std::string ItemCode::dotted() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < path_.size(); ++i) {
    if (i > 0) out << '.';
    out << path_[i];
  }
  return out.str();
}

std::string ItemCode::starred(int max_level) const {
  for (std::uint32_t ordinal : path_) {
    if (ordinal > 9) return dotted();
  }
  std::string out;
  for (std::uint32_t ordinal : path_) out += static_cast<char>('0' + ordinal);
  for (int i = level(); i < max_level; ++i) out += '*';
  return out;
}

std::string to_string(const ItemCode& code) { return code.dotted(); }

}  // namespace mlcm
