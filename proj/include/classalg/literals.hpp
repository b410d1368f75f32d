#pragma once

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "classalg/errors.hpp"
#include "classalg/family.hpp"
#include "classalg/permutation.hpp"

namespace classalg {

// Family literals: "s1", "s2", "sm:<m>", "full:<l1,l2,...>".
inline FamilyDescriptor parse_family(std::string_view text) {
  if (text == "s1") return FamilyDescriptor::product(1);
  if (text == "s2") return FamilyDescriptor::product(2);
  if (text.starts_with("sm:")) {
    const auto digits = text.substr(3);
    int rows = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rows);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || rows < 1)
      throw parse_error("bad row count in family literal '" + std::string(text) + "'");
    return FamilyDescriptor::product(rows);
  }
  if (text.starts_with("full:")) {
    std::vector<std::string> labels;
    std::string_view rest = text.substr(5);
    while (!rest.empty()) {
      auto comma = rest.find(',');
      auto piece = rest.substr(0, comma);
      if (piece.empty()) throw parse_error("empty label in family literal '" + std::string(text) + "'");
      labels.emplace_back(piece);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
      if (rest.empty()) throw parse_error("trailing comma in family literal '" + std::string(text) + "'");
    }
    if (labels.empty()) throw parse_error("full family literal needs at least one label");
    return FamilyDescriptor::full(std::move(labels));
  }
  throw parse_error("unknown family literal '" + std::string(text) + "'");
}

namespace detail {

struct SplitLiteral {
  std::vector<std::string> row_texts;
  int declared_ambient = -1;  // -1 when no "@k" suffix
};

inline SplitLiteral split_element_literal(std::string_view text) {
  SplitLiteral out;
  // strip an optional trailing "@<int>"
  auto at = text.rfind('@');
  if (at != std::string_view::npos) {
    const auto digits = text.substr(at + 1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || digits.empty() || ptr != digits.data() + digits.size() || value < 0)
      throw parse_error("bad ambient suffix in '" + std::string(text) + "'");
    out.declared_ambient = value;
    text = text.substr(0, at);
  }
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '|') {
      out.row_texts.emplace_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace detail

// Element literals: cycle notation per row, rows joined by '|', with an
// optional "@k" ambient suffix. Without the suffix the ambient size is the
// largest column index mentioned. Full-family cycles may mix column indices
// with labels from X.
inline GroupElement parse_element(const FamilyDescriptor& family, std::string_view text) {
  auto split = detail::split_element_literal(text);
  const int expected_rows = family.is_product() ? family.rows() : 1;
  if (static_cast<int>(split.row_texts.size()) != expected_rows)
    throw parse_error("expected " + std::to_string(expected_rows) + " row(s) in '" +
                      std::string(text) + "'");

  std::vector<std::vector<std::vector<std::string>>> token_rows;
  token_rows.reserve(split.row_texts.size());
  int max_column = 0;
  for (const auto& row_text : split.row_texts) {
    auto cycles = detail::split_cycles(row_text);
    for (const auto& cyc : cycles)
      for (const auto& tok : cyc)
        if (std::isdigit(static_cast<unsigned char>(tok[0])))
          max_column = std::max(max_column, detail::parse_positive_int(tok));
    token_rows.push_back(std::move(cycles));
  }

  int ambient = max_column;
  if (split.declared_ambient >= 0) {
    if (split.declared_ambient < max_column)
      throw range_error("declared ambient " + std::to_string(split.declared_ambient) +
                        " is smaller than a mentioned column");
    ambient = split.declared_ambient;
  }

  const int x = family.fixed_count();
  std::vector<Permutation> rows;
  rows.reserve(token_rows.size());
  for (const auto& cycles : token_rows) {
    const int degree = family.is_product() ? ambient : x + ambient;
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 1);
    std::vector<char> seen(static_cast<std::size_t>(degree), 0);
    auto to_index = [&](const std::string& tok) {
      if (std::isdigit(static_cast<unsigned char>(tok[0]))) {
        const int col = detail::parse_positive_int(tok);
        return family.is_product() ? col : x + col;
      }
      if (family.is_product())
        throw parse_error("label '" + tok + "' in a product-family literal");
      const int idx = family.label_index(tok);
      if (idx == 0) throw parse_error("unknown label '" + tok + "'");
      return idx;
    };
    for (const auto& cyc : cycles) {
      std::vector<int> entries;
      entries.reserve(cyc.size());
      for (const auto& tok : cyc) {
        const int idx = to_index(tok);
        if (seen[static_cast<std::size_t>(idx - 1)])
          throw duplicate_entry("repeated entry '" + tok + "' in '" + std::string(text) + "'");
        seen[static_cast<std::size_t>(idx - 1)] = 1;
        entries.push_back(idx);
      }
      for (std::size_t i = 0; i < entries.size(); ++i)
        images[static_cast<std::size_t>(entries[i] - 1)] = entries[(i + 1) % entries.size()];
    }
    rows.push_back(Permutation::from_images(std::move(images)));
  }
  return GroupElement::from_rows(family, ambient, std::move(rows));
}

}  // namespace classalg
