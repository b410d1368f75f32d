#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <compare>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "classalg/errors.hpp"

namespace classalg {

namespace detail {

// Splits cycle notation into token cycles: "(1 2)(3 4)" -> {{"1","2"},{"3","4"}}.
// The literal "e" (identity) yields an empty list. Tokens are kept as strings so
// callers can interpret them as column indices or as fixed labels.
inline std::vector<std::vector<std::string>> split_cycles(std::string_view text) {
  std::vector<std::vector<std::string>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw parse_error("empty permutation literal");
  if (text[i] == 'e') {
    std::size_t j = i + 1;
    while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j == text.size()) return cycles;
    throw parse_error("unexpected text after identity literal: " + std::string(text));
  }
  while (i < text.size()) {
    if (text[i] != '(') throw parse_error("expected '(' in permutation literal: " + std::string(text));
    ++i;
    std::vector<std::string> cycle;
    for (;;) {
      skip_ws();
      if (i == text.size()) throw parse_error("unterminated cycle in: " + std::string(text));
      if (text[i] == ')') { ++i; break; }
      if (text[i] == '(') throw parse_error("nested '(' in permutation literal");
      std::size_t start = i;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
             text[i] != '(' && text[i] != ')')
        ++i;
      cycle.emplace_back(text.substr(start, i - start));
    }
    if (cycle.empty()) throw parse_error("empty cycle in: " + std::string(text));
    cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return cycles;
}

inline int parse_positive_int(const std::string& token) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw parse_error("expected a positive integer, got '" + token + "'");
  if (value <= 0) throw parse_error("cycle entries must be positive, got '" + token + "'");
  return value;
}

}  // namespace detail

// A permutation of {1, ..., degree}, stored as its image list.
class Permutation {
 public:
  Permutation() = default;  // degree 0

  static Permutation identity(int degree) {
    if (degree < 0) throw range_error("negative degree");
    std::vector<int> im(static_cast<std::size_t>(degree));
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
  }

  // images[i] is the image of point i+1; must be a rearrangement of 1..n.
  static Permutation from_images(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : images) {
      if (v < 1 || v > n) throw range_error("image entry out of range");
      if (seen[static_cast<std::size_t>(v - 1)]) throw duplicate_entry("image list is not a bijection");
      seen[static_cast<std::size_t>(v - 1)] = 1;
    }
    return Permutation(std::move(images));
  }

  // Parses cycle notation over {1..degree}: "e" or "(t1 t2 ...)(...)".
  // Cycles are disjoint because repeated entries are rejected.
  static Permutation from_cycles(std::string_view text, int degree) {
    if (degree < 0) throw range_error("negative degree");
    auto cycles = detail::split_cycles(text);
    Permutation p = identity(degree);
    std::vector<char> seen(static_cast<std::size_t>(degree), 0);
    for (const auto& cyc : cycles) {
      std::vector<int> entries;
      entries.reserve(cyc.size());
      for (const auto& tok : cyc) {
        int v = detail::parse_positive_int(tok);
        if (v > degree) throw range_error("cycle entry " + tok + " exceeds degree " + std::to_string(degree));
        if (seen[static_cast<std::size_t>(v - 1)]) throw duplicate_entry("repeated cycle entry " + tok);
        seen[static_cast<std::size_t>(v - 1)] = 1;
        entries.push_back(v);
      }
      for (std::size_t i = 0; i < entries.size(); ++i)
        p.images_[static_cast<std::size_t>(entries[i] - 1)] = entries[(i + 1) % entries.size()];
    }
    return p;
  }

  int degree() const { return static_cast<int>(images_.size()); }

  int apply(int x) const {
    if (x < 1 || x > degree()) throw point_out_of_range("point " + std::to_string(x) + " out of range");
    return images_[static_cast<std::size_t>(x - 1)];
  }

  // (a * b)(x) = a(b(x)): the right factor acts first.
  Permutation operator*(const Permutation& rhs) const {
    if (degree() != rhs.degree()) throw degree_mismatch("composing permutations of different degree");
    std::vector<int> im(images_.size());
    for (std::size_t i = 0; i < im.size(); ++i)
      im[i] = images_[static_cast<std::size_t>(rhs.images_[i] - 1)];
    return Permutation(std::move(im));
  }

  Permutation inverse() const {
    std::vector<int> im(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      im[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(im));
  }

  // Trivial extension: new points are fixed.
  Permutation embedded(int new_degree) const {
    if (new_degree < degree()) throw shrink_not_allowed("cannot embed into a smaller degree");
    std::vector<int> im = images_;
    im.reserve(static_cast<std::size_t>(new_degree));
    for (int v = degree() + 1; v <= new_degree; ++v) im.push_back(v);
    return Permutation(std::move(im));
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != static_cast<int>(i) + 1) return false;
    return true;
  }

  // Nontrivial cycles, each rotated to start at its least element, sorted by it.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> result;
    std::vector<char> seen(images_.size(), 0);
    for (int start = 1; start <= degree(); ++start) {
      if (seen[static_cast<std::size_t>(start - 1)]) continue;
      std::vector<int> cyc;
      int x = start;
      do {
        seen[static_cast<std::size_t>(x - 1)] = 1;
        cyc.push_back(x);
        x = images_[static_cast<std::size_t>(x - 1)];
      } while (x != start);
      if (cyc.size() > 1) result.push_back(std::move(cyc));
    }
    return result;
  }

  int cycle_count_including_fixed() const {
    int count = 0;
    std::vector<char> seen(images_.size(), 0);
    for (int start = 1; start <= degree(); ++start) {
      if (seen[static_cast<std::size_t>(start - 1)]) continue;
      ++count;
      int x = start;
      do {
        seen[static_cast<std::size_t>(x - 1)] = 1;
        x = images_[static_cast<std::size_t>(x - 1)];
      } while (x != start);
    }
    return count;
  }

  std::string cycle_string() const {
    auto cycs = cycles();
    if (cycs.empty()) return "e";
    std::string out;
    for (const auto& cyc : cycs) {
      out += '(';
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(cyc[i]);
      }
      out += ')';
    }
    return out;
  }

  const std::vector<int>& images() const { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}
  std::vector<int> images_;
};

}  // namespace classalg
