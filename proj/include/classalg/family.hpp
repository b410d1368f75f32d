#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "classalg/errors.hpp"
#include "classalg/permutation.hpp"

namespace classalg {

// A group family acting on a table of points X u (rows x columns).
//
// Two shapes are supported:
//   * Product(m): no fixed part, m independent rows; an element of G_n is an
//     m-tuple of permutations of the n columns.
//   * Full(X):    one row plus a finite set X of fixed labels; an element of
//     G_n is any permutation of X u {columns 1..n}.
//
// In both cases the reference subgroup K_n is S_n acting on all rows
// simultaneously by column relabeling and fixing X pointwise.
class FamilyDescriptor {
 public:
  enum class Kind { product, full };

  static FamilyDescriptor product(int rows) {
    if (rows < 1) throw range_error("a product family needs at least one row");
    FamilyDescriptor f;
    f.kind_ = Kind::product;
    f.rows_ = rows;
    return f;
  }

  static FamilyDescriptor full(std::vector<std::string> labels) {
    for (const auto& l : labels) validate_label(l);
    for (std::size_t i = 0; i < labels.size(); ++i)
      for (std::size_t j = i + 1; j < labels.size(); ++j)
        if (labels[i] == labels[j]) throw duplicate_entry("repeated label '" + labels[i] + "'");
    FamilyDescriptor f;
    f.kind_ = Kind::full;
    f.rows_ = 1;
    f.labels_ = std::move(labels);
    return f;
  }

  Kind kind() const { return kind_; }
  bool is_product() const { return kind_ == Kind::product; }
  bool is_full() const { return kind_ == Kind::full; }
  int rows() const { return rows_; }
  const std::vector<std::string>& labels() const { return labels_; }
  int fixed_count() const { return static_cast<int>(labels_.size()); }

  // 1-based index of a label, 0 if unknown.
  int label_index(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return static_cast<int>(i) + 1;
    return 0;
  }

  // Family literal: "s1", "s2", "sm:<m>", "full:<l1,l2,...>".
  std::string to_string() const {
    if (is_product()) {
      if (rows_ == 1) return "s1";
      if (rows_ == 2) return "s2";
      return "sm:" + std::to_string(rows_);
    }
    std::string out = "full:";
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (i) out += ',';
      out += labels_[i];
    }
    return out;
  }

  friend bool operator==(const FamilyDescriptor&, const FamilyDescriptor&) = default;
  friend std::strong_ordering operator<=>(const FamilyDescriptor&, const FamilyDescriptor&) = default;

 private:
  static void validate_label(const std::string& l) {
    if (l.empty()) throw parse_error("empty label");
    if (!std::isalpha(static_cast<unsigned char>(l[0])) && l[0] != '_')
      throw parse_error("label '" + l + "' must start with a letter or underscore");
    for (char c : l)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        throw parse_error("label '" + l + "' contains an invalid character");
  }

  Kind kind_ = Kind::product;
  int rows_ = 1;
  std::vector<std::string> labels_;
};

// A point of the acting set: either a table cell (row, column) or a fixed label.
class Point {
 public:
  static Point column(int row, int col) {
    Point p;
    p.is_column_ = true;
    p.row_ = row;
    p.col_ = col;
    return p;
  }
  static Point fixed(std::string label) {
    Point p;
    p.is_column_ = false;
    p.label_ = std::move(label);
    return p;
  }

  bool is_column() const { return is_column_; }
  int row() const { return row_; }
  int col() const { return col_; }
  const std::string& label() const { return label_; }

  std::string to_string() const {
    if (is_column_) return "(" + std::to_string(row_) + "," + std::to_string(col_) + ")";
    return label_;
  }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  bool is_column_ = true;
  int row_ = 0, col_ = 0;
  std::string label_;
};

// An element of G_n for some family and ambient size n.
//
// Product(m) elements hold one permutation of degree n per row. Full(X)
// elements hold a single permutation of degree |X| + n over the combined
// index space in which indices 1..|X| are the labels (in declaration order)
// and |X| + j is column j.
class GroupElement {
 public:
  static GroupElement identity(const FamilyDescriptor& family, int ambient) {
    if (ambient < 0) throw range_error("negative ambient size");
    std::vector<Permutation> rows;
    if (family.is_product()) {
      rows.assign(static_cast<std::size_t>(family.rows()), Permutation::identity(ambient));
    } else {
      rows.push_back(Permutation::identity(family.fixed_count() + ambient));
    }
    return GroupElement(family, ambient, std::move(rows));
  }

  static GroupElement from_rows(const FamilyDescriptor& family, int ambient,
                                std::vector<Permutation> rows) {
    if (ambient < 0) throw range_error("negative ambient size");
    if (family.is_product()) {
      if (static_cast<int>(rows.size()) != family.rows())
        throw size_mismatch("expected " + std::to_string(family.rows()) + " rows");
      for (const auto& r : rows)
        if (r.degree() != ambient) throw degree_mismatch("row degree does not match ambient size");
    } else {
      if (rows.size() != 1) throw size_mismatch("full family elements have a single permutation");
      if (rows[0].degree() != family.fixed_count() + ambient)
        throw degree_mismatch("permutation degree does not match |X| + ambient");
    }
    return GroupElement(family, ambient, std::move(rows));
  }

  const FamilyDescriptor& family() const { return family_; }
  int ambient() const { return ambient_; }
  const std::vector<Permutation>& rows() const { return rows_; }

  Point apply(const Point& p) const {
    if (family_.is_product()) {
      if (!p.is_column()) throw point_out_of_range("product families have no fixed labels");
      if (p.row() < 1 || p.row() > family_.rows()) throw point_out_of_range("row out of range");
      if (p.col() < 1 || p.col() > ambient_) throw point_out_of_range("column out of range");
      return Point::column(p.row(), rows_[static_cast<std::size_t>(p.row() - 1)].apply(p.col()));
    }
    const int x = family_.fixed_count();
    int idx;
    if (p.is_column()) {
      if (p.row() != 1) throw point_out_of_range("row out of range");
      if (p.col() < 1 || p.col() > ambient_) throw point_out_of_range("column out of range");
      idx = x + p.col();
    } else {
      idx = family_.label_index(p.label());
      if (idx == 0) throw point_out_of_range("unknown label '" + p.label() + "'");
    }
    const int out = rows_[0].apply(idx);
    if (out <= x) return Point::fixed(family_.labels()[static_cast<std::size_t>(out - 1)]);
    return Point::column(1, out - x);
  }

  // Trivial extension to a larger ambient size.
  GroupElement embedded(int new_ambient) const {
    if (new_ambient < ambient_) throw shrink_not_allowed("cannot embed into a smaller ambient size");
    std::vector<Permutation> rows;
    rows.reserve(rows_.size());
    if (family_.is_product()) {
      for (const auto& r : rows_) rows.push_back(r.embedded(new_ambient));
    } else {
      rows.push_back(rows_[0].embedded(family_.fixed_count() + new_ambient));
    }
    return GroupElement(family_, new_ambient, std::move(rows));
  }

  // Restriction to a smaller ambient size; every dropped column must be fixed.
  GroupElement truncated(int new_ambient) const {
    if (new_ambient > ambient_) throw grow_not_allowed("truncation cannot enlarge the ambient size");
    if (new_ambient == ambient_) return *this;
    for (int c : moved_columns())
      if (c > new_ambient) throw size_mismatch("truncation would drop a moved column");
    std::vector<Permutation> rows;
    rows.reserve(rows_.size());
    const int keep = family_.is_product() ? new_ambient : family_.fixed_count() + new_ambient;
    for (const auto& r : rows_) {
      std::vector<int> im(r.images().begin(), r.images().begin() + keep);
      rows.push_back(Permutation::from_images(std::move(im)));
    }
    return GroupElement(family_, new_ambient, std::move(rows));
  }

  GroupElement operator*(const GroupElement& rhs) const {
    if (family_ != rhs.family_) throw family_mismatch("multiplying elements of different families");
    if (ambient_ != rhs.ambient_) throw ambient_mismatch("multiplying elements of different ambient sizes");
    std::vector<Permutation> rows;
    rows.reserve(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) rows.push_back(rows_[i] * rhs.rows_[i]);
    return GroupElement(family_, ambient_, std::move(rows));
  }

  GroupElement inverse() const {
    std::vector<Permutation> rows;
    rows.reserve(rows_.size());
    for (const auto& r : rows_) rows.push_back(r.inverse());
    return GroupElement(family_, ambient_, std::move(rows));
  }

  // Conjugation by a column relabeling tau in S_n (applied to all rows, fixing X).
  GroupElement conjugated_by_columns(const Permutation& tau) const {
    if (tau.degree() != ambient_) throw degree_mismatch("conjugator degree does not match ambient size");
    return relocated(tau.images(), ambient_);
  }

  // Places the element on the columns target[0..n-1] of a (possibly larger)
  // ambient set of size N, fixing everything else. target must be injective;
  // with a bijective target this is conjugation by that relabeling.
  GroupElement relocated(const std::vector<int>& target, int new_ambient) const {
    if (static_cast<int>(target.size()) != ambient_)
      throw size_mismatch("relocation target must list one column per source column");
    std::vector<char> seen(static_cast<std::size_t>(new_ambient), 0);
    for (int v : target) {
      if (v < 1 || v > new_ambient) throw range_error("relocation target out of range");
      if (seen[static_cast<std::size_t>(v - 1)]) throw duplicate_entry("relocation target repeats a column");
      seen[static_cast<std::size_t>(v - 1)] = 1;
    }
    std::vector<Permutation> rows;
    rows.reserve(rows_.size());
    if (family_.is_product()) {
      for (const auto& r : rows_) {
        std::vector<int> im(static_cast<std::size_t>(new_ambient));
        for (int c = 1; c <= new_ambient; ++c) im[static_cast<std::size_t>(c - 1)] = c;
        for (int j = 1; j <= ambient_; ++j)
          im[static_cast<std::size_t>(target[static_cast<std::size_t>(j - 1)] - 1)] =
              target[static_cast<std::size_t>(r.apply(j) - 1)];
        rows.push_back(Permutation::from_images(std::move(im)));
      }
    } else {
      const int x = family_.fixed_count();
      auto remap = [&](int q) { return q <= x ? q : x + target[static_cast<std::size_t>(q - x - 1)]; };
      std::vector<int> im(static_cast<std::size_t>(x + new_ambient));
      for (int c = 1; c <= x + new_ambient; ++c) im[static_cast<std::size_t>(c - 1)] = c;
      for (int p = 1; p <= x; ++p) im[static_cast<std::size_t>(p - 1)] = remap(rows_[0].apply(p));
      for (int j = 1; j <= ambient_; ++j)
        im[static_cast<std::size_t>(x + target[static_cast<std::size_t>(j - 1)] - 1)] =
            remap(rows_[0].apply(x + j));
      rows.push_back(Permutation::from_images(std::move(im)));
    }
    return GroupElement(family_, new_ambient, std::move(rows));
  }

  // Columns not fixed by the element (for Full this includes columns sent to labels).
  std::vector<int> moved_columns() const {
    std::vector<int> moved;
    if (family_.is_product()) {
      for (int c = 1; c <= ambient_; ++c)
        for (const auto& r : rows_)
          if (r.apply(c) != c) { moved.push_back(c); break; }
    } else {
      const int x = family_.fixed_count();
      for (int c = 1; c <= ambient_; ++c)
        if (rows_[0].apply(x + c) != x + c) moved.push_back(c);
    }
    return moved;
  }

  bool is_identity() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const Permutation& r) { return r.is_identity(); });
  }

  // Image lists, fixed part first: the string used for canonical-form comparison.
  std::vector<int> serialized() const {
    std::vector<int> out;
    for (const auto& r : rows_) out.insert(out.end(), r.images().begin(), r.images().end());
    return out;
  }

  // Element literal: cycle notation per row joined by '|', optionally "@n".
  std::string to_literal(bool with_ambient = true) const {
    std::string out;
    if (family_.is_product()) {
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) out += '|';
        out += rows_[i].cycle_string();
      }
    } else {
      const int x = family_.fixed_count();
      auto cycs = rows_[0].cycles();
      if (cycs.empty()) {
        out = "e";
      } else {
        for (const auto& cyc : cycs) {
          out += '(';
          for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (i) out += ' ';
            if (cyc[i] <= x) out += family_.labels()[static_cast<std::size_t>(cyc[i] - 1)];
            else out += std::to_string(cyc[i] - x);
          }
          out += ')';
        }
      }
    }
    if (with_ambient) out += "@" + std::to_string(ambient_);
    return out;
  }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
    if (auto c = a.family_ <=> b.family_; c != 0) return c;
    if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
    return a.rows_ <=> b.rows_;
  }

 private:
  GroupElement(FamilyDescriptor family, int ambient, std::vector<Permutation> rows)
      : family_(std::move(family)), ambient_(ambient), rows_(std::move(rows)) {}

  FamilyDescriptor family_;
  int ambient_ = 0;
  std::vector<Permutation> rows_;
};

}  // namespace classalg
