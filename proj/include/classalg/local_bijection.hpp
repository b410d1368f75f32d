#pragma once

#include <algorithm>
#include <compare>
#include <vector>

#include "classalg/errors.hpp"
#include "classalg/family.hpp"

namespace classalg {

// A bijection with a declared column support: a pair (body, Omega) where
// Omega is a subset of the ambient columns {1..N} and the body is an element
// of the group over X u (rows x Omega), stored as its trivial extension to
// ambient N. The support is part of the identity: two local bijections with
// equal bodies but different declared supports are different terms.
class LocalBijection {
 public:
  LocalBijection(GroupElement body, std::vector<int> support)
      : body_(std::move(body)), support_(std::move(support)) {
    std::sort(support_.begin(), support_.end());
    support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
    for (int c : support_)
      if (c < 1 || c > body_.ambient()) throw range_error("support column out of range");
    for (int c : body_.moved_columns())
      if (!std::binary_search(support_.begin(), support_.end(), c))
        throw range_error("body moves a column outside the declared support");
  }

  static LocalBijection unit(const FamilyDescriptor& family, int ambient) {
    return LocalBijection(GroupElement::identity(family, ambient), {});
  }

  const FamilyDescriptor& family() const { return body_.family(); }
  int ambient() const { return body_.ambient(); }
  const std::vector<int>& support() const { return support_; }

  // The body as a group element of the full ambient set (forgets the support).
  const GroupElement& trivial_extension() const { return body_; }

  friend bool operator==(const LocalBijection&, const LocalBijection&) = default;
  friend std::strong_ordering operator<=>(const LocalBijection& a, const LocalBijection& b) {
    if (auto c = a.support_ <=> b.support_; c != 0) return c;
    return a.body_ <=> b.body_;
  }

 private:
  GroupElement body_;
  std::vector<int> support_;
};

// Product of local bijections: compose the bodies, union the supports.
inline LocalBijection compose(const LocalBijection& a, const LocalBijection& b) {
  if (a.family() != b.family()) throw family_mismatch("composing local bijections of different families");
  if (a.ambient() != b.ambient()) throw ambient_mismatch("composing local bijections of different ambient sizes");
  std::vector<int> support;
  std::set_union(a.support().begin(), a.support().end(), b.support().begin(), b.support().end(),
                 std::back_inserter(support));
  return LocalBijection(a.trivial_extension() * b.trivial_extension(), std::move(support));
}

// Conjugation by a column relabeling: relocates the support and the body.
inline LocalBijection conjugated(const LocalBijection& a, const Permutation& sigma) {
  if (sigma.degree() != a.ambient()) throw degree_mismatch("conjugator degree does not match ambient size");
  std::vector<int> support;
  support.reserve(a.support().size());
  for (int c : a.support()) support.push_back(sigma.apply(c));
  return LocalBijection(a.trivial_extension().conjugated_by_columns(sigma), std::move(support));
}

}  // namespace classalg
