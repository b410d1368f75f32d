#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "classalg/errors.hpp"
#include "classalg/family.hpp"

namespace classalg {

// Largest ambient size canonicalize() will search without an explicit override.
inline constexpr int kDefaultAmbientCap = 10;

// A conjugacy class of G_n under simultaneous column relabeling by S_n.
// Holds the canonical representative (the conjugate whose image-list
// serialization is lexicographically least) and a parseable key string.
class ConjugacyClass {
 public:
  const FamilyDescriptor& family() const { return rep_.family(); }
  int ambient() const { return rep_.ambient(); }
  const GroupElement& rep() const { return rep_; }
  const std::string& key() const { return key_; }

  friend bool operator==(const ConjugacyClass& a, const ConjugacyClass& b) {
    return a.rep_.ambient() == b.rep_.ambient() && a.key_ == b.key_ && a.family() == b.family();
  }
  friend bool operator!=(const ConjugacyClass& a, const ConjugacyClass& b) { return !(a == b); }
  friend bool operator<(const ConjugacyClass& a, const ConjugacyClass& b) {
    if (a.rep_.ambient() != b.rep_.ambient()) return a.rep_.ambient() < b.rep_.ambient();
    return a.serial_ < b.serial_;
  }

 private:
  explicit ConjugacyClass(GroupElement canonical_rep)
      : rep_(std::move(canonical_rep)), serial_(rep_.serialized()), key_(rep_.to_literal()) {}

  friend ConjugacyClass canonicalize(const GroupElement&, int);
  friend std::vector<ConjugacyClass> class_enumerate(const FamilyDescriptor&, int, bool);

  GroupElement rep_;
  std::vector<int> serial_;
  std::string key_;
};

namespace detail {

// Serialization entry `pos` of tau g tau^{-1}, evaluated without building the
// conjugate. Layout matches GroupElement::serialized().
inline int conjugate_entry(const GroupElement& g, const std::vector<int>& tau,
                           const std::vector<int>& tau_inv, int pos) {
  if (g.family().is_product()) {
    const int n = g.ambient();
    const int row = pos / n;
    const int col = pos % n + 1;
    const auto& r = g.rows()[static_cast<std::size_t>(row)];
    return tau[static_cast<std::size_t>(r.apply(tau_inv[static_cast<std::size_t>(col - 1)]) - 1)];
  }
  const int x = g.family().fixed_count();
  const auto& body = g.rows()[0];
  auto remap = [&](int q) { return q <= x ? q : x + tau[static_cast<std::size_t>(q - x - 1)]; };
  if (pos < x) return remap(body.apply(pos + 1));
  const int col = pos - x + 1;
  return remap(body.apply(x + tau_inv[static_cast<std::size_t>(col - 1)]));
}

}  // namespace detail

// Canonical form by exhaustive search over all n! column relabelings, with
// lexicographic pruning: a candidate is abandoned at the first serialization
// entry that exceeds the best found so far.
inline ConjugacyClass canonicalize(const GroupElement& g, int ambient_cap = kDefaultAmbientCap) {
  const int n = g.ambient();
  if (n > ambient_cap)
    throw cap_exceeded("canonical form at ambient " + std::to_string(n) + " exceeds cap " +
                       std::to_string(ambient_cap));
  std::vector<int> best = g.serialized();
  if (n > 1) {
    std::vector<int> tau(static_cast<std::size_t>(n));
    std::iota(tau.begin(), tau.end(), 1);
    std::vector<int> tau_inv(static_cast<std::size_t>(n));
    const int len = static_cast<int>(best.size());
    while (std::next_permutation(tau.begin(), tau.end())) {
      for (int j = 0; j < n; ++j) tau_inv[static_cast<std::size_t>(tau[static_cast<std::size_t>(j)] - 1)] = j + 1;
      int pos = 0;
      for (; pos < len; ++pos) {
        const int v = detail::conjugate_entry(g, tau, tau_inv, pos);
        if (v != best[static_cast<std::size_t>(pos)]) {
          if (v < best[static_cast<std::size_t>(pos)]) {
            // prefix already equals best; adopt the rest of this candidate
            best[static_cast<std::size_t>(pos)] = v;
            for (int q = pos + 1; q < len; ++q)
              best[static_cast<std::size_t>(q)] = detail::conjugate_entry(g, tau, tau_inv, q);
          }
          break;
        }
      }
    }
  }
  // Rebuild the representative from the winning serialization.
  std::vector<Permutation> rows;
  if (g.family().is_product()) {
    for (int r = 0; r < g.family().rows(); ++r)
      rows.push_back(Permutation::from_images(std::vector<int>(
          best.begin() + r * n, best.begin() + (r + 1) * n)));
  } else {
    rows.push_back(Permutation::from_images(best));
  }
  return ConjugacyClass(GroupElement::from_rows(g.family(), n, std::move(rows)));
}

// All distinct conjugates of g under column relabeling, sorted.
inline std::vector<GroupElement> conjugacy_orbit(const GroupElement& g) {
  const int n = g.ambient();
  std::vector<GroupElement> orbit;
  std::vector<int> tau(static_cast<std::size_t>(n));
  std::iota(tau.begin(), tau.end(), 1);
  do {
    orbit.push_back(g.relocated(tau, n));
  } while (std::next_permutation(tau.begin(), tau.end()));
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

namespace detail {

inline std::int64_t enumeration_order(const FamilyDescriptor& family, int n) {
  auto factorial = [](int k) {
    std::int64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  if (family.is_product()) {
    std::int64_t total = 1;
    for (int r = 0; r < family.rows(); ++r) total *= factorial(n);
    return total;
  }
  return factorial(family.fixed_count() + n);
}

inline int enumeration_guard(const FamilyDescriptor& family, int /*n*/) {
  if (family.is_product()) {
    if (family.rows() == 1) return 6;
    if (family.rows() == 2) return 5;
    return 4;
  }
  return std::max(0, 7 - family.fixed_count());
}

template <typename Fn>
inline void for_each_element(const FamilyDescriptor& family, int n, Fn&& fn) {
  if (family.is_product()) {
    std::vector<std::vector<int>> images(static_cast<std::size_t>(family.rows()));
    for (auto& im : images) {
      im.resize(static_cast<std::size_t>(n));
      std::iota(im.begin(), im.end(), 1);
    }
    // Odometer over the rows, each running through all n! image lists.
    for (;;) {
      std::vector<Permutation> rows;
      rows.reserve(images.size());
      for (const auto& im : images) rows.push_back(Permutation::from_images(im));
      fn(GroupElement::from_rows(family, n, std::move(rows)));
      std::size_t r = 0;
      while (r < images.size() && !std::next_permutation(images[r].begin(), images[r].end())) ++r;
      if (r == images.size()) break;
    }
  } else {
    std::vector<int> im(static_cast<std::size_t>(family.fixed_count() + n));
    std::iota(im.begin(), im.end(), 1);
    do {
      fn(GroupElement::from_rows(family, n, {Permutation::from_images(im)}));
    } while (std::next_permutation(im.begin(), im.end()));
  }
}

}  // namespace detail

// All conjugacy classes of G_n, in class order. Guarded: full enumeration of
// G_n is only feasible for small n (override to go past the default guard).
inline std::vector<ConjugacyClass> class_enumerate(const FamilyDescriptor& family, int n,
                                                   bool override_guard = false) {
  if (n < 0) throw range_error("negative ambient size");
  if (!override_guard && n > detail::enumeration_guard(family, n))
    throw cap_exceeded("class enumeration at ambient " + std::to_string(n) +
                       " exceeds the resource guard for family " + family.to_string());
  std::map<std::vector<int>, char> seen;
  std::vector<ConjugacyClass> classes;
  detail::for_each_element(family, n, [&](const GroupElement& g) {
    auto serial = g.serialized();
    if (seen.contains(serial)) return;
    auto orbit = conjugacy_orbit(g);
    for (const auto& h : orbit) seen.emplace(h.serialized(), 1);
    classes.push_back(ConjugacyClass(orbit.front()));  // least conjugate = canonical rep
  });
  std::sort(classes.begin(), classes.end());
  return classes;
}

// The class of the inverses: an involution on the set of classes.
inline ConjugacyClass class_inverse(const ConjugacyClass& c) {
  return canonicalize(c.rep().inverse(), std::max(kDefaultAmbientCap, c.ambient()));
}

}  // namespace classalg
