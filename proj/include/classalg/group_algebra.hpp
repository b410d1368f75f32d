#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "classalg/algebra.hpp"
#include "classalg/conjugacy.hpp"
#include "classalg/errors.hpp"
#include "classalg/local_bijection.hpp"

namespace classalg {

// An integer combination of elements of one finite group G_N. This is the
// brute-force layer: products expand termwise, nothing is identified.
class GroupAlgebraElement {
 public:
  GroupAlgebraElement(FamilyDescriptor family, int ambient)
      : family_(std::move(family)), ambient_(ambient) {}

  static GroupAlgebraElement zero(const FamilyDescriptor& family, int ambient) {
    return GroupAlgebraElement(family, ambient);
  }

  const FamilyDescriptor& family() const { return family_; }
  int ambient() const { return ambient_; }
  const std::map<GroupElement, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Int total_mass() const {
    Int m = 0;
    for (const auto& [g, a] : terms_) m += a;
    return m;
  }

  Int coefficient(const GroupElement& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Int(0) : it->second;
  }

  void add_term(const GroupElement& g, const Int& coeff) {
    if (coeff == 0) return;
    if (g.family() != family_) throw family_mismatch("term from a different family");
    if (g.ambient() != ambient_) throw ambient_mismatch("term at a different ambient size");
    auto [it, inserted] = terms_.emplace(g, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& rhs) {
    if (rhs.family_ != family_) throw family_mismatch("adding elements of different families");
    if (rhs.ambient_ != ambient_) throw ambient_mismatch("adding elements of different ambient sizes");
    for (const auto& [g, a] : rhs.terms_) add_term(g, a);
    return *this;
  }
  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) {
    return a += b;
  }
  friend GroupAlgebraElement operator*(const Int& s, const GroupAlgebraElement& u) {
    GroupAlgebraElement out(u.family_, u.ambient_);
    if (s != 0)
      for (const auto& [g, a] : u.terms_) out.terms_.emplace(g, s * a);
    return out;
  }

  friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

 private:
  FamilyDescriptor family_;
  int ambient_ = 0;
  std::map<GroupElement, Int> terms_;
};

// Same shape over local bijections: terms remember their declared supports.
class LocalBijectionAlgebraElement {
 public:
  LocalBijectionAlgebraElement(FamilyDescriptor family, int ambient)
      : family_(std::move(family)), ambient_(ambient) {}

  static LocalBijectionAlgebraElement zero(const FamilyDescriptor& family, int ambient) {
    return LocalBijectionAlgebraElement(family, ambient);
  }

  const FamilyDescriptor& family() const { return family_; }
  int ambient() const { return ambient_; }
  const std::map<LocalBijection, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Int total_mass() const {
    Int m = 0;
    for (const auto& [t, a] : terms_) m += a;
    return m;
  }

  void add_term(const LocalBijection& t, const Int& coeff) {
    if (coeff == 0) return;
    if (t.family() != family_) throw family_mismatch("term from a different family");
    if (t.ambient() != ambient_) throw ambient_mismatch("term at a different ambient size");
    auto [it, inserted] = terms_.emplace(t, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LocalBijectionAlgebraElement& operator+=(const LocalBijectionAlgebraElement& rhs) {
    if (rhs.family_ != family_) throw family_mismatch("adding elements of different families");
    if (rhs.ambient_ != ambient_) throw ambient_mismatch("adding elements of different ambient sizes");
    for (const auto& [t, a] : rhs.terms_) add_term(t, a);
    return *this;
  }
  friend LocalBijectionAlgebraElement operator+(LocalBijectionAlgebraElement a,
                                                const LocalBijectionAlgebraElement& b) {
    return a += b;
  }
  friend LocalBijectionAlgebraElement operator*(const Int& s, const LocalBijectionAlgebraElement& u) {
    LocalBijectionAlgebraElement out(u.family_, u.ambient_);
    if (s != 0)
      for (const auto& [t, a] : u.terms_) out.terms_.emplace(t, s * a);
    return out;
  }

  friend bool operator==(const LocalBijectionAlgebraElement&,
                         const LocalBijectionAlgebraElement&) = default;

 private:
  FamilyDescriptor family_;
  int ambient_ = 0;
  std::map<LocalBijection, Int> terms_;
};

namespace detail {

// Runs fn once per (subset, arrangement): every size-n subset of {1..N} in
// lexicographic order, every ordering of it. The arrangement lists where the
// source columns 1..n land.
template <typename Fn>
inline void for_each_placement(int big, int small, Fn&& fn) {
  if (small > big) return;
  std::vector<int> subset(static_cast<std::size_t>(small));
  std::iota(subset.begin(), subset.end(), 1);
  for (;;) {
    std::vector<int> arrangement = subset;
    std::sort(arrangement.begin(), arrangement.end());
    do {
      fn(arrangement);
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    // next lexicographic subset
    int i = small - 1;
    while (i >= 0 && subset[static_cast<std::size_t>(i)] == big - (small - 1 - i)) --i;
    if (i < 0) break;
    ++subset[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < small; ++j)
      subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace detail

// The sum of the representative placed on every size-n subset of {1..N} in
// every way: binomial(N,n) * n! terms before collapsing, zero when n > N.
// Independent of the chosen representative.
inline GroupAlgebraElement group_symmetrization(const ConjugacyClass& c, int big_ambient) {
  GroupAlgebraElement out(c.family(), big_ambient);
  detail::for_each_placement(big_ambient, c.ambient(), [&](const std::vector<int>& arrangement) {
    out.add_term(c.rep().relocated(arrangement, big_ambient), 1);
  });
  return out;
}

// Same placements, but each term keeps its landing subset as declared support.
inline LocalBijectionAlgebraElement local_symmetrization(const ConjugacyClass& c, int big_ambient) {
  LocalBijectionAlgebraElement out(c.family(), big_ambient);
  detail::for_each_placement(big_ambient, c.ambient(), [&](const std::vector<int>& arrangement) {
    out.add_term(LocalBijection(c.rep().relocated(arrangement, big_ambient), arrangement), 1);
  });
  return out;
}

inline GroupAlgebraElement convolve(const GroupAlgebraElement& f, const GroupAlgebraElement& g) {
  if (f.family() != g.family()) throw family_mismatch("convolving elements of different families");
  if (f.ambient() != g.ambient()) throw ambient_mismatch("convolving elements of different ambient sizes");
  GroupAlgebraElement out(f.family(), f.ambient());
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms()) out.add_term(a * b, ca * cb);
  return out;
}

inline LocalBijectionAlgebraElement convolve(const LocalBijectionAlgebraElement& f,
                                             const LocalBijectionAlgebraElement& g) {
  if (f.family() != g.family()) throw family_mismatch("convolving elements of different families");
  if (f.ambient() != g.ambient()) throw ambient_mismatch("convolving elements of different ambient sizes");
  LocalBijectionAlgebraElement out(f.family(), f.ambient());
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms()) out.add_term(compose(a, b), ca * cb);
  return out;
}

// Keeps the terms whose support fits inside {1..new_ambient} and reinterprets
// them there. A homomorphism for the convolution product.
inline LocalBijectionAlgebraElement project(const LocalBijectionAlgebraElement& f, int new_ambient) {
  if (new_ambient > f.ambient())
    throw grow_not_allowed("projection target exceeds the current ambient size");
  LocalBijectionAlgebraElement out(f.family(), new_ambient);
  for (const auto& [t, a] : f.terms()) {
    if (!t.support().empty() && t.support().back() > new_ambient) continue;
    out.add_term(LocalBijection(t.trivial_extension().truncated(new_ambient), t.support()), a);
  }
  return out;
}

// Forgets the declared supports, merging terms with equal bodies.
inline GroupAlgebraElement forget_supports(const LocalBijectionAlgebraElement& f) {
  GroupAlgebraElement out(f.family(), f.ambient());
  for (const auto& [t, a] : f.terms()) out.add_term(t.trivial_extension(), a);
  return out;
}

struct StabilityCheck {
  int ambient = 0;
  bool pass = false;
  std::size_t lhs_terms = 0;
  std::size_t rhs_terms = 0;
};

struct StabilityReport {
  FamilyDescriptor family = FamilyDescriptor::product(1);
  ConjugacyClass g, h;
  std::vector<std::pair<ConjugacyClass, Int>> constants;
  std::vector<StabilityCheck> checks;

  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const StabilityCheck& c) { return c.pass; });
  }
};

namespace detail {

inline int verification_guard(const FamilyDescriptor& family) {
  if (family.is_product()) {
    if (family.rows() == 1) return 7;
    if (family.rows() == 2) return 5;
    return 4;
  }
  return std::max(0, 7 - family.fixed_count());
}

}  // namespace detail

// Checks, for each N in [lo, hi], that the convolution of the symmetrized
// classes expands with the N-independent constants computed by the stable
// product. Exact integer comparison on fully expanded elements.
inline StabilityReport verify_stability(const ConjugacyClass& g, const ConjugacyClass& h,
                                        int ambient_lo, int ambient_hi,
                                        bool override_guard = false, const StarOptions& opt = {}) {
  if (g.family() != h.family()) throw family_mismatch("verifying classes of different families");
  if (ambient_lo < 0 || ambient_hi < ambient_lo) throw range_error("bad ambient range");
  if (!override_guard && ambient_hi > detail::verification_guard(g.family()))
    throw resource_guard("stability verification up to ambient " + std::to_string(ambient_hi) +
                         " exceeds the resource guard for family " + g.family().to_string());
  StabilityReport report{g.family(), g, h, {}, {}};
  auto product = star(AlgebraElement::basis(g), AlgebraElement::basis(h), opt);
  report.constants.assign(product.terms().begin(), product.terms().end());
  for (int big = ambient_lo; big <= ambient_hi; ++big) {
    auto lhs = convolve(group_symmetrization(g, big), group_symmetrization(h, big));
    auto rhs = GroupAlgebraElement::zero(g.family(), big);
    for (const auto& [r, coeff] : report.constants) rhs += coeff * group_symmetrization(r, big);
    report.checks.push_back({big, lhs == rhs, lhs.term_count(), rhs.term_count()});
  }
  return report;
}

}  // namespace classalg
