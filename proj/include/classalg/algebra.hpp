#pragma once

#include <future>
#include <map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "classalg/conjugacy.hpp"
#include "classalg/errors.hpp"
#include "classalg/local_bijection.hpp"
#include "classalg/partial_bijection.hpp"

namespace classalg {

// Exact integer coefficients. Structure constants are tiny at feasible sizes,
// but nothing here should ever wrap.
using Int = boost::multiprecision::cpp_int;

struct StarOptions {
  int workers = 1;
  int ambient_cap = kDefaultAmbientCap;
};

// An element of the stable class algebra: a finite integer combination of
// conjugacy classes across all ambient sizes of one family.
class AlgebraElement {
 public:
  explicit AlgebraElement(FamilyDescriptor family) : family_(std::move(family)) {}

  static AlgebraElement zero(const FamilyDescriptor& family) { return AlgebraElement(family); }

  static AlgebraElement basis(const ConjugacyClass& c) {
    AlgebraElement u(c.family());
    u.terms_.emplace(c, 1);
    return u;
  }

  // The class of the identity at ambient 0: the multiplicative unit.
  static AlgebraElement unit(const FamilyDescriptor& family) {
    return basis(canonicalize(GroupElement::identity(family, 0)));
  }

  const FamilyDescriptor& family() const { return family_; }
  const std::map<ConjugacyClass, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Int coefficient(const ConjugacyClass& c) const {
    auto it = terms_.find(c);
    return it == terms_.end() ? Int(0) : it->second;
  }

  void add_term(const ConjugacyClass& c, const Int& coeff) {
    if (coeff == 0) return;
    if (c.family() != family_) throw family_mismatch("term from a different family");
    auto [it, inserted] = terms_.emplace(c, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  AlgebraElement& operator+=(const AlgebraElement& rhs) {
    if (rhs.family_ != family_) throw family_mismatch("adding elements of different families");
    for (const auto& [c, a] : rhs.terms_) add_term(c, a);
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& rhs) {
    if (rhs.family_ != family_) throw family_mismatch("subtracting elements of different families");
    for (const auto& [c, a] : rhs.terms_) add_term(c, -a);
    return *this;
  }
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Int& s, const AlgebraElement& u) {
    AlgebraElement out(u.family_);
    if (s != 0)
      for (const auto& [c, a] : u.terms_) out.terms_.emplace(c, s * a);
    return out;
  }
  AlgebraElement operator-() const { return Int(-1) * *this; }

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  FamilyDescriptor family_;
  std::map<ConjugacyClass, Int> terms_;
};

// Glues h onto g along the overlap pattern lambda: {1..k} -> {1..n}, where
// n, k are the ambient sizes of g and h. The columns of g keep their places
// in {1..n+k-rank}, column j of h lands on lambda(j) where defined and the
// unmatched columns of h fill n+1, n+2, ... in order. The result is the class
// of the product (g placed) * (h placed).
inline ConjugacyClass glue(const GroupElement& g, const GroupElement& h,
                           const PartialBijection& lambda, int ambient_cap = kDefaultAmbientCap) {
  if (g.family() != h.family()) throw family_mismatch("gluing elements of different families");
  const int n = g.ambient();
  const int k = h.ambient();
  if (lambda.source() != k || lambda.target() != n)
    throw size_mismatch("overlap pattern must map the second ambient segment into the first");
  const int d = lambda.rank();
  const int m = n + k - d;
  std::vector<int> sigma(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) sigma[static_cast<std::size_t>(j - 1)] = j;
  std::vector<int> tau(static_cast<std::size_t>(k));
  int next_free = n;
  for (int j = 1; j <= k; ++j) {
    if (auto y = lambda.apply(j)) tau[static_cast<std::size_t>(j - 1)] = *y;
    else tau[static_cast<std::size_t>(j - 1)] = ++next_free;
  }
  return canonicalize(g.relocated(sigma, m) * h.relocated(tau, m), ambient_cap);
}

namespace detail {

inline std::map<ConjugacyClass, Int> basis_star(const ConjugacyClass& gc, const ConjugacyClass& hc,
                                                const StarOptions& opt) {
  const auto lambdas = all_partial_bijections(hc.ambient(), gc.ambient());
  auto run = [&](std::size_t begin, std::size_t end) {
    std::map<ConjugacyClass, Int> acc;
    for (std::size_t i = begin; i < end; ++i) {
      auto r = glue(gc.rep(), hc.rep(), lambdas[i], opt.ambient_cap);
      auto [it, inserted] = acc.emplace(std::move(r), 1);
      if (!inserted) ++it->second;
    }
    return acc;
  };
  if (opt.workers <= 1 || lambdas.size() < 2) return run(0, lambdas.size());
  const std::size_t chunks = std::min<std::size_t>(static_cast<std::size_t>(opt.workers), lambdas.size());
  std::vector<std::future<std::map<ConjugacyClass, Int>>> futures;
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t begin = lambdas.size() * c / chunks;
    const std::size_t end = lambdas.size() * (c + 1) / chunks;
    futures.push_back(std::async(std::launch::async, run, begin, end));
  }
  std::map<ConjugacyClass, Int> acc;
  for (auto& f : futures)
    for (auto& [r, m] : f.get()) {
      auto [it, inserted] = acc.emplace(r, m);
      if (!inserted) it->second += m;
    }
  return acc;
}

}  // namespace detail

// The stable product: on basis classes, the sum of glue(g, h, lambda) over
// every overlap pattern lambda; extended bilinearly.
inline AlgebraElement star(const AlgebraElement& u, const AlgebraElement& v,
                           const StarOptions& opt = {}) {
  if (u.family() != v.family()) throw family_mismatch("multiplying elements of different families");
  AlgebraElement out(u.family());
  for (const auto& [gc, a] : u.terms())
    for (const auto& [hc, b] : v.terms()) {
      const Int ab = a * b;
      for (const auto& [r, m] : detail::basis_star(gc, hc, opt)) out.add_term(r, ab * m);
    }
  return out;
}

// Top-degree part of the product: only the disjoint (rank-0) gluing survives.
// Commutative whenever the family has no fixed labels.
inline AlgebraElement graded_product(const AlgebraElement& u, const AlgebraElement& v,
                                     const StarOptions& opt = {}) {
  if (u.family() != v.family()) throw family_mismatch("multiplying elements of different families");
  AlgebraElement out(u.family());
  for (const auto& [gc, a] : u.terms())
    for (const auto& [hc, b] : v.terms()) {
      auto empty = PartialBijection::empty(hc.ambient(), gc.ambient());
      out.add_term(glue(gc.rep(), hc.rep(), empty, opt.ambient_cap), a * b);
    }
  return out;
}

// Degree-(-1) bracket: the rank-1 overlaps of u*v minus those of v*u.
// All terms land one ambient step below the top. Intended for families
// without fixed labels, where it is the leading part of the commutator.
inline AlgebraElement graded_bracket(const AlgebraElement& u, const AlgebraElement& v,
                                     const StarOptions& opt = {}) {
  if (u.family() != v.family()) throw family_mismatch("bracketing elements of different families");
  AlgebraElement out(u.family());
  for (const auto& [gc, a] : u.terms())
    for (const auto& [hc, b] : v.terms()) {
      const Int ab = a * b;
      const int n = gc.ambient();
      const int k = hc.ambient();
      for (int alpha = 1; alpha <= k; ++alpha)
        for (int beta = 1; beta <= n; ++beta) {
          PartialBijection fwd(k, n, {{alpha, beta}});
          PartialBijection bwd(n, k, {{beta, alpha}});
          out.add_term(glue(gc.rep(), hc.rep(), fwd, opt.ambient_cap), ab);
          out.add_term(glue(hc.rep(), gc.rep(), bwd, opt.ambient_cap), -ab);
        }
    }
  return out;
}

// Termwise class inverse; an anti-automorphism of the stable product.
inline AlgebraElement involution(const AlgebraElement& u) {
  AlgebraElement out(u.family());
  for (const auto& [c, a] : u.terms()) out.add_term(class_inverse(c), a);
  return out;
}

// Filtration degree: the largest ambient size appearing in the support.
inline int degree(const AlgebraElement& u) {
  if (u.is_zero()) throw zero_element("the zero element has no degree");
  return u.terms().rbegin()->first.ambient();
}

// The part of u supported on classes of ambient exactly n.
inline AlgebraElement homogeneous_part(const AlgebraElement& u, int n) {
  AlgebraElement out(u.family());
  for (const auto& [c, a] : u.terms())
    if (c.ambient() == n) out.add_term(c, a);
  return out;
}

}  // namespace classalg
