#pragma once

#include <numeric>
#include <random>
#include <vector>

#include "classalg/classalg.hpp"

namespace testhelp {

inline std::vector<classalg::Permutation> all_permutations(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  std::vector<classalg::Permutation> out;
  do {
    out.push_back(classalg::Permutation::from_images(im));
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

inline classalg::Permutation random_permutation(std::mt19937& rng, int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  std::shuffle(im.begin(), im.end(), rng);
  return classalg::Permutation::from_images(std::move(im));
}

inline classalg::GroupElement random_element(std::mt19937& rng,
                                             const classalg::FamilyDescriptor& family, int n) {
  std::vector<classalg::Permutation> rows;
  if (family.is_product()) {
    for (int r = 0; r < family.rows(); ++r) rows.push_back(random_permutation(rng, n));
  } else {
    rows.push_back(random_permutation(rng, family.fixed_count() + n));
  }
  return classalg::GroupElement::from_rows(family, n, std::move(rows));
}

// Conjugacy test by brute force: exists tau with tau a tau^{-1} = b?
inline bool same_class_brute(const classalg::GroupElement& a, const classalg::GroupElement& b) {
  if (a.family() != b.family() || a.ambient() != b.ambient()) return false;
  for (const auto& tau : all_permutations(a.ambient()))
    if (a.conjugated_by_columns(tau) == b) return true;
  return false;
}

inline long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

// Orbits of S_n x ... x S_n (m factors) under simultaneous conjugation,
// counted by Burnside: (1/n!) * sum_tau |C(tau)|^m over tau in S_n.
inline long long burnside_tuple_classes(int n, int m) {
  const auto perms = all_permutations(n);
  long long total = 0;
  for (const auto& tau : perms) {
    long long centralizer = 0;
    for (const auto& sigma : perms)
      if (tau * sigma == sigma * tau) ++centralizer;
    long long fixed = 1;
    for (int i = 0; i < m; ++i) fixed *= centralizer;
    total += fixed;
  }
  return total / factorial(n);
}

}  // namespace testhelp
