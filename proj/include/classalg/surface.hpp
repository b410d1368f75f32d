#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "classalg/algebra.hpp"
#include "classalg/conjugacy.hpp"
#include "classalg/errors.hpp"

namespace classalg {

// A closed oriented surface tiled by 2N triangles with 3-colored edges:
// N "plus" triangles p_1..p_N and N "minus" triangles m_1..m_N, glued
//   red:    p_i -- m_{red(i)}
//   yellow: p_i -- m_{yellow(i)}
//   blue:   p_i -- m_i
// Equivalent data: a pair of permutations of {1..N}, i.e. an element of the
// two-row product family at ambient N. Unlabeled surfaces are identified with
// the conjugacy class of that pair.
struct CheckerSurface {
  int triangles = 0;  // N
  Permutation red, yellow;
  bool labeled = true;

  CheckerSurface(int n, Permutation r, Permutation y, bool lbl = true)
      : triangles(n), red(std::move(r)), yellow(std::move(y)), labeled(lbl) {
    if (n < 0) throw range_error("negative triangle count");
    if (red.degree() != n || yellow.degree() != n)
      throw degree_mismatch("gluing permutations must have degree N");
  }

  friend bool operator==(const CheckerSurface& a, const CheckerSurface& b) {
    return a.triangles == b.triangles && a.red == b.red && a.yellow == b.yellow;
  }
};

struct ComponentTopology {
  int faces = 0;
  int edges = 0;
  int vertices = 0;
  int euler = 0;
  int genus = 0;
};

struct TopologyReport {
  std::vector<ComponentTopology> components;  // ordered by least triangle label
  int faces = 0;
  int edges = 0;
  int vertices = 0;
  int euler = 0;
};

inline CheckerSurface surface_from_class(const ConjugacyClass& c) {
  if (!(c.family().is_product() && c.family().rows() == 2))
    throw wrong_family("surfaces correspond to classes of the two-row product family");
  return CheckerSurface(c.ambient(), c.rep().rows()[0], c.rep().rows()[1], false);
}

inline ConjugacyClass class_from_surface(const CheckerSurface& s,
                                         int ambient_cap = kDefaultAmbientCap) {
  auto family = FamilyDescriptor::product(2);
  return canonicalize(GroupElement::from_rows(family, s.triangles, {s.red, s.yellow}), ambient_cap);
}

// Euler characteristic and genus per connected component, computed from the
// corner structure. Each triangle contributes three corners; one step of the
// rotation around a vertex crosses one edge, so vertices are the orbits of
//   plus  p_i: RY -> (m_{red(i)}, RY), YB -> (m_{yellow(i)}, YB), BR -> (m_i, BR)
//   minus m_j: RY -> (p_{yellow^{-1}(j)}, RY), YB -> (p_j, YB), BR -> (p_{red^{-1}(j)}, BR)
// on the 6N corners. Components are the orbits of the two gluing permutations
// on triangle labels.
inline TopologyReport surface_topology(const CheckerSurface& s) {
  const int n = s.triangles;
  TopologyReport report;
  if (n == 0) return report;

  // union-find on labels 1..N
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  };
  auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
  for (int i = 1; i <= n; ++i) {
    unite(i - 1, s.red.apply(i) - 1);
    unite(i - 1, s.yellow.apply(i) - 1);
  }

  const auto red_inv = s.red.inverse();
  const auto yellow_inv = s.yellow.inverse();
  // corner id: corner_type * 2N + (minus ? N : 0) + (label - 1)
  auto rotate = [&](int dart) {
    const int corner = dart / (2 * n);
    const int rest = dart % (2 * n);
    const bool minus = rest >= n;
    const int label = rest % n + 1;
    int out_label = 0;
    if (!minus) {
      if (corner == 0) out_label = s.red.apply(label);
      else if (corner == 1) out_label = s.yellow.apply(label);
      else out_label = label;
      return corner * 2 * n + n + (out_label - 1);
    }
    if (corner == 0) out_label = yellow_inv.apply(label);
    else if (corner == 1) out_label = label;
    else out_label = red_inv.apply(label);
    return corner * 2 * n + (out_label - 1);
  };

  std::map<int, int> vertices_per_root;
  std::vector<char> visited(static_cast<std::size_t>(6 * n), 0);
  for (int d = 0; d < 6 * n; ++d) {
    if (visited[static_cast<std::size_t>(d)]) continue;
    int x = d;
    do {
      visited[static_cast<std::size_t>(x)] = 1;
      x = rotate(x);
    } while (x != d);
    ++vertices_per_root[find(d % (2 * n) % n)];
  }

  std::map<int, int> size_per_root;
  for (int i = 0; i < n; ++i) ++size_per_root[find(i)];

  std::map<int, int> first_label;  // least label in each component, for ordering
  for (int i = 0; i < n; ++i) first_label.try_emplace(find(i), i);

  std::vector<std::pair<int, int>> roots(first_label.begin(), first_label.end());
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return a.second < b.second; });

  for (const auto& [root, least] : roots) {
    ComponentTopology comp;
    comp.faces = 2 * size_per_root[root];
    comp.edges = 3 * size_per_root[root];
    comp.vertices = vertices_per_root[root];
    comp.euler = comp.vertices - comp.edges + comp.faces;
    comp.genus = (2 - comp.euler) / 2;
    report.components.push_back(comp);
    report.faces += comp.faces;
    report.edges += comp.edges;
    report.vertices += comp.vertices;
    report.euler += comp.euler;
  }
  return report;
}

// Multiplies two surfaces through the class algebra and returns the expansion
// as (surface, multiplicity) pairs in class order.
inline std::vector<std::pair<CheckerSurface, Int>> surface_star(const CheckerSurface& r,
                                                                const CheckerSurface& q,
                                                                const StarOptions& opt = {}) {
  auto product = star(AlgebraElement::basis(class_from_surface(r, opt.ambient_cap)),
                      AlgebraElement::basis(class_from_surface(q, opt.ambient_cap)), opt);
  std::vector<std::pair<CheckerSurface, Int>> out;
  out.reserve(product.terms().size());
  for (const auto& [c, coeff] : product.terms()) out.emplace_back(surface_from_class(c), coeff);
  return out;
}

}  // namespace classalg
