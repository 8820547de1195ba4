#pragma once

#include <hyperend/exactalg/integer.hpp>
#include <hyperend/permgrp/permutation.hpp>

#include <algorithm>
#include <cstddef>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperend {

inline constexpr std::size_t kGroupOrderCap = 1000000;

// Finite permutation group held as its full, sorted element list.
class PermutationGroup {
 public:
  PermutationGroup() = default;

  int degree() const { return n_; }
  std::size_t order() const { return elems_.size(); }
  const std::vector<Permutation>& generators() const { return gens_; }
  const std::vector<Permutation>& elements() const { return elems_; }

  bool contains(const Permutation& p) const { return std::binary_search(elems_.begin(), elems_.end(), p); }

  friend PermutationGroup closure(int n, std::vector<Permutation> generators, std::size_t cap);

 private:
  int n_ = 0;
  std::vector<Permutation> gens_;
  std::vector<Permutation> elems_;
};

// Breadth-first closure under right multiplication by generators.
inline PermutationGroup closure(int n, std::vector<Permutation> generators, std::size_t cap = kGroupOrderCap) {
  for (auto& g : generators)
    if (g.degree() != n) throw std::invalid_argument("generators of different degree");
  PermutationGroup G;
  G.n_ = n;
  G.gens_ = generators;
  std::set<Permutation> seen{Permutation::identity(n)};
  std::deque<Permutation> queue{Permutation::identity(n)};
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    for (auto& g : generators) {
      Permutation y = x * g;
      if (seen.insert(y).second) {
        if (seen.size() > cap) throw std::length_error("group order cap exceeded");
        queue.push_back(std::move(y));
      }
    }
  }
  G.elems_.assign(seen.begin(), seen.end());
  return G;
}

inline PermutationGroup closure(const std::vector<Permutation>& generators) {
  if (generators.empty()) throw std::invalid_argument("closure needs a generator");
  return closure(generators.front().degree(), generators);
}

// Orbits of the group generated by gens on {0..n-1}, each sorted, listed by least element.
inline std::vector<std::vector<int>> orbits(int n, const std::vector<Permutation>& gens) {
  std::vector<int> label(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    std::vector<int> orb{s};
    label[s] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < orb.size(); ++i)
      for (auto& g : gens) {
        int t = g(orb[i]);
        if (label[t] < 0) {
          label[t] = label[s];
          orb.push_back(t);
        }
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

inline bool is_transitive(const PermutationGroup& G) {
  if (G.degree() == 0) return true;
  return orbits(G.degree(), G.elements()).size() == 1;
}

inline std::vector<Permutation> stabilizer(const PermutationGroup& G, int b) {
  std::vector<Permutation> s;
  for (auto& g : G.elements())
    if (g(b) == b) s.push_back(g);
  return s;
}

// Orbit count of G_b on the points other than b.
inline int point_stabilizer_orbits(const PermutationGroup& G, int b) {
  return static_cast<int>(orbits(G.degree(), stabilizer(G, b)).size()) - 1;
}

inline int stabilizer_orbit_count(const PermutationGroup& G) {
  if (!is_transitive(G)) throw std::domain_error("group is not transitive");
  const int s = point_stabilizer_orbits(G, 0);
  for (int b = 1; b < G.degree(); ++b)
    if (point_stabilizer_orbits(G, b) != s) throw std::logic_error("stabilizer orbit count depends on base point");
  return s;
}

struct BurnsideCount {
  int orbits = 0;       // by direct enumeration
  Rational burnside;    // (1/|U_b|) sum over U_b of fixed points on X minus b
};

inline BurnsideCount burnside_orbits(const PermutationGroup& U, int b) {
  if (!is_transitive(U)) throw std::domain_error("group is not transitive");
  if (b < 0 || b >= U.degree()) throw std::invalid_argument("base point out of range");
  auto Ub = stabilizer(U, b);
  long fix_sum = 0;
  for (auto& g : Ub) fix_sum += g.fixed_points() - 1;
  BurnsideCount out;
  out.orbits = point_stabilizer_orbits(U, b);
  out.burnside = Rational(fix_sum, static_cast<long>(Ub.size()));
  out.burnside.canonicalize();
  if (out.burnside != out.orbits) throw std::logic_error("Burnside count disagrees with enumeration");
  return out;
}

struct FrobeniusInfo {
  bool frobenius = false;
  std::size_t kernel_order = 0;
  std::size_t complement_order = 0;
  bool sharply_2_transitive = false;
};

// Transitive, point stabiliser nontrivial, and no nonidentity element fixes two points.
inline FrobeniusInfo is_frobenius(const PermutationGroup& G) {
  FrobeniusInfo info;
  if (!is_transitive(G)) return info;
  std::size_t fixed_point_free = 0;
  for (auto& g : G.elements()) {
    const int fp = g.fixed_points();
    if (g.is_identity()) continue;
    if (fp >= 2) return info;
    if (fp == 0) ++fixed_point_free;
  }
  const std::size_t complement = stabilizer(G, 0).size();
  if (complement < 2) return info;
  info.frobenius = true;
  info.kernel_order = fixed_point_free + 1;
  info.complement_order = complement;
  const std::size_t n = static_cast<std::size_t>(G.degree());
  info.sharply_2_transitive = G.order() == n * (n - 1);
  return info;
}

// Standard transitive groups on Z/n.

inline Permutation translation(int n, int b) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = (i + b) % n;
  return Permutation(std::move(v));
}

inline Permutation multiplication(int q, int a) {
  std::vector<int> v(q);
  for (int i = 0; i < q; ++i) v[i] = static_cast<int>((static_cast<long>(i) * a) % q);
  return Permutation(std::move(v));
}

inline PermutationGroup cyclic_group(int n) { return closure(n, {translation(n, 1)}); }

inline PermutationGroup dihedral_group(int n) {
  std::vector<int> r(n);
  for (int i = 0; i < n; ++i) r[i] = (n - i) % n;
  return closure(n, {translation(n, 1), Permutation(std::move(r))});
}

inline PermutationGroup symmetric_group(int n) {
  if (n < 2) return closure(std::max(n, 1), {Permutation::identity(std::max(n, 1))});
  return closure(n, {Permutation::from_cycles(n, {{0, 1}}), translation(n, 1)});
}

// x -> a x + b over F_q with a ranging over the index-d subgroup of F_q^*.
inline PermutationGroup affine_subgroup(int q, int d = 1) {
  if (!is_prime_u64(static_cast<std::uint64_t>(q))) throw std::invalid_argument("affine group needs a prime");
  if (d < 1 || (q - 1) % d) throw std::invalid_argument("index must divide q-1");
  const auto g = primitive_root(static_cast<std::uint64_t>(q));
  const auto a = powmod(g, static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(q));
  return closure(q, {translation(q, 1), multiplication(q, static_cast<int>(a))});
}

inline PermutationGroup affine_group(int q) { return affine_subgroup(q, 1); }

}  // namespace hyperend
