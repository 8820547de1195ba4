#include <hyperend/permgrp/group.hpp>
#include <hyperend/permgrp/permutation.hpp>
#include <hyperend/exactalg/integer.hpp>

#include <gtest/gtest.h>

#include <functional>
#include <numeric>
#include <set>

using namespace hyperend;

namespace {

Permutation C(int n, std::vector<std::vector<int>> cycles) { return Permutation::from_cycles(n, cycles); }

using Images = std::vector<int>;

// Naive closure: multiply every known element by every generator until nothing new appears.
std::set<Images> naive_closure(int n, const std::vector<Images>& gens) {
  Images id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<Images> all{id};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Images> cur(all.begin(), all.end());
    for (auto& x : cur)
      for (auto& g : gens) {
        Images y(n);
        for (int i = 0; i < n; ++i) y[i] = g[x[i]];
        grew = all.insert(y).second || grew;
      }
  }
  return all;
}

// Orbits of {x : x(b) = b} on the other points, by union-find over the element list.
int direct_orbit_count(const std::set<Images>& G, int n, int b) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
  for (auto& g : G)
    if (g[b] == b)
      for (int i = 0; i < n; ++i) parent[find(i)] = find(g[i]);
  std::set<int> roots;
  for (int i = 0; i < n; ++i)
    if (i != b) roots.insert(find(i));
  return static_cast<int>(roots.size());
}

Images images_of(const Permutation& p) {
  Images v(p.degree());
  for (int i = 0; i < p.degree(); ++i) v[i] = p(i);
  return v;
}

std::set<Images> element_set(const PermutationGroup& G) {
  std::set<Images> s;
  for (auto& g : G.elements()) s.insert(images_of(g));
  return s;
}

}  // namespace

TEST(Closure, Examples) {
  EXPECT_EQ(closure(5, {C(5, {{0, 1, 2, 3, 4}})}).order(), 5u);
  EXPECT_EQ(closure(5, {C(5, {{0, 1, 2, 3, 4}}), C(5, {{1, 2, 4, 3}})}).order(), 20u);
  EXPECT_EQ(closure(5, {C(5, {{0, 1}}), C(5, {{0, 1, 2, 3, 4}})}).order(), 120u);
  EXPECT_THROW(closure(9, {C(9, {{0, 1}}), C(9, {{0, 1, 2, 3, 4, 5, 6, 7, 8}})}, 1000), std::length_error);
}

TEST(Closure, MatchesNaiveClosure) {
  const std::vector<PermutationGroup> groups{cyclic_group(7), dihedral_group(7), affine_group(7), affine_subgroup(11, 2),
                                            symmetric_group(5), affine_subgroup(13, 4)};
  for (auto& G : groups) {
    std::vector<Images> gens;
    for (auto& g : G.generators()) gens.push_back(images_of(g));
    EXPECT_EQ(element_set(G), naive_closure(G.degree(), gens));
  }
}

TEST(StabilizerOrbitCount, Examples) {
  EXPECT_EQ(stabilizer_orbit_count(affine_group(5)), 1);
  EXPECT_EQ(stabilizer_orbit_count(dihedral_group(5)), 2);
  EXPECT_EQ(stabilizer_orbit_count(cyclic_group(5)), 4);
  EXPECT_THROW(stabilizer_orbit_count(closure(5, {C(5, {{0, 1}})})), std::domain_error);
}

TEST(BurnsideOrbits, Examples) {
  EXPECT_EQ(burnside_orbits(affine_group(5), 0).orbits, 1);
  EXPECT_EQ(burnside_orbits(dihedral_group(5), 2).orbits, 2);
  EXPECT_EQ(burnside_orbits(cyclic_group(5), 4).orbits, 4);
  EXPECT_THROW(burnside_orbits(closure(5, {C(5, {{0, 1}})}), 0), std::domain_error);
}

TEST(BurnsideOrbits, AgreesWithDirectEnumeration) {
  std::vector<PermutationGroup> groups;
  for (int q : {5, 7})
    for (auto d : divisors(static_cast<std::uint64_t>(q - 1))) groups.push_back(affine_subgroup(q, static_cast<int>(d)));
  groups.push_back(dihedral_group(7));
  groups.push_back(cyclic_group(11));
  for (auto& G : groups) {
    const auto elems = element_set(G);
    for (int b = 0; b < G.degree(); ++b) {
      auto bc = burnside_orbits(G, b);
      EXPECT_EQ(bc.orbits, direct_orbit_count(elems, G.degree(), b));
      EXPECT_EQ(bc.burnside, Rational(bc.orbits));
    }
  }
}

TEST(BurnsideOrbits, IndexDSubgroupOfAffineGroupHasDOrbits) {
  for (int q : {5, 7, 11, 13})
    for (auto d : divisors(static_cast<std::uint64_t>(q - 1))) {
      auto U = affine_subgroup(q, static_cast<int>(d));
      EXPECT_EQ(U.order(), static_cast<std::size_t>(q * (q - 1) / static_cast<int>(d)));
      EXPECT_EQ(burnside_orbits(U, 0).orbits, static_cast<int>(d)) << "q=" << q << " d=" << d;
    }
}

TEST(IsFrobenius, Examples) {
  auto f5 = is_frobenius(affine_group(5));
  EXPECT_TRUE(f5.frobenius);
  EXPECT_EQ(f5.kernel_order, 5u);
  EXPECT_EQ(f5.complement_order, 4u);
  EXPECT_TRUE(f5.sharply_2_transitive);
  auto d5 = is_frobenius(dihedral_group(5));
  EXPECT_TRUE(d5.frobenius);
  EXPECT_EQ(d5.kernel_order, 5u);
  EXPECT_EQ(d5.complement_order, 2u);
  EXPECT_FALSE(d5.sharply_2_transitive);
  EXPECT_FALSE(is_frobenius(symmetric_group(5)).frobenius);
  EXPECT_FALSE(is_frobenius(cyclic_group(5)).frobenius);
}

TEST(IsFrobenius, AffineGroupsAreSharplyTwoTransitive) {
  for (int q : {5, 7, 11, 13}) {
    auto G = affine_group(q);
    auto info = is_frobenius(G);
    EXPECT_TRUE(info.frobenius);
    EXPECT_TRUE(info.sharply_2_transitive);
    EXPECT_EQ(G.order(), static_cast<std::size_t>(q * (q - 1)));
    EXPECT_EQ(stabilizer_orbit_count(G), 1);
  }
}

TEST(TransitivePrimeDegree, OrderDivisibleByDegree) {
  for (auto& G : {cyclic_group(5), dihedral_group(5), affine_group(5), symmetric_group(5), cyclic_group(7), dihedral_group(7),
                  affine_subgroup(7, 2), affine_group(7), symmetric_group(7), affine_subgroup(13, 3)}) {
    ASSERT_TRUE(is_transitive(G));
    EXPECT_EQ(G.order() % static_cast<std::size_t>(G.degree()), 0u);
  }
}

TEST(TwoTransitivity, IffSingleStabilizerOrbit) {
  for (auto& G : {cyclic_group(5), dihedral_group(5), affine_group(5), symmetric_group(5), affine_subgroup(7, 2),
                  affine_group(7), dihedral_group(7)}) {
    // Direct 2-transitivity: the orbit of (0, 1) under G covers every ordered pair of distinct points.
    std::set<std::pair<int, int>> pairs;
    for (auto& g : G.elements()) pairs.insert({g(0), g(1)});
    const bool two = pairs.size() == static_cast<std::size_t>(G.degree() * (G.degree() - 1));
    EXPECT_EQ(two, stabilizer_orbit_count(G) == 1);
  }
}

TEST(CycleType, Examples) {
  EXPECT_EQ(cycle_type(Permutation::identity(5)), (std::vector<int>{1, 1, 1, 1, 1}));
  EXPECT_EQ(cycle_type(C(5, {{0, 1, 2, 3, 4}})), (std::vector<int>{5}));
  EXPECT_EQ(cycle_type(C(5, {{0, 1}, {2, 3, 4}})), (std::vector<int>{2, 3}));
}

TEST(CycleNotation, RoundTrip) {
  EXPECT_EQ(to_string(Permutation::identity(4)), "()");
  EXPECT_EQ(to_string(C(5, {{0, 1, 2}, {3, 4}})), "(0 1 2)(3 4)");
  EXPECT_EQ(parse_permutation("(0 1 2)(3 4)", 5), C(5, {{0, 1, 2}, {3, 4}}));
  EXPECT_EQ(parse_permutation("()", 3), Permutation::identity(3));
  EXPECT_THROW(parse_permutation("(0 0)", 3), std::invalid_argument);
}
