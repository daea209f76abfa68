#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "tfcover/perm_group.hpp"

using namespace tfcover;

namespace {

// Independent oracle: closure of the generators under composition by plain
// breadth-first multiplication.
std::set<std::vector<int>> brute_closure(int degree, const std::vector<Permutation>& gens) {
  std::set<std::vector<int>> seen;
  std::vector<Permutation> frontier{Permutation::identity(degree)};
  seen.insert(frontier[0].images());
  for (size_t i = 0; i < frontier.size(); ++i)
    for (const auto& g : gens) {
      Permutation next = frontier[i] * g;
      if (seen.insert(next.images()).second) frontier.push_back(next);
    }
  return seen;
}

bool is_even(const Permutation& p) {
  int transpositions = 0;
  for (const auto& c : p.cycles()) transpositions += static_cast<int>(c.size()) - 1;
  return transpositions % 2 == 0;
}

// Rotation test for permutations acting on the vertices of a cycle 0..n-1.
bool is_rotation(const Permutation& p) {
  int n = p.degree();
  int shift = p(0);
  for (int i = 0; i < n; ++i)
    if (p(i) != (i + shift) % n) return false;
  return true;
}

const Permutation rot5({1, 2, 3, 4, 0});
const Permutation flip5({0, 4, 3, 2, 1});

}  // namespace

TEST_CASE("order and membership match brute-force closure") {
  struct Case {
    int degree;
    std::vector<Permutation> gens;
  };
  std::vector<Case> cases = {
      {5, {rot5, flip5}},                                        // dihedral, order 10
      {4, {Permutation({1, 0, 2, 3}), Permutation({1, 2, 3, 0})}},  // symmetric, order 24
      {4, {Permutation({1, 0, 3, 2}), Permutation({2, 3, 0, 1})}},  // Klein four
      {6, {Permutation({1, 2, 0, 3, 4, 5}), Permutation({0, 1, 2, 4, 5, 3})}},  // C3 x C3
      {3, {}},                                                   // trivial
  };
  for (const auto& c : cases) {
    auto closure = brute_closure(c.degree, c.gens);
    PermGroup g = PermGroup::from_generators(c.degree, c.gens);
    REQUIRE(g.order() == Integer(closure.size()));
    for (const auto& images : closure) REQUIRE(g.contains(Permutation(images)));
    // Elements enumerate exactly the closure, sorted.
    auto elems = g.elements(Integer(1000));
    REQUIRE(elems.size() == closure.size());
    REQUIRE(std::is_sorted(elems.begin(), elems.end()));
    for (const auto& e : elems) REQUIRE(closure.count(e.images()) == 1);
  }
}

TEST_CASE("non-members are rejected") {
  PermGroup d5 = PermGroup::from_generators(5, {rot5, flip5});
  REQUIRE(d5.order() == 10);
  // A 3-cycle is not in the dihedral group of the pentagon.
  REQUIRE_FALSE(d5.contains(Permutation({1, 2, 0, 3, 4})));
  PermGroup a4 = PermGroup::from_generators(
      4, {Permutation({1, 2, 0, 3}), Permutation({0, 2, 3, 1})});
  REQUIRE(a4.order() == 12);
  REQUIRE_FALSE(a4.contains(Permutation({1, 0, 2, 3})));  // odd
}

TEST_CASE("incremental generator insertion reports growth") {
  PermGroup g(5);
  REQUIRE(g.is_trivial());
  REQUIRE(g.order() == 1);
  REQUIRE(g.add_generator(rot5));
  REQUIRE(g.order() == 5);
  REQUIRE_FALSE(g.add_generator(rot5 * rot5));  // already inside
  REQUIRE(g.add_generator(flip5));
  REQUIRE(g.order() == 10);
  REQUIRE_FALSE(g.add_generator(Permutation::identity(5)));
}

TEST_CASE("orbits") {
  PermGroup g = PermGroup::from_generators(
      6, {Permutation({1, 0, 2, 3, 4, 5}), Permutation({0, 1, 3, 4, 2, 5})});
  auto orbs = g.orbits();
  REQUIRE(orbs == std::vector<std::vector<int>>{{0, 1}, {2, 3, 4}, {5}});
  REQUIRE(g.orbit(3) == std::vector<int>{2, 3, 4});
  REQUIRE(g.orbit(5) == std::vector<int>{5});
}

TEST_CASE("deterministic enumeration stops early and respects the bound") {
  PermGroup s4 = PermGroup::from_generators(
      4, {Permutation({1, 0, 2, 3}), Permutation({1, 2, 3, 0})});
  REQUIRE_THROWS_AS(s4.elements(Integer(23)), capacity_error);
  int visited = 0;
  s4.for_each_element(Integer(24), [&](const Permutation&) {
    ++visited;
    return visited < 7;
  });
  REQUIRE(visited == 7);
  // Two runs produce the same sequence.
  std::vector<Permutation> a, b;
  s4.for_each_element(Integer(24), [&](const Permutation& p) {
    a.push_back(p);
    return true;
  });
  s4.for_each_element(Integer(24), [&](const Permutation& p) {
    b.push_back(p);
    return true;
  });
  REQUIRE(a == b);
  REQUIRE(a.size() == 24);
}

TEST_CASE("halving subgroup extraction via a two-coset transversal") {
  // Even permutations inside the symmetric group on four points.
  PermGroup s4 = PermGroup::from_generators(
      4, {Permutation({1, 0, 2, 3}), Permutation({1, 2, 3, 0})});
  PermGroup a4 = index_two_subgroup(s4, is_even);
  REQUIRE(a4.order() == 12);
  a4.for_each_element(Integer(12), [&](const Permutation& p) {
    REQUIRE(is_even(p));
    return true;
  });

  // Rotations inside the dihedral group of the pentagon.
  PermGroup d5 = PermGroup::from_generators(5, {rot5, flip5});
  PermGroup c5 = index_two_subgroup(d5, is_rotation);
  REQUIRE(c5.order() == 5);
  c5.for_each_element(Integer(5), [&](const Permutation& p) {
    REQUIRE(is_rotation(p));
    return true;
  });

  // When every generator is kept the whole group comes back.
  PermGroup c5b = index_two_subgroup(c5, is_rotation);
  REQUIRE(c5b.order() == 5);
}
