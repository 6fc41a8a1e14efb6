#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "ssn/error.hpp"
#include "support.hpp"

using namespace ssn;
using test::fam;
using test::sub;
using test::whole;

namespace
{

using PermSet = std::set<Permutation>;

// Naive closure over explicit permutations, independent of the Cayley table.
PermSet naive_closure(PermSet seed, std::size_t degree)
{
  PermSet result{Permutation(degree)};
  std::vector<Permutation> frontier{Permutation(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (auto const &x : frontier) {
      for (auto const &s : seed) {
        auto y = x * s;
        if (result.insert(y).second)
          next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return result;
}

std::set<PermSet> naive_lattice(GroupPtr const &g)
{
  auto elems = g->elements();
  std::set<PermSet> found;
  for (std::size_t a = 0; a < elems.size(); ++a) {
    for (std::size_t b = a; b < elems.size(); ++b)
      found.insert(naive_closure({elems[a], elems[b]}, g->degree()));
  }
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<PermSet> current(found.begin(), found.end());
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        PermSet seed = current[i];
        seed.insert(current[j].begin(), current[j].end());
        if (found.insert(naive_closure(seed, g->degree())).second)
          grew = true;
      }
    }
  }
  return found;
}

PermSet as_perms(Subgroup const &s)
{
  PermSet out;
  for (ElementId id : s.element_ids())
    out.insert(s.parent()->element(id));
  return out;
}

} // namespace

TEST_CASE("group_from_generators")
{
  auto s3 = group_from_generators(3, parse_permutation_list("(1 2); (1 2 3)", 3));
  CHECK(s3->order() == 6);
  CHECK(s3->element(FiniteGroup::identity()).is_identity());

  auto d8 = group_from_generators(4, parse_permutation_list("(1 2 3 4); (1 3)", 4));
  CHECK(d8->order() == 8);
  CHECK(naive_closure({d8->generators()[0], d8->generators()[1]}, 4).size() == 8);

  CHECK(group_from_generators(1, {})->order() == 1);
  CHECK_THROWS_AS(group_from_generators(0, {}), PreconditionError);
  CHECK_THROWS_AS(fam("symmetric(8)"), Error);
  try {
    group_from_generators(7, parse_permutation_list("(1 2); (1 2 3 4 5 6 7)", 7), 100);
    FAIL("cap not enforced");
  } catch (CapExceeded const &e) {
    CHECK(e.partial() > 100);
  }
}

TEST_CASE("group closure and table")
{
  for (auto const &spec : test::small_specs()) {
    auto g = fam(spec);
    CHECK(std::is_sorted(g->elements().begin(), g->elements().end()));
    for (ElementId a = 0; a < g->order(); ++a) {
      CHECK(g->multiply(a, g->inverse(a)) == FiniteGroup::identity());
      CHECK(g->element(a).order() == g->element_order(a));
      CHECK(g->index_of(g->element(a)) == a);
    }
    for (std::size_t k = 0; k < g->generator_ids().size(); ++k)
      CHECK(g->element(g->generator_ids()[k]) == g->generators()[k]);
  }
}

TEST_CASE("subgroup_generated")
{
  auto s3 = fam("symmetric(3)");
  CHECK(subgroup_generated(s3, {}).is_trivial());
  CHECK(subgroup_generated(s3, s3->generator_ids()) == whole(s3));
  CHECK(sub(s3, "(1 2 3)").order() == 3);
  CHECK_THROWS_AS(subgroup_from_permutations(s3, parse_permutation_list("(1 2)(3 4)", 4)),
                  Error);
}

TEST_CASE("normal closure and core examples")
{
  auto s4 = fam("symmetric(4)");
  auto g = whole(s4);
  CHECK(normal_closure(g, sub(s4, "(1 2)")) == g);
  CHECK(normal_closure(g, sub(s4, "(1 2)(3 4)")).order() == 4);
  CHECK(normal_closure(g, g) == g);
  auto klein = sub(s4, "(1 2)(3 4); (1 3)(2 4)");
  CHECK(normal_closure(g, klein) == klein);

  auto sylow = sub(s4, "(1 2 3 4); (1 3)");
  REQUIRE(sylow.order() == 8);
  CHECK(normal_core(g, sylow) == klein);
  CHECK(normal_core(g, klein) == klein);
  CHECK(normal_core(g, Subgroup::trivial(s4)).is_trivial());
  CHECK_THROWS_AS(normal_core(klein, sylow), PreconditionError);
}

TEST_CASE("derived subgroups")
{
  CHECK(derived_subgroup(whole(fam("cyclic(6)"))).is_trivial());
  CHECK(derived_subgroup(whole(fam("direct_product(cyclic(2), cyclic(2))"))).is_trivial());
  CHECK(derived_subgroup(whole(fam("symmetric(3)"))).order() == 3);
  CHECK(derived_subgroup(whole(fam("symmetric(4)"))).order() == 12);
  CHECK(derived_subgroup(whole(fam("alternating(4)"))).order() == 4);
  auto a5 = whole(fam("alternating(5)"));
  CHECK(derived_subgroup(a5) == a5);
}

TEST_CASE("normal subgroups")
{
  auto orders = [](GroupPtr const &g) {
    std::vector<std::size_t> out;
    for (auto const &n : normal_subgroups(g))
      out.push_back(n.order());
    return out;
  };
  CHECK(orders(fam("symmetric(3)")) == std::vector<std::size_t>{1, 3, 6});
  CHECK(orders(fam("cyclic(6)")).size() == 4);
  CHECK(orders(fam("symmetric(4)")) == std::vector<std::size_t>{1, 4, 12, 24});
  CHECK(orders(fam("alternating(5)")) == std::vector<std::size_t>{1, 60});

  // Agrees with filtering the full lattice by normality.
  for (auto const &spec : test::small_specs()) {
    auto g = fam(spec);
    auto lattice = all_subgroups(g);
    std::size_t count = 0;
    for (auto const &s : lattice.nodes())
      count += s.is_normal_in(whole(g));
    CHECK(normal_subgroups(g).size() == count);
  }
}

TEST_CASE("subgroup lattice sizes")
{
  CHECK(all_subgroups(fam("symmetric(3)")).size() == 6);
  CHECK(all_subgroups(fam("symmetric(4)")).size() == 30);
  CHECK(all_subgroups(fam("cyclic(1)")).size() == 1);
  CHECK(all_subgroups(fam("alternating(4)")).size() == 10);
  CHECK(all_subgroups(fam("alternating(5)")).size() == 59);
  CHECK(all_subgroups(fam("dihedral(4)")).size() == 10);
  CHECK_THROWS_AS(all_subgroups(fam("symmetric(4)"), 10), CapExceeded);

  // S_4 subgroup counts per order.
  std::map<std::size_t, int> per_order;
  auto s4_lattice = all_subgroups(fam("symmetric(4)"));
  for (auto const &s : s4_lattice.nodes())
    ++per_order[s.order()];
  CHECK(per_order == std::map<std::size_t, int>{
                       {1, 1}, {2, 9}, {3, 4}, {4, 7}, {6, 4}, {8, 3}, {12, 1}, {24, 1}});
}

TEST_CASE("lattice completeness against a naive oracle")
{
  for (auto const &spec : test::small_specs()) {
    auto g = fam(spec);
    if (g->order() > 24)
      continue;
    CAPTURE(spec);
    auto lattice = all_subgroups(g);
    std::set<PermSet> mine;
    for (auto const &s : lattice.nodes())
      mine.insert(as_perms(s));
    CHECK(mine == naive_lattice(g));
  }
}

TEST_CASE("lattice invariants")
{
  for (auto const &spec : test::small_specs()) {
    auto g = fam(spec);
    auto lattice = all_subgroups(g);
    CAPTURE(spec);
    CHECK(lattice.node(lattice.trivial_index()).is_trivial());
    CHECK(lattice.node(lattice.top_index()) == whole(g));
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      auto const &a = lattice.node(i);
      CHECK(g->order() % a.order() == 0);
      for (std::size_t j = 0; j < lattice.size(); ++j) {
        auto const &b = lattice.node(j);
        CHECK(lattice.contains(j, i) == a.members().is_subset_of(b.members()));
        CHECK(lattice.index_of(intersection(a, b)).has_value());
      }
    }
  }
}

TEST_CASE("closure and core are extremal")
{
  for (auto const &spec : {"symmetric(4)", "dihedral(4)", "wreath_cyclic(2, 3)",
                           "direct_product(symmetric(3), cyclic(2))"}) {
    auto g = fam(spec);
    auto lattice = all_subgroups(g);
    CAPTURE(spec);
    for (auto const &y : lattice.nodes()) {
      for (auto const &x : lattice.nodes()) {
        if (!y.contains(x))
          continue;
        auto closure = normal_closure(y, x);
        auto core = normal_core(y, x);
        CHECK(closure.contains(x));
        CHECK(closure.is_normal_in(y));
        CHECK(x.contains(core));
        CHECK(core.is_normal_in(y));
        for (auto const &n : lattice.nodes()) {
          if (!y.contains(n) || !n.is_normal_in(y))
            continue;
          if (n.contains(x))
            CHECK(n.contains(closure));
          if (x.contains(n))
            CHECK(core.contains(n));
        }
      }
    }
  }
}

TEST_CASE("quotient groups")
{
  auto s4 = fam("symmetric(4)");
  auto klein = sub(s4, "(1 2)(3 4); (1 3)(2 4)");
  auto q = quotient_group(s4, klein);
  CHECK(q->order() == 6);
  CHECK(q->degree() == 6);
  CHECK(element_order_multiset(q) == element_order_multiset(fam("symmetric(3)")));
  CHECK(quotient_group(s4, whole(s4))->order() == 1);
  auto same = quotient_group(s4, Subgroup::trivial(s4));
  CHECK(element_order_multiset(same) == element_order_multiset(s4));
  CHECK_THROWS_AS(quotient_group(s4, sub(s4, "(1 2)")), PreconditionError);

  for (auto const &spec : test::small_specs()) {
    auto g = fam(spec);
    for (auto const &n : normal_subgroups(g)) {
      auto qg = quotient_group(g, n);
      CHECK(qg->order() * n.order() == g->order());
      CHECK(prime_set(qg) == prime_divisors(g->order() / n.order()));
    }
  }
}

TEST_CASE("prime sets")
{
  CHECK(prime_set(fam("cyclic(1)")).empty());
  CHECK(prime_set(fam("symmetric(4)")) == PrimeSet{2, 3});
  CHECK(prime_set(fam("cyclic(30)")) == PrimeSet{2, 3, 5});
  CHECK(prime_divisors(360) == PrimeSet{2, 3, 5});
  CHECK(is_prime(997));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
}
