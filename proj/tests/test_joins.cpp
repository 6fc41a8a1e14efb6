#include <doctest.h>

#include <map>
#include <cmath>
#include <numeric>

#include "ssn/joins.hpp"
#include "ssn/residuals.hpp"
#include "ssn/subnormality.hpp"
#include "support.hpp"

using namespace ssn;
using test::fam;
using test::part;
using test::sub;
using test::whole;

namespace
{

// Invariant factors of a finite abelian group, from the counts of elements
// killed by each prime power.
std::vector<std::size_t> invariant_factors(GroupPtr const &a)
{
  std::map<unsigned, std::vector<unsigned>> exponents;  // p -> partition, descending
  for (unsigned p : prime_set(a)) {
    std::size_t sylow = 1;
    while (a->order() % (sylow * p) == 0)
      sylow *= p;
    std::vector<std::size_t> killed{0};  // killed[k] = log_p #{x : x^(p^k) = 1}
    for (std::size_t pk = p;; pk *= p) {
      std::size_t count = 0;
      for (ElementId x = 0; x < a->order(); ++x)
        count += pk % a->element_order(x) == 0;
      std::size_t log = 0;
      for (std::size_t c = count; c > 1; c /= p)
        ++log;
      killed.push_back(log);
      if (count == sylow)
        break;
    }
    // Number of cyclic factors of exponent >= k is killed[k] - killed[k-1].
    std::vector<std::size_t> at_least;
    for (std::size_t k = 1; k < killed.size(); ++k)
      at_least.push_back(killed[k] - killed[k - 1]);
    std::vector<unsigned> parts;
    for (std::size_t k = 0; k < at_least.size(); ++k) {
      std::size_t next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
      for (std::size_t c = next; c < at_least[k]; ++c)
        parts.push_back(static_cast<unsigned>(k + 1));
    }
    exponents[p] = parts;
  }
  std::vector<std::size_t> factors;
  for (auto const &[p, parts] : exponents) {
    for (unsigned e : parts) {
      std::size_t q = 1;
      for (unsigned i = 0; i < e; ++i)
        q *= p;
      factors.push_back(q);
    }
  }
  return factors;
}

// A (x) B = sum of Z_gcd(a_i, b_j).
bool tensor_is_trivial(GroupPtr const &a, GroupPtr const &b)
{
  for (std::size_t x : invariant_factors(a)) {
    for (std::size_t y : invariant_factors(b)) {
      if (std::gcd(x, y) > 1)
        return false;
    }
  }
  return true;
}

GroupPtr abelianisation(Subgroup const &h) { return quotient_group(h, derived_subgroup(h)); }

} // namespace

TEST_CASE("joins")
{
  auto s4 = fam("symmetric(4)");
  auto a = sub(s4, "(1 2 3 4); (1 3)");
  auto b = sub(s4, "(1 3)");
  CHECK(join(a, b) == a);
  CHECK(join(a, Subgroup::trivial(s4)) == a);
  CHECK(join(sub(s4, "(1 2)"), sub(s4, "(2 3)")).order() == 6);

  auto w = fam("wreath_cyclic(2, 3)");
  auto base = sub(w, "(1 2)");
  auto top = sub(w, "(1 3 5)(2 4 6)");
  CHECK(join(base, top).order() == 24);
  CHECK_THROWS(join(base, whole(s4)));
}

TEST_CASE("join is the lattice join")
{
  for (auto const &spec : {"symmetric(4)", "dihedral(4)", "wreath_cyclic(3, 2)"}) {
    auto lattice = all_subgroups(fam(spec));
    for (auto const &x : lattice.nodes()) {
      for (auto const &y : lattice.nodes()) {
        auto j = join(x, y);
        for (auto const &u : lattice.nodes()) {
          if (u.contains(x) && u.contains(y))
            CHECK(u.contains(j));
        }
        CHECK(j.contains(x));
        CHECK(j.contains(y));
      }
    }
  }
}

TEST_CASE("permutability")
{
  auto s4 = fam("symmetric(4)");
  auto klein = sub(s4, "(1 2)(3 4); (1 3)(2 4)");
  auto lattice = all_subgroups(s4);
  for (auto const &y : lattice.nodes()) {
    CHECK(permutes(klein, y));
    CHECK(permutes(y, y));
  }
  CHECK_FALSE(permutes(sub(s4, "(1 2)"), sub(s4, "(2 3)")));

  for (auto const &[p, q] : {std::pair{2, 3}, std::pair{3, 2}}) {
    auto w = fam("wreath_cyclic(" + std::to_string(p) + ", " + std::to_string(q) + ")");
    auto base = subgroup_from_permutations(w, std::vector{w->generators()[0]});
    auto top = subgroup_from_permutations(w, std::vector{w->generators()[1]});
    CHECK_FALSE(permutes(base, top));
  }
}

TEST_CASE("permutes agrees with product sets and is symmetric")
{
  for (auto const &spec : {"symmetric(4)", "wreath_cyclic(2, 3)",
                           "direct_product(symmetric(3), cyclic(3))"}) {
    auto lattice = all_subgroups(fam(spec));
    for (auto const &x : lattice.nodes()) {
      for (auto const &y : lattice.nodes()) {
        bool p = permutes(x, y);
        CHECK(p == permutes(y, x));
        CHECK(p == (product_set(x, y) == product_set(y, x)));
        CHECK(p == (product_set(x, y) == join(x, y).members()));
      }
    }
  }
}

TEST_CASE("permutizer examples")
{
  auto s4 = fam("symmetric(4)");
  auto h = sub(s4, "(1 2)");
  auto r = permutizer(h, sub(s4, "(1 2); (3 4)"));
  REQUIRE(r.has_unique_maximum());
  CHECK(r.maximum() == h);

  auto w = fam("wreath_cyclic(2, 3)");
  auto base = sub(w, "(1 2)");
  auto top = sub(w, "(1 3 5)(2 4 6)");
  auto p = permutizer(base, top);
  REQUIRE(p.has_unique_maximum());
  CHECK(p.maximum().is_trivial());

  auto t = permutizer(Subgroup::trivial(w), top);
  REQUIRE(t.has_unique_maximum());
  CHECK(t.maximum().is_trivial());
  CHECK_THROWS(PermutizerResult::maximal_members({}).maximum());
}

TEST_CASE("permutizer invariants")
{
  auto g = fam("symmetric(4)");
  auto lattice = all_subgroups(g);
  for (auto const &h : lattice.nodes()) {
    std::vector<Subgroup> below;
    for (auto const &l : lattice.nodes()) {
      if (h.contains(l))
        below.push_back(l);
    }
    for (auto const &k : lattice.nodes()) {
      auto r = permutizer(h, k, below);
      if (r.has_unique_maximum()) {
        CHECK(permutes(r.maximum(), k));
        for (auto const &l : below) {
          if (permutes(l, k))
            CHECK(r.maximum().contains(l));
        }
      } else {
        for (auto const &m : r.subgroups())
          CHECK(permutes(m, k));
      }
    }
  }
}

TEST_CASE("orthogonality")
{
  auto a5 = fam("direct_product(alternating(5), cyclic(2))");
  auto perfect = sub(a5, "(1 2 3); (1 2 4); (1 2 5)");
  for (auto const &k : {sub(a5, "(6 7)"), whole(a5), perfect})
    CHECK(is_orthogonal(perfect, k));

  auto c6 = fam("direct_product(cyclic(2), cyclic(3))");
  CHECK(is_orthogonal(sub(c6, "(1 2)"), sub(c6, "(3 4 5)")));
  CHECK_FALSE(is_orthogonal(sub(c6, "(1 2)"), sub(c6, "(1 2)")));
}

TEST_CASE("orthogonality agrees with a tensor product oracle")
{
  for (auto const &spec : {"direct_product(cyclic(2), cyclic(2), cyclic(2))",
                           "direct_product(cyclic(4), cyclic(2))", "cyclic(6)",
                           "direct_product(cyclic(6), cyclic(2))",
                           "direct_product(cyclic(3), cyclic(3))", "symmetric(4)",
                           "direct_product(dihedral(4), cyclic(3))"}) {
    auto g = fam(spec);
    REQUIRE(g->order() <= 64);
    auto lattice = all_subgroups(g);
    std::vector<GroupPtr> abel;
    for (auto const &h : lattice.nodes())
      abel.push_back(abelianisation(h));
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      for (std::size_t j = 0; j < lattice.size(); ++j)
        CHECK(is_orthogonal(lattice.node(i), lattice.node(j)) ==
              tensor_is_trivial(abel[i], abel[j]));
    }
  }
}

TEST_CASE("invariant factor oracle sanity")
{
  CHECK(invariant_factors(fam("direct_product(cyclic(4), cyclic(2))")) ==
        std::vector<std::size_t>{2, 4});
  CHECK(invariant_factors(fam("cyclic(6)")) == std::vector<std::size_t>{2, 3});
  CHECK(invariant_factors(fam("cyclic(1)")).empty());
}

TEST_CASE("wreath regression")
{
  for (auto const &[p, q] : {std::pair{2u, 3u}, std::pair{3u, 2u}, std::pair{2u, 5u}}) {
    auto w = fam("wreath_cyclic(" + std::to_string(p) + ", " + std::to_string(q) + ")");
    CAPTURE(p);
    CAPTURE(q);
    CHECK(w->order() == static_cast<std::size_t>(std::pow(p, q)) * q);
    auto sigma = part({{p, q}});
    auto h = subgroup_from_permutations(w, std::vector{w->generators()[0]});
    auto k = subgroup_from_permutations(w, std::vector{w->generators()[1]});
    CHECK(h.order() == p);
    CHECK(k.order() == q);
    CHECK(sigma_subnormal_fast(h, whole(w), sigma).has_value());
    CHECK(sigma_subnormal_fast(k, whole(w), sigma).has_value());
    CHECK(is_orthogonal(h, k));
    CHECK_FALSE(permutes(h, k));
    auto hs = sigma_residual(h, sigma);
    auto ks = sigma_residual(k, sigma);
    CHECK(hs.is_trivial());
    CHECK(ks.is_trivial());
    CHECK(permutes(hs, ks));
  }
}
