#include "doctest.h"

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "tamlab/catalog.hpp"
#include "tamlab/errors.hpp"
#include "tamlab/gset.hpp"

using namespace tamlab;

namespace {

Subgroup by_cycles(const PermGroup& g, std::initializer_list<const char*> gens) {
  std::vector<ElementIndex> idx;
  for (const char* c : gens)
    idx.push_back(g.index_of(parse_cycles(c, g.degree())));
  return Subgroup::generated_by(g, idx);
}

std::vector<std::size_t> orbit_sizes(const GSet& x) {
  std::vector<std::size_t> out;
  for (const auto& o : orbits(x))
    out.push_back(o.size);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

TEST_CASE("coset G-sets") {
  PermGroup g = symmetric_group(3);
  CHECK(coset_gset(g, Subgroup::whole(g)).size() == 1);
  GSet regular = coset_gset(g, Subgroup::trivial(g));
  CHECK(regular.size() == 6);
  CHECK(check_action(regular));
  Subgroup c3 = by_cycles(g, {"(1 2 3)"});
  GSet two = coset_gset(g, c3);
  CHECK(two.size() == 2);
  for (ElementIndex h : c3.members())
    CHECK((two.act(h, 0) == 0 && two.act(h, 1) == 1));
  ElementIndex t = g.index_of(parse_cycles("(1 2)", 3));
  CHECK(two.act(t, 0) == 1);
  CHECK(two.act(t, 1) == 0);
}

TEST_CASE("check_action rejects a non-action") {
  PermGroup g = cyclic_group(3);
  std::vector<Point> table(3 * 2);
  for (ElementIndex a = 0; a < 3; ++a) {
    table[a * 2] = a == 1 ? 1 : 0;
    table[a * 2 + 1] = a == 1 ? 0 : 1;
  }
  CHECK_FALSE(check_action(GSet(g, 2, table)));
}

TEST_CASE("fixed points") {
  PermGroup g = symmetric_group(3);
  SubgroupLattice lat = subgroup_lattice(g);
  for (const auto& h : lat.subgroups()) {
    CHECK(fixed_points(trivial_gset(g, 1), h).count == 1);
    GSet regular = coset_gset(g, Subgroup::trivial(g));
    CHECK(fixed_points(regular, h).count == (h.order() == 1 ? 6 : 0));
  }
  GSet f = function_gset(cyclic_group(2), 2);
  CHECK(fixed_points(f, Subgroup::whole(cyclic_group(2))).count == 2);
  PermGroup other = cyclic_group(3);
  CHECK_THROWS_AS(fixed_points(f, Subgroup::whole(other)), NotASubgroup);
}

TEST_CASE("orbits") {
  PermGroup g = symmetric_group(3);
  SubgroupLattice lat = subgroup_lattice(g);
  for (const auto& h : lat.subgroups()) {
    auto os = orbits(coset_gset(g, h));
    REQUIRE(os.size() == 1);
    CHECK(lat.class_of(os[0].stabilizer) == lat.class_of(h));
  }
  GSet u = disjoint_union(coset_gset(g, Subgroup::trivial(g)), trivial_gset(g, 1));
  CHECK(orbit_sizes(u) == std::vector<std::size_t>{1, 6});
  CHECK(orbit_sizes(function_gset(cyclic_group(2), 2)) == std::vector<std::size_t>{1, 1, 2});
}

TEST_CASE("orbit-stabilizer and Burnside counting") {
  std::mt19937_64 rng(11);
  for (const PermGroup& g : {symmetric_group(3), dihedral_group(4), alternating_group(4)}) {
    SubgroupLattice lat = subgroup_lattice(g);
    GSet x = empty_gset(g);
    for (int i = 0; i < 3; ++i)
      x = disjoint_union(x, coset_gset(g, lat.subgroup(rng() % lat.subgroups().size())));
    CHECK(check_action(x));
    std::size_t total = 0;
    for (const auto& o : orbits(x)) {
      CHECK(o.size * o.stabilizer.order() == g.order());
      total += o.size;
    }
    CHECK(total == x.size());
    std::size_t fixed_sum = 0;
    for (ElementIndex a = 0; a < g.order(); ++a) {
      std::vector<ElementIndex> gen{a};
      fixed_sum += fixed_points(x, Subgroup::generated_by(g, gen)).count;
    }
    CHECK(fixed_sum == orbits(x).size() * g.order());
  }
}

TEST_CASE("union and product") {
  PermGroup c2 = cyclic_group(2);
  SubgroupLattice lat = subgroup_lattice(c2);
  GSet free = coset_gset(c2, Subgroup::trivial(c2));
  CHECK(isomorphic(disjoint_union(free, empty_gset(c2)), free, lat));
  CHECK(isomorphic(product(free, trivial_gset(c2, 1)), free, lat));
  GSet sq = product(free, free);
  CHECK(sq.size() == 4);
  CHECK(orbit_sizes(sq) == std::vector<std::size_t>{2, 2});
  CHECK_THROWS_AS(product(free, trivial_gset(cyclic_group(3), 1)), GroupMismatch);

  PermGroup g = symmetric_group(3);
  SubgroupLattice s3 = subgroup_lattice(g);
  for (ClassIndex i = 0; i < s3.class_count(); ++i)
    for (ClassIndex j = 0; j < s3.class_count(); ++j) {
      GSet x = coset_gset(g, s3.class_rep(i));
      GSet y = coset_gset(g, s3.class_rep(j));
      GSet xy = product(x, y);
      CHECK(check_action(xy));
      for (const auto& h : s3.subgroups())
        CHECK(fixed_points(xy, h).count == fixed_points(x, h).count * fixed_points(y, h).count);
    }
}

TEST_CASE("function G-sets") {
  PermGroup c2 = cyclic_group(2);
  CHECK(function_gset(c2, 1).size() == 1);
  CHECK(orbits(function_gset(c2, 1)).size() == 1);
  CHECK(function_gset(c2, 0).size() == 0);
  GSet f = function_gset(c2, 2);
  CHECK(f.size() == 4);
  CHECK(check_action(f));
  Limits tight;
  tight.max_points = 100;
  CHECK_THROWS_AS(function_gset(symmetric_group(3), 3, tight), EnumerationCapExceeded);
  CHECK_THROWS_AS(function_census(symmetric_group(3), 3, tight), EnumerationCapExceeded);
}

TEST_CASE("function census matches raw enumeration") {
  for (const PermGroup& g : {cyclic_group(3), klein_four_group(), symmetric_group(3)})
    for (std::uint64_t k : {1, 2, 3}) {
      auto raw = oracle::function_orbits(g, k);
      FunctionCensus census = function_census(g, k);
      std::map<std::vector<ElementIndex>, std::uint64_t> got;
      for (const auto& [mask, n] : census.stabilizer_counts)
        got[mask.members()] += n;
      CHECK(got == raw);
      SubgroupLattice lat = subgroup_lattice(g);
      for (const auto& h : lat.subgroups())
        CHECK(count_function_fixed_points(g, k, h) ==
              fixed_points(function_gset(g, k), h).count);
    }
}

TEST_CASE("restriction") {
  PermGroup c4 = cyclic_group(4);
  SubgroupLattice lat = subgroup_lattice(c4);
  const Subgroup& c2 = lat.subgroup(1);
  GSet regular = coset_gset(c4, Subgroup::trivial(c4));
  GSet r = restrict(regular, c2);
  CHECK(r.size() == 4);
  CHECK(orbit_sizes(r) == std::vector<std::size_t>{2, 2});
  CHECK(restrict(trivial_gset(c4, 1), c2).size() == 1);
  GSet same = restrict(regular, Subgroup::whole(c4));
  CHECK(same.size() == regular.size());
  CHECK(check_action(r));
}

TEST_CASE("induction") {
  PermGroup c4 = cyclic_group(4);
  SubgroupLattice lat = subgroup_lattice(c4);
  const Subgroup& c2 = lat.subgroup(1);
  PermGroup h = c2.as_group();
  GSet point_e = trivial_gset(Subgroup::trivial(c4).as_group(), 1);
  GSet reg = induce(point_e, Subgroup::trivial(c4));
  CHECK(reg.size() == 4);
  CHECK(orbit_sizes(reg) == std::vector<std::size_t>{4});
  GSet ind = induce(restrict(coset_gset(c4, Subgroup::trivial(c4)), c2), c2);
  CHECK(ind.size() == 8);
  CHECK(check_action(ind));
  GSet x = coset_gset(h, Subgroup::trivial(h));
  GSet whole = induce(coset_gset(c4, Subgroup::trivial(c4)), Subgroup::whole(c4));
  CHECK(whole.size() == 4);
  CHECK(induce(x, c2).size() == 4);
}

TEST_CASE("coinduction") {
  PermGroup c2 = cyclic_group(2);
  SubgroupLattice lat = subgroup_lattice(c2);
  GSet two_points = trivial_gset(Subgroup::trivial(c2).as_group(), 2);
  GSet co = coinduce(two_points, Subgroup::trivial(c2));
  CHECK(isomorphic(co, function_gset(c2, 2), lat));
  GSet whole = coinduce(coset_gset(c2, Subgroup::trivial(c2)), Subgroup::whole(c2));
  CHECK(whole.size() == 2);

  // |coinduce(X)^K| = |X^H| on small instances.
  for (const PermGroup& k : {cyclic_group(4), symmetric_group(3), klein_four_group()}) {
    SubgroupLattice kl = subgroup_lattice(k);
    for (const auto& h : kl.subgroups()) {
      PermGroup hg = h.as_group();
      SubgroupLattice hl = subgroup_lattice(hg);
      for (const auto& l : hl.subgroups()) {
        GSet x = disjoint_union(coset_gset(hg, l), trivial_gset(hg, 1));
        if (std::pow(double(x.size()), double(h.index())) > 5000)
          continue;
        GSet y = coinduce(x, h);
        CHECK(check_action(y));
        CHECK(fixed_points(y, Subgroup::whole(k)).count ==
              fixed_points(x, Subgroup::whole(hg)).count);
      }
    }
  }
}

TEST_CASE("transport") {
  PermGroup g = symmetric_group(3);
  Subgroup h = by_cycles(g, {"(1 2)"});
  GSet x = coset_gset(h.as_group(), Subgroup::trivial(h.as_group()));
  for (ElementIndex s = 0; s < g.order(); ++s) {
    GSet y = transport(x, h, s);
    CHECK(y.group() == conjugate_subgroup(h, s).as_group());
    CHECK(check_action(y));
    CHECK(y.size() == 2);
  }
}

TEST_CASE("dump and bounded power") {
  CHECK(!dump(function_gset(cyclic_group(2), 2)).empty());
  CHECK(bounded_power(2, 10, 1024) == 1024);
  CHECK_FALSE(bounded_power(2, 11, 1024).has_value());
  CHECK(bounded_power(0, 0, 1) == 1);
  CHECK_FALSE(bounded_power(3, 64, ~std::uint64_t{0}).has_value());
}
