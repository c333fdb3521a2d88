#include "doctest.h"

#include <numeric>
#include <random>

#include "tamlab/burnside_functor.hpp"
#include "tamlab/catalog.hpp"
#include "tamlab/errors.hpp"
#include "tamlab/fixed_point.hpp"
#include "tamlab/tambara.hpp"

using namespace tamlab;

static_assert(TambaraFunctor<FixedPointInstance>);
static_assert(TambaraFunctor<BurnsideInstance>);

namespace {

SubgroupId bottom(const SubgroupLattice&) { return 0; }
SubgroupId top(const SubgroupLattice& lat) { return lat.subgroups().size() - 1; }

} // namespace

TEST_CASE("fixed-point structure maps over C2") {
  FixedPointInstance t(cyclic_group(2), 5);
  const auto& lat = t.lattice();
  CHECK(t.dimension() == 2);
  FixedPointInstance::Element x{1, 2};
  CHECK(apply_tr(t, bottom(lat), top(lat), x) == FixedPointInstance::Element{3, 3});
  CHECK(apply_nm(t, bottom(lat), top(lat), x) == FixedPointInstance::Element{2, 2});
  CHECK(apply_res(t, top(lat), bottom(lat), FixedPointInstance::Element{4, 4}) ==
        FixedPointInstance::Element{4, 4});
  CHECK(apply_res(t, bottom(lat), bottom(lat), x) == x);
  CHECK_THROWS_AS(apply_res(t, bottom(lat), top(lat), x), LevelMismatch);
  CHECK_THROWS_AS(apply_tr(t, bottom(lat), top(lat), FixedPointInstance::Element{1, 7}),
                  ElementNotInCarrier);
  CHECK_THROWS_AS(apply_nm(t, top(lat), top(lat), x), ElementNotInCarrier);
  CHECK(t.carrier_size(top(lat)) == 5);
  CHECK(t.carrier(top(lat)).size() == 5);
}

TEST_CASE("canonical map from Burnside") {
  FixedPointInstance t(cyclic_group(2), 5);
  const auto& lat = t.lattice();
  auto a = table_of_marks(lat.subgroup(top(lat)).as_group());
  CHECK(burnside_to_T(t, top(lat), BurnsideElement::basis(a, 0)) ==
        FixedPointInstance::Element{2, 2});
  CHECK(burnside_to_T(t, top(lat), BurnsideElement::one(a)) == t.one(top(lat)));
  for (long k = -3; k <= 6; ++k)
    CHECK(burnside_to_T(t, top(lat), BurnsideElement::integer(a, k)) == t.from_int(top(lat), k));
  auto other = table_of_marks(cyclic_group(3));
  CHECK_THROWS_AS(burnside_to_T(t, top(lat), BurnsideElement::one(other)), LatticeMismatch);
}

TEST_CASE("Burnside norm of an integer") {
  BurnsideInstance b(cyclic_group(2));
  const auto& lat = b.lattice();
  auto two = b.from_int(bottom(lat), 2);
  auto n = apply_nm(b, bottom(lat), top(lat), two);
  CHECK(n == BurnsideElement(b.level(top(lat)), {1, 2}));
  CHECK(n == norm_int(b.level(top(lat)), 2));
  CHECK(format(n) == "1·[C2/e] + 2·[C2/C2]");
}

TEST_CASE("Burnside norm paths agree") {
  for (const PermGroup& g : {cyclic_group(4), symmetric_group(3), klein_four_group()}) {
    BurnsideInstance b(g);
    const auto& lat = b.lattice();
    std::mt19937_64 rng(21);
    for (SubgroupId h = 0; h < lat.subgroups().size(); ++h)
      for (SubgroupId k = 0; k < lat.subgroups().size(); ++k) {
        if (!lat.subgroup(h).is_subgroup_of(lat.subgroup(k)))
          continue;
        for (const auto& x : b.test_elements(h, 2, rng)) {
          if (!x.is_nonnegative())
            continue;
          CHECK(b.nm_by_coinduction(h, k, x) == b.nm_by_marks(h, k, x));
        }
      }
  }
}

TEST_CASE("Burnside norms of integers match ring-level norms") {
  for (const PermGroup& g : {cyclic_group(3), symmetric_group(3), alternating_group(4)}) {
    BurnsideInstance b(g);
    const auto& lat = b.lattice();
    for (std::uint64_t k = 0; k <= 4; ++k)
      CHECK(apply_nm(b, bottom(lat), top(lat), b.from_int(bottom(lat), k)) ==
            norm_from_marks(b.level(top(lat)), k));
  }
}

TEST_CASE("axiom reports") {
  CHECK(axiom_report(BurnsideInstance(cyclic_group(4)), 4, 1).ok());
  CHECK(axiom_report(FixedPointInstance(symmetric_group(3), 5), 20, 1).ok());
  CHECK(axiom_report(FixedPointInstance(symmetric_group(3), 6, true), 20, 1).ok());
  CHECK(axiom_report(FixedPointInstance(trivial_group(), 7), 10, 1).ok());
  CHECK(axiom_report(BurnsideInstance(trivial_group()), 10, 1).ok());
  AxiomReport r = axiom_report(FixedPointInstance(klein_four_group(), 4), 10, 3);
  CHECK(r.ok());
  CHECK(r.seed == 3);
  for (const auto& c : r.checks)
    CHECK(c.cases > 0);
}

TEST_CASE("axiom reports are seed-determined") {
  FixedPointInstance t(symmetric_group(3), 5);
  AxiomReport a = axiom_report(t, 15, 42);
  AxiomReport b = axiom_report(t, 15, 42);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].name == b.checks[i].name);
    CHECK(a.checks[i].cases == b.checks[i].cases);
  }
}

TEST_CASE("unit levels") {
  FixedPointInstance t(cyclic_group(2), 5);
  UnitLevels two = unit_levels(t, 2);
  CHECK(two.units == std::vector<bool>{true, true});
  CHECK(two.consistent);
  CHECK(unit_levels(t, 5).units == std::vector<bool>{false, false});
  CHECK(unit_levels(BurnsideInstance(symmetric_group(3)), 2).units ==
        std::vector<bool>(4, false));
  CHECK(unit_levels(BurnsideInstance(symmetric_group(3)), 1).units == std::vector<bool>(4, true));
  for (std::uint32_t n = 2; n <= 9; ++n) {
    FixedPointInstance f(cyclic_group(3), n);
    for (std::uint32_t k = 0; k < n; ++k) {
      UnitLevels u = unit_levels(f, k);
      CHECK(u.consistent);
      CHECK(u.units.front() == (std::gcd(k, n) == 1));
    }
  }
}

TEST_CASE("restriction of an inverse is an inverse") {
  FixedPointInstance t(symmetric_group(3), 7);
  const auto& lat = t.lattice();
  std::mt19937_64 rng(4);
  for (const auto& x : t.test_elements(top(lat), 20, rng)) {
    auto inv = t.find_inverse(top(lat), x);
    if (!inv)
      continue;
    for (SubgroupId h = 0; h < lat.subgroups().size(); ++h) {
      auto rx = apply_res(t, top(lat), h, x);
      auto ri = apply_res(t, top(lat), h, *inv);
      CHECK(t.mul(h, rx, ri) == t.one(h));
    }
  }
}

TEST_CASE("conjugation through the checked wrapper") {
  FixedPointInstance t(symmetric_group(3), 5);
  const auto& lat = t.lattice();
  std::mt19937_64 rng(8);
  for (SubgroupId h = 0; h < lat.subgroups().size(); ++h)
    for (const auto& x : t.test_elements(h, 3, rng))
      for (ElementIndex g = 0; g < t.group().order(); ++g) {
        auto y = apply_conj(t, g, h, x);
        CHECK(t.contains(conjugate_level(lat, g, h), y));
        if (lat.subgroup(h).contains(g))
          CHECK(y == x);
      }
  CHECK_THROWS_AS(apply_conj(t, 99, 0, t.one(0)), ElementNotInGroup);
}
