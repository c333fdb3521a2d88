#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tamlab/burnside.hpp"
#include "tamlab/errors.hpp"
#include "tamlab/integer.hpp"
#include "tamlab/perm.hpp"

namespace tamlab {

/// A G-Tambara functor with levels indexed by the subgroups of G (SubgroupId into
/// lattice()). Implementations provide unchecked structure maps; the free functions
/// below validate levels and carriers.
///
/// res(k, h, x): T(G/K) → T(G/H) for H ≤ K, a ring map.
/// tr(h, k, x), nm(h, k, x): T(G/H) → T(G/K), additive and multiplicative respectively.
/// conj(g, h, x): T(G/H) → T(G/gHg^-1), a ring isomorphism.
template <class T>
concept TambaraFunctor = requires(const T& t, SubgroupId h, ElementIndex g,
                                  const typename T::Element& x, const Integer& n,
                                  std::mt19937_64& rng, std::size_t count) {
  typename T::Element;
  { t.group() } -> std::same_as<const PermGroup&>;
  { t.lattice() } -> std::same_as<const SubgroupLattice&>;
  { t.name() } -> std::convertible_to<std::string>;
  { t.contains(h, x) } -> std::same_as<bool>;
  { t.zero(h) } -> std::same_as<typename T::Element>;
  { t.one(h) } -> std::same_as<typename T::Element>;
  { t.from_int(h, n) } -> std::same_as<typename T::Element>;
  { t.add(h, x, x) } -> std::same_as<typename T::Element>;
  { t.mul(h, x, x) } -> std::same_as<typename T::Element>;
  { t.neg(h, x) } -> std::same_as<typename T::Element>;
  { t.equal(h, x, x) } -> std::same_as<bool>;
  { t.res(h, h, x) } -> std::same_as<typename T::Element>;
  { t.tr(h, h, x) } -> std::same_as<typename T::Element>;
  { t.nm(h, h, x) } -> std::same_as<typename T::Element>;
  { t.conj(g, h, x) } -> std::same_as<typename T::Element>;
  { t.is_unit(h, x) } -> std::same_as<bool>;
  { t.test_elements(h, count, rng) } -> std::same_as<std::vector<typename T::Element>>;
  { t.describe(x) } -> std::convertible_to<std::string>;
};

namespace detail {

template <TambaraFunctor T>
void require_inclusion(const T& t, SubgroupId h, SubgroupId k) {
  const auto& lat = t.lattice();
  if (h >= lat.subgroups().size() || k >= lat.subgroups().size())
    throw LevelMismatch("level id out of range");
  if (!lat.subgroup(h).is_subgroup_of(lat.subgroup(k)))
    throw LevelMismatch("level " + lat.label(lat.class_of(h)) + "#" + std::to_string(h) +
                        " is not contained in level " + lat.label(lat.class_of(k)) + "#" +
                        std::to_string(k));
}

template <TambaraFunctor T>
void require_carrier(const T& t, SubgroupId h, const typename T::Element& x) {
  if (!t.contains(h, x))
    throw ElementNotInCarrier("element " + std::string(t.describe(x)) +
                              " is not in the carrier of level #" + std::to_string(h));
}

} // namespace detail

/// res^K_H. Throws LevelMismatch unless H ≤ K, ElementNotInCarrier unless x ∈ T(G/K).
template <TambaraFunctor T>
typename T::Element apply_res(const T& t, SubgroupId k, SubgroupId h,
                              const typename T::Element& x) {
  detail::require_inclusion(t, h, k);
  detail::require_carrier(t, k, x);
  return t.res(k, h, x);
}

template <TambaraFunctor T>
typename T::Element apply_tr(const T& t, SubgroupId h, SubgroupId k,
                             const typename T::Element& x) {
  detail::require_inclusion(t, h, k);
  detail::require_carrier(t, h, x);
  return t.tr(h, k, x);
}

template <TambaraFunctor T>
typename T::Element apply_nm(const T& t, SubgroupId h, SubgroupId k,
                             const typename T::Element& x) {
  detail::require_inclusion(t, h, k);
  detail::require_carrier(t, h, x);
  return t.nm(h, k, x);
}

/// Result lives at level conjugate_subgroup(H, g).
template <TambaraFunctor T>
typename T::Element apply_conj(const T& t, ElementIndex g, SubgroupId h,
                               const typename T::Element& x) {
  if (g >= t.group().order())
    throw ElementNotInGroup("conjugating element out of range");
  if (h >= t.lattice().subgroups().size())
    throw LevelMismatch("level id out of range");
  detail::require_carrier(t, h, x);
  return t.conj(g, h, x);
}

/// Level of gHg^-1.
inline SubgroupId conjugate_level(const SubgroupLattice& lat, ElementIndex g, SubgroupId h) {
  return lat.id_of(conjugate_subgroup(lat.subgroup(h), g));
}

/// The unique map from the Burnside functor at level H: [H/L] ↦ tr_L^H(1).
/// x must be an element of A(H), i.e. its table acts through H.as_group().
template <TambaraFunctor T>
typename T::Element burnside_to_T(const T& t, SubgroupId h, const BurnsideElement& x) {
  const auto& lat = t.lattice();
  const Subgroup& level = lat.subgroup(h);
  const auto& table = *x.table();
  if (!(table.group() == level.as_group()))
    throw LatticeMismatch("Burnside element is not over the level's subgroup");
  auto result = t.zero(h);
  for (ClassIndex j = 0; j < table.size(); ++j) {
    if (x.coeff(j) == 0)
      continue;
    SubgroupId l = lat.id_of(lift(table.lattice().class_rep(j), level));
    auto term = t.tr(l, h, t.one(l));
    result = t.add(h, result, t.mul(h, t.from_int(h, x.coeff(j)), term));
  }
  return result;
}

struct AxiomCheck {
  std::string name;
  bool pass = true;
  std::size_t cases = 0;
  std::optional<std::string> witness;
};

struct AxiomReport {
  std::string instance;
  std::uint64_t seed = 0;
  std::vector<AxiomCheck> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass)
        return false;
    return true;
  }
};

namespace detail {

/// Records the first failing case of one named law.
class CheckRecorder {
public:
  explicit CheckRecorder(std::string name) { check_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& witness) {
    ++check_.cases;
    if (!ok && check_.pass) {
      check_.pass = false;
      check_.witness = witness();
    }
  }

  AxiomCheck done() { return std::move(check_); }

private:
  AxiomCheck check_;
};

template <class E>
std::vector<std::pair<std::size_t, std::size_t>> pairs_of(const std::vector<E>& xs,
                                                          const std::vector<E>& ys) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (xs.empty() || ys.empty())
    return out;
  if (xs.size() * ys.size() <= 256) {
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = 0; j < ys.size(); ++j)
        out.emplace_back(i, j);
    return out;
  }
  const std::size_t n = std::max(xs.size(), ys.size());
  for (std::size_t i = 0; i < n; ++i)
    out.emplace_back(i % xs.size(), (i * 7 + 3) % ys.size());
  return out;
}

inline std::string level_name(const SubgroupLattice& lat, SubgroupId id) {
  return lat.label(lat.class_of(id)) + "#" + std::to_string(id);
}

} // namespace detail

/// Checks the structure-map laws on `sample_count` seeded test elements per level:
/// ring/additive/multiplicative/isomorphism laws, functoriality of res, tr, nm and conj,
/// conjugation equivariance, Frobenius reciprocity and the additive Mackey formula.
template <TambaraFunctor T>
AxiomReport axiom_report(const T& t, std::size_t sample_count, std::uint64_t seed) {
  if (sample_count == 0)
    throw std::invalid_argument("axiom_report needs at least one sample");
  const auto& G = t.group();
  const auto& lat = t.lattice();
  const std::size_t levels = lat.subgroups().size();
  using E = typename T::Element;
  using detail::level_name;

  std::mt19937_64 rng(seed);
  std::vector<std::vector<E>> elems(levels);
  for (SubgroupId h = 0; h < levels; ++h)
    elems[h] = t.test_elements(h, sample_count, rng);

  auto inside = [&](SubgroupId a, SubgroupId b) {
    return lat.subgroup(a).is_subgroup_of(lat.subgroup(b));
  };
  auto conj_id = [&](ElementIndex g, SubgroupId h) { return conjugate_level(lat, g, h); };
  auto show = [&](const E& x) { return std::string(t.describe(x)); };

  detail::CheckRecorder res_hom("res_ring_hom"), tr_add("tr_additive"),
      nm_mult("nm_multiplicative"), conj_iso("conj_ring_iso"), res_fun("res_functorial"),
      tr_fun("tr_functorial"), nm_fun("nm_functorial"), conj_fun("conj_functorial"),
      conj_eq("conj_equivariance"), frob("frobenius_reciprocity"), mackey("additive_mackey");

  for (SubgroupId k = 0; k < levels; ++k) {
    for (SubgroupId h = 0; h < levels; ++h) {
      if (!inside(h, k))
        continue;
      auto where = [&] { return " H=" + level_name(lat, h) + " K=" + level_name(lat, k); };

      res_hom.expect(t.equal(h, t.res(k, h, t.one(k)), t.one(h)),
                     [&] { return "res(1) != 1" + where(); });
      nm_mult.expect(t.equal(k, t.nm(h, k, t.one(h)), t.one(k)),
                     [&] { return "nm(1) != 1" + where(); });
      tr_add.expect(t.equal(k, t.tr(h, k, t.zero(h)), t.zero(k)),
                    [&] { return "tr(0) != 0" + where(); });

      for (auto [i, j] : detail::pairs_of(elems[k], elems[k])) {
        const E& x = elems[k][i];
        const E& y = elems[k][j];
        res_hom.expect(
            t.equal(h, t.res(k, h, t.add(k, x, y)), t.add(h, t.res(k, h, x), t.res(k, h, y))),
            [&] { return "res(x+y) for x=" + show(x) + " y=" + show(y) + where(); });
        res_hom.expect(
            t.equal(h, t.res(k, h, t.mul(k, x, y)), t.mul(h, t.res(k, h, x), t.res(k, h, y))),
            [&] { return "res(xy) for x=" + show(x) + " y=" + show(y) + where(); });
      }
      for (auto [i, j] : detail::pairs_of(elems[h], elems[h])) {
        const E& x = elems[h][i];
        const E& y = elems[h][j];
        tr_add.expect(
            t.equal(k, t.tr(h, k, t.add(h, x, y)), t.add(k, t.tr(h, k, x), t.tr(h, k, y))),
            [&] { return "tr(x+y) for x=" + show(x) + " y=" + show(y) + where(); });
        nm_mult.expect(
            t.equal(k, t.nm(h, k, t.mul(h, x, y)), t.mul(k, t.nm(h, k, x), t.nm(h, k, y))),
            [&] { return "nm(xy) for x=" + show(x) + " y=" + show(y) + where(); });
      }
      // tr_H^K(x · res_H^K(y)) = tr_H^K(x) · y
      for (auto [i, j] : detail::pairs_of(elems[h], elems[k])) {
        const E& x = elems[h][i];
        const E& y = elems[k][j];
        frob.expect(t.equal(k, t.tr(h, k, t.mul(h, x, t.res(k, h, y))),
                            t.mul(k, t.tr(h, k, x), y)),
                    [&] { return "x=" + show(x) + " y=" + show(y) + where(); });
      }
      if (h == k) {
        for (const E& x : elems[h]) {
          res_fun.expect(t.equal(h, t.res(h, h, x), x),
                         [&] { return "res_H^H != id at " + level_name(lat, h); });
          tr_fun.expect(t.equal(h, t.tr(h, h, x), x),
                        [&] { return "tr_H^H != id at " + level_name(lat, h); });
          nm_fun.expect(t.equal(h, t.nm(h, h, x), x),
                        [&] { return "nm_H^H != id at " + level_name(lat, h); });
        }
      }
      // Chains L ≤ H ≤ K.
      for (SubgroupId l = 0; l < levels; ++l) {
        if (!inside(l, h))
          continue;
        auto chain = [&] { return " L=" + level_name(lat, l) + where(); };
        for (const E& x : elems[k])
          res_fun.expect(t.equal(l, t.res(h, l, t.res(k, h, x)), t.res(k, l, x)),
                         [&] { return "x=" + show(x) + chain(); });
        for (const E& x : elems[l]) {
          tr_fun.expect(t.equal(k, t.tr(h, k, t.tr(l, h, x)), t.tr(l, k, x)),
                        [&] { return "x=" + show(x) + chain(); });
          nm_fun.expect(t.equal(k, t.nm(h, k, t.nm(l, h, x)), t.nm(l, k, x)),
                        [&] { return "x=" + show(x) + chain(); });
        }
      }
    }
  }

  for (SubgroupId h = 0; h < levels; ++h) {
    const Subgroup& sub = lat.subgroup(h);
    for (const E& x : elems[h])
      conj_fun.expect(t.equal(h, t.conj(PermGroup::identity(), h, x), x),
                      [&] { return "conj(e) != id at " + level_name(lat, h); });
    for (ElementIndex g = 0; g < G.order(); ++g) {
      const SubgroupId gh = conj_id(g, h);
      auto where = [&] {
        return " g=" + G.element(g).to_cycles() + " H=" + level_name(lat, h);
      };
      conj_iso.expect(t.equal(gh, t.conj(g, h, t.one(h)), t.one(gh)),
                      [&] { return "conj(1) != 1" + where(); });
      if (sub.contains(g))
        for (const E& x : elems[h])
          conj_fun.expect(t.equal(h, t.conj(g, h, x), x),
                          [&] { return "conj by an element of H moved x=" + show(x) + where(); });
      for (auto [i, j] : detail::pairs_of(elems[h], elems[h])) {
        const E& x = elems[h][i];
        const E& y = elems[h][j];
        conj_iso.expect(
            t.equal(gh, t.conj(g, h, t.add(h, x, y)), t.add(gh, t.conj(g, h, x), t.conj(g, h, y))),
            [&] { return "conj(x+y) for x=" + show(x) + where(); });
        conj_iso.expect(
            t.equal(gh, t.conj(g, h, t.mul(h, x, y)), t.mul(gh, t.conj(g, h, x), t.conj(g, h, y))),
            [&] { return "conj(xy) for x=" + show(x) + where(); });
      }
      for (const E& x : elems[h]) {
        conj_iso.expect(t.equal(h, t.conj(G.inv(g), gh, t.conj(g, h, x)), x),
                        [&] { return "conj(g^-1) conj(g) != id for x=" + show(x) + where(); });
        for (ElementIndex g2 = 0; g2 < G.order(); ++g2) {
          const SubgroupId g2gh = conj_id(g2, gh);
          conj_fun.expect(
              t.equal(g2gh, t.conj(g2, gh, t.conj(g, h, x)), t.conj(G.mul(g2, g), h, x)),
              [&] { return "conj(g2) conj(g) != conj(g2 g) for x=" + show(x) + where(); });
        }
      }
      // conj_g commutes with res, tr and nm along every H ≤ K.
      for (SubgroupId k = 0; k < levels; ++k) {
        if (!inside(h, k))
          continue;
        const SubgroupId gk = conj_id(g, k);
        for (const E& x : elems[k])
          conj_eq.expect(t.equal(gh, t.conj(g, h, t.res(k, h, x)), t.res(gk, gh, t.conj(g, k, x))),
                         [&] { return "res vs conj for x=" + show(x) + where(); });
        for (const E& x : elems[h]) {
          conj_eq.expect(t.equal(gk, t.conj(g, k, t.tr(h, k, x)), t.tr(gh, gk, t.conj(g, h, x))),
                         [&] { return "tr vs conj for x=" + show(x) + where(); });
          conj_eq.expect(t.equal(gk, t.conj(g, k, t.nm(h, k, x)), t.nm(gh, gk, t.conj(g, h, x))),
                         [&] { return "nm vs conj for x=" + show(x) + where(); });
        }
      }
    }
  }

  // res^L_H tr^L_K(x) = Σ_{g ∈ H\L/K} tr^H_{H∩gKg^-1} res^{gKg^-1}_{H∩gKg^-1} conj_g(x)
  for (SubgroupId l = 0; l < levels; ++l) {
    for (SubgroupId h = 0; h < levels; ++h) {
      if (!inside(h, l))
        continue;
      for (SubgroupId k = 0; k < levels; ++k) {
        if (!inside(k, l))
          continue;
        auto reps = double_coset_reps(lat.subgroup(h), lat.subgroup(k), lat.subgroup(l));
        for (const E& x : elems[k]) {
          E lhs = t.res(l, h, t.tr(k, l, x));
          E rhs = t.zero(h);
          for (ElementIndex g : reps) {
            const SubgroupId gk = conj_id(g, k);
            const SubgroupId meet = lat.id_of(intersect(lat.subgroup(h), lat.subgroup(gk)));
            rhs = t.add(h, rhs, t.tr(meet, h, t.res(gk, meet, t.conj(g, k, x))));
          }
          mackey.expect(t.equal(h, lhs, rhs), [&] {
            return "x=" + show(x) + " H=" + level_name(lat, h) + " K=" + level_name(lat, k) +
                   " L=" + level_name(lat, l);
          });
        }
      }
    }
  }

  AxiomReport report;
  report.instance = t.name();
  report.seed = seed;
  for (auto* rec : {&res_hom, &tr_add, &nm_mult, &conj_iso, &res_fun, &tr_fun, &nm_fun,
                    &conj_fun, &conj_eq, &frob, &mackey})
    report.checks.push_back(rec->done());
  return report;
}

struct UnitLevels {
  /// Entry c is true iff k·1 is a unit at the level of class c's representative.
  std::vector<bool> units;
  bool consistent = true;
};

/// Unit status of k·1 at every conjugacy class of levels. The entries should all agree.
template <TambaraFunctor T>
UnitLevels unit_levels(const T& t, const Integer& k) {
  const auto& lat = t.lattice();
  UnitLevels out;
  for (ClassIndex c = 0; c < lat.class_count(); ++c) {
    const SubgroupId h = lat.class_rep_id(c);
    out.units.push_back(t.is_unit(h, t.from_int(h, k)));
  }
  for (bool u : out.units)
    out.consistent = out.consistent && (u == out.units.front());
  return out;
}

} // namespace tamlab
