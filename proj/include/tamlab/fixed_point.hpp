#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tamlab/integer.hpp"
#include "tamlab/limits.hpp"
#include "tamlab/perm.hpp"

namespace tamlab {

/// Fixed-point Tambara functor of R = (ℤ/n)^d with G permuting coordinates.
/// T(G/H) = R^H, res = inclusion, tr = sum over K/H, nm = product over K/H,
/// conj(g) = the action of g.
///
/// The regular instance uses d = |G| with coordinates indexed by elements and
/// (g·x)_a = x_{a g}. The diagonal instance is ℤ/n with the trivial action.
class FixedPointInstance {
public:
  using Element = std::vector<std::uint32_t>;

  FixedPointInstance(PermGroup group, std::uint32_t modulus, bool diagonal = false,
                     const Limits& limits = {});

  const PermGroup& group() const { return lattice_.group(); }
  const SubgroupLattice& lattice() const { return lattice_; }
  std::string name() const;
  std::uint32_t modulus() const { return modulus_; }
  std::size_t dimension() const { return dimension_; }

  /// g·x on the whole of R.
  Element act(ElementIndex g, const Element& x) const;

  bool contains(SubgroupId h, const Element& x) const;
  Element zero(SubgroupId h) const;
  Element one(SubgroupId h) const;
  Element from_int(SubgroupId h, const Integer& k) const;
  Element add(SubgroupId h, const Element& a, const Element& b) const;
  Element mul(SubgroupId h, const Element& a, const Element& b) const;
  Element neg(SubgroupId h, const Element& a) const;
  bool equal(SubgroupId h, const Element& a, const Element& b) const;

  Element res(SubgroupId k, SubgroupId h, const Element& x) const;
  Element tr(SubgroupId h, SubgroupId k, const Element& x) const;
  Element nm(SubgroupId h, SubgroupId k, const Element& x) const;
  Element conj(ElementIndex g, SubgroupId h, const Element& x) const;

  /// Number of elements of R^H: n^(number of H-orbits on coordinates).
  Integer carrier_size(SubgroupId h) const;
  /// Every element of R^H. Throws EnumerationCapExceeded past limits.max_points.
  std::vector<Element> carrier(SubgroupId h) const;
  /// Exhaustive search of R^H for y with x·y = 1.
  std::optional<Element> find_inverse(SubgroupId h, const Element& x) const;
  bool is_unit(SubgroupId h, const Element& x) const { return find_inverse(h, x).has_value(); }

  /// 0, 1 and `count` uniformly drawn elements of R^H.
  std::vector<Element> test_elements(SubgroupId h, std::size_t count, std::mt19937_64& rng) const;
  std::string describe(const Element& x) const;

private:
  // Coordinate orbits of each level, as lists of coordinates.
  const std::vector<std::vector<std::size_t>>& orbits_of(SubgroupId h) const {
    return orbits_[h];
  }
  Element from_orbit_values(SubgroupId h, const std::vector<std::uint32_t>& values) const;

  SubgroupLattice lattice_;
  std::uint32_t modulus_;
  bool diagonal_;
  std::size_t dimension_;
  Limits limits_;
  // coord_image_[g * d + a]: coordinate that (g·x)_a reads, i.e. (g·x)_a = x_{coord_image_}.
  std::vector<std::size_t> coord_image_;
  std::vector<std::vector<std::vector<std::size_t>>> orbits_;
};

} // namespace tamlab
