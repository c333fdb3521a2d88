#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tamlab/burnside.hpp"
#include "tamlab/limits.hpp"
#include "tamlab/perm.hpp"

namespace tamlab {

/// The Burnside Tambara functor: level H is A(H).
///
/// res and tr are the linear extensions of restriction and induction of coset H-sets.
/// nm of an honest H-set is the class of the coinduced K-set when that set has at most
/// `nm_enumeration_limit` points; otherwise (and for virtual elements) it is computed on
/// marks: χ^L(nm_H^K x) = Π over HkL ∈ H\K/L of χ^{H ∩ kLk^-1}(x).
/// conj transports action tables along g.
class BurnsideInstance {
public:
  using Element = BurnsideElement;

  explicit BurnsideInstance(PermGroup group, const Limits& limits = {},
                            std::size_t nm_enumeration_limit = 4096);

  const PermGroup& group() const { return lattice_.group(); }
  const SubgroupLattice& lattice() const { return lattice_; }
  std::string name() const { return "burnside"; }

  /// A(H) for level h.
  const MarksTable& level(SubgroupId h) const { return levels_[h]; }

  bool contains(SubgroupId h, const Element& x) const { return x.table() == levels_[h]; }
  Element zero(SubgroupId h) const { return BurnsideElement::zero(levels_[h]); }
  Element one(SubgroupId h) const { return BurnsideElement::one(levels_[h]); }
  Element from_int(SubgroupId h, const Integer& k) const {
    return BurnsideElement::integer(levels_[h], k);
  }
  Element add(SubgroupId, const Element& a, const Element& b) const { return a + b; }
  Element mul(SubgroupId, const Element& a, const Element& b) const { return a * b; }
  Element neg(SubgroupId, const Element& a) const { return -a; }
  bool equal(SubgroupId, const Element& a, const Element& b) const { return a == b; }

  Element res(SubgroupId k, SubgroupId h, const Element& x) const;
  Element tr(SubgroupId h, SubgroupId k, const Element& x) const;
  Element nm(SubgroupId h, SubgroupId k, const Element& x) const;
  Element conj(ElementIndex g, SubgroupId h, const Element& x) const;

  /// nm through coinduction only. Throws for virtual elements or past the caps.
  Element nm_by_coinduction(SubgroupId h, SubgroupId k, const Element& x) const;
  /// nm through the double-coset marks formula only.
  Element nm_by_marks(SubgroupId h, SubgroupId k, const Element& x) const;

  /// Only ±1 are units among integers, but the test is the general one.
  bool is_unit(SubgroupId, const Element& x) const { return tamlab::is_unit(x); }

  /// Every basis element and 1, followed by min(count, 4) seeded elements with
  /// coefficients in [-2, 2].
  std::vector<Element> test_elements(SubgroupId h, std::size_t count, std::mt19937_64& rng) const;
  std::string describe(const Element& x) const { return format(x); }

private:
  using Matrix = std::vector<std::vector<Integer>>; // column j = image of basis j
  const Matrix& res_matrix(SubgroupId k, SubgroupId h) const;
  const Matrix& tr_matrix(SubgroupId h, SubgroupId k) const;
  Element apply_linear(const Matrix& m, const MarksTable& target, const Element& x) const;

  SubgroupLattice lattice_;
  Limits limits_;
  std::size_t nm_limit_;
  std::vector<PermGroup> level_groups_;
  std::vector<MarksTable> levels_;

  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<SubgroupId, SubgroupId>, Matrix> res_cache_;
  mutable std::map<std::pair<SubgroupId, SubgroupId>, Matrix> tr_cache_;
};

} // namespace tamlab
