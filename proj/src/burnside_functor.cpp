#include "tamlab/burnside_functor.hpp"

#include "tamlab/errors.hpp"
#include "tamlab/gset.hpp"

namespace tamlab {

BurnsideInstance::BurnsideInstance(PermGroup group, const Limits& limits,
                                   std::size_t nm_enumeration_limit)
    : lattice_(subgroup_lattice(group, limits)), limits_(limits),
      nm_limit_(nm_enumeration_limit) {
  for (const auto& sub : lattice_.subgroups()) {
    PermGroup level = sub.as_group();
    if (sub.order() == group.order() && !group.name().empty())
      level = level.renamed(group.name());
    level_groups_.push_back(level);
    levels_.push_back(table_of_marks(level_groups_.back(), limits_));
  }
}

BurnsideInstance::Element BurnsideInstance::apply_linear(const Matrix& m, const MarksTable& target,
                                                         const Element& x) const {
  std::vector<Integer> c(target->size());
  for (ClassIndex j = 0; j < x.table()->size(); ++j) {
    if (x.coeff(j) == 0)
      continue;
    for (ClassIndex i = 0; i < c.size(); ++i)
      c[i] += m[j][i] * x.coeff(j);
  }
  return BurnsideElement(target, std::move(c));
}

const BurnsideInstance::Matrix& BurnsideInstance::res_matrix(SubgroupId k, SubgroupId h) const {
  std::lock_guard lock(cache_mutex_);
  auto key = std::make_pair(k, h);
  if (auto it = res_cache_.find(key); it != res_cache_.end())
    return it->second;
  const Subgroup inner = descend(lattice_.subgroup(h), lattice_.subgroup(k));
  const auto& source = *levels_[k];
  Matrix m;
  for (ClassIndex j = 0; j < source.size(); ++j) {
    GSet orbit = coset_gset(level_groups_[k], source.lattice().class_rep(j));
    auto image = decompose(restrict(orbit, inner), levels_[h]);
    m.emplace_back(image.coeffs().begin(), image.coeffs().end());
  }
  return res_cache_.emplace(key, std::move(m)).first->second;
}

const BurnsideInstance::Matrix& BurnsideInstance::tr_matrix(SubgroupId h, SubgroupId k) const {
  std::lock_guard lock(cache_mutex_);
  auto key = std::make_pair(h, k);
  if (auto it = tr_cache_.find(key); it != tr_cache_.end())
    return it->second;
  const Subgroup inner = descend(lattice_.subgroup(h), lattice_.subgroup(k));
  const auto& source = *levels_[h];
  Matrix m;
  for (ClassIndex j = 0; j < source.size(); ++j) {
    GSet orbit = coset_gset(level_groups_[h], source.lattice().class_rep(j));
    auto image = decompose(induce(orbit, inner), levels_[k]);
    m.emplace_back(image.coeffs().begin(), image.coeffs().end());
  }
  return tr_cache_.emplace(key, std::move(m)).first->second;
}

BurnsideInstance::Element BurnsideInstance::res(SubgroupId k, SubgroupId h,
                                                const Element& x) const {
  return apply_linear(res_matrix(k, h), levels_[h], x);
}

BurnsideInstance::Element BurnsideInstance::tr(SubgroupId h, SubgroupId k,
                                               const Element& x) const {
  return apply_linear(tr_matrix(h, k), levels_[k], x);
}

BurnsideInstance::Element BurnsideInstance::nm_by_coinduction(SubgroupId h, SubgroupId k,
                                                              const Element& x) const {
  const Subgroup inner = descend(lattice_.subgroup(h), lattice_.subgroup(k));
  return decompose(coinduce(realize(x), inner, limits_), levels_[k]);
}

BurnsideInstance::Element BurnsideInstance::nm_by_marks(SubgroupId h, SubgroupId k,
                                                        const Element& x) const {
  const Subgroup& hs = lattice_.subgroup(h);
  const Subgroup& ks = lattice_.subgroup(k);
  const auto& target = *levels_[k];
  const auto& source = *levels_[h];
  const MarksVector xm = ghost(x);
  const auto& G = lattice_.group();
  MarksVector out;
  for (ClassIndex c = 0; c < target.size(); ++c) {
    const Subgroup l = lift(target.lattice().class_rep(c), ks);
    Integer value = 1;
    for (ElementIndex r : double_coset_reps(hs, l, ks)) {
      ElementMask conj_mask(G.order());
      for (ElementIndex m : l.members())
        conj_mask.set(G.conj(r, m));
      const Subgroup meet = intersect(hs, Subgroup(G, std::move(conj_mask)));
      value *= xm.values[source.lattice().class_of(descend(meet, hs))];
    }
    out.values.push_back(std::move(value));
  }
  return from_marks(levels_[k], out);
}

BurnsideInstance::Element BurnsideInstance::nm(SubgroupId h, SubgroupId k,
                                               const Element& x) const {
  if (h == k)
    return x;
  if (x.is_nonnegative()) {
    Integer points = 0;
    const auto& t = *x.table();
    for (ClassIndex j = 0; j < t.size(); ++j)
      points += x.coeff(j) * static_cast<std::uint64_t>(t.lattice().index_of(j));
    const std::size_t index = lattice_.subgroup(h).index() / lattice_.subgroup(k).index();
    if (ipow(points, index) <= nm_limit_)
      return nm_by_coinduction(h, k, x);
  }
  return nm_by_marks(h, k, x);
}

BurnsideInstance::Element BurnsideInstance::conj(ElementIndex g, SubgroupId h,
                                                 const Element& x) const {
  const SubgroupId target = lattice_.id_of(conjugate_subgroup(lattice_.subgroup(h), g));
  const auto& source = *levels_[h];
  std::vector<Integer> c(levels_[target]->size());
  for (ClassIndex j = 0; j < source.size(); ++j) {
    if (x.coeff(j) == 0)
      continue;
    GSet orbit = coset_gset(level_groups_[h], source.lattice().class_rep(j));
    auto image = decompose(transport(orbit, lattice_.subgroup(h), g), levels_[target]);
    for (ClassIndex i = 0; i < c.size(); ++i)
      c[i] += image.coeff(i) * x.coeff(j);
  }
  return BurnsideElement(levels_[target], std::move(c));
}

std::vector<BurnsideInstance::Element>
BurnsideInstance::test_elements(SubgroupId h, std::size_t count, std::mt19937_64& rng) const {
  const auto& table = levels_[h];
  std::vector<Element> out;
  for (ClassIndex j = 0; j < table->size(); ++j)
    out.push_back(BurnsideElement::basis(table, j));
  if (table->size() > 1)
    out.push_back(one(h));
  for (std::size_t s = 0; s < std::min<std::size_t>(count, 4); ++s) {
    std::vector<Integer> c(table->size());
    for (auto& v : c)
      v = static_cast<int>(rng() % 5) - 2;
    out.emplace_back(table, std::move(c));
  }
  return out;
}

} // namespace tamlab
