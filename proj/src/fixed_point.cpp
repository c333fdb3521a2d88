#include "tamlab/fixed_point.hpp"

#include <numeric>
#include <sstream>

#include "tamlab/errors.hpp"

namespace tamlab {

FixedPointInstance::FixedPointInstance(PermGroup group, std::uint32_t modulus, bool diagonal,
                                       const Limits& limits)
    : lattice_(subgroup_lattice(group, limits)), modulus_(modulus), diagonal_(diagonal),
      dimension_(diagonal ? 1 : group.order()), limits_(limits) {
  if (modulus_ == 0)
    throw std::invalid_argument("modulus must be positive");
  const auto& G = lattice_.group();
  coord_image_.resize(G.order() * dimension_);
  for (ElementIndex g = 0; g < G.order(); ++g)
    for (std::size_t a = 0; a < dimension_; ++a)
      coord_image_[g * dimension_ + a] = diagonal_ ? a : G.mul(static_cast<ElementIndex>(a), g);

  orbits_.resize(lattice_.subgroups().size());
  for (SubgroupId h = 0; h < orbits_.size(); ++h) {
    std::vector<bool> seen(dimension_, false);
    for (std::size_t a = 0; a < dimension_; ++a) {
      if (seen[a])
        continue;
      std::vector<std::size_t> orbit;
      for (ElementIndex m : lattice_.subgroup(h).members()) {
        std::size_t b = coord_image_[m * dimension_ + a];
        if (!seen[b]) {
          seen[b] = true;
          orbit.push_back(b);
        }
      }
      orbits_[h].push_back(std::move(orbit));
    }
  }
}

std::string FixedPointInstance::name() const {
  return "fixed:n=" + std::to_string(modulus_) + (diagonal_ ? ",diag" : "");
}

FixedPointInstance::Element FixedPointInstance::act(ElementIndex g, const Element& x) const {
  Element out(dimension_);
  for (std::size_t a = 0; a < dimension_; ++a)
    out[a] = x[coord_image_[g * dimension_ + a]];
  return out;
}

bool FixedPointInstance::contains(SubgroupId h, const Element& x) const {
  if (h >= orbits_.size() || x.size() != dimension_)
    return false;
  for (auto v : x)
    if (v >= modulus_)
      return false;
  for (const auto& orbit : orbits_of(h))
    for (std::size_t a : orbit)
      if (x[a] != x[orbit.front()])
        return false;
  return true;
}

FixedPointInstance::Element FixedPointInstance::zero(SubgroupId) const {
  return Element(dimension_, 0);
}

FixedPointInstance::Element FixedPointInstance::one(SubgroupId) const {
  return Element(dimension_, 1 % modulus_);
}

FixedPointInstance::Element FixedPointInstance::from_int(SubgroupId, const Integer& k) const {
  Integer r = k % modulus_;
  if (r < 0)
    r += modulus_;
  return Element(dimension_, static_cast<std::uint32_t>(r));
}

FixedPointInstance::Element FixedPointInstance::add(SubgroupId, const Element& a,
                                                    const Element& b) const {
  Element out(dimension_);
  for (std::size_t i = 0; i < dimension_; ++i)
    out[i] = static_cast<std::uint32_t>((std::uint64_t{a[i]} + b[i]) % modulus_);
  return out;
}

FixedPointInstance::Element FixedPointInstance::mul(SubgroupId, const Element& a,
                                                    const Element& b) const {
  Element out(dimension_);
  for (std::size_t i = 0; i < dimension_; ++i)
    out[i] = static_cast<std::uint32_t>((std::uint64_t{a[i]} * b[i]) % modulus_);
  return out;
}

FixedPointInstance::Element FixedPointInstance::neg(SubgroupId, const Element& a) const {
  Element out(dimension_);
  for (std::size_t i = 0; i < dimension_; ++i)
    out[i] = (modulus_ - a[i]) % modulus_;
  return out;
}

bool FixedPointInstance::equal(SubgroupId, const Element& a, const Element& b) const {
  return a == b;
}

FixedPointInstance::Element FixedPointInstance::res(SubgroupId, SubgroupId,
                                                    const Element& x) const {
  return x;
}

FixedPointInstance::Element FixedPointInstance::tr(SubgroupId h, SubgroupId k,
                                                   const Element& x) const {
  Element out = zero(k);
  for (ElementIndex r : left_transversal(lattice_.subgroup(h), lattice_.subgroup(k)))
    out = add(k, out, act(r, x));
  return out;
}

FixedPointInstance::Element FixedPointInstance::nm(SubgroupId h, SubgroupId k,
                                                   const Element& x) const {
  Element out = one(k);
  for (ElementIndex r : left_transversal(lattice_.subgroup(h), lattice_.subgroup(k)))
    out = mul(k, out, act(r, x));
  return out;
}

FixedPointInstance::Element FixedPointInstance::conj(ElementIndex g, SubgroupId,
                                                     const Element& x) const {
  return act(g, x);
}

Integer FixedPointInstance::carrier_size(SubgroupId h) const {
  return ipow(Integer(modulus_), orbits_of(h).size());
}

FixedPointInstance::Element
FixedPointInstance::from_orbit_values(SubgroupId h, const std::vector<std::uint32_t>& values) const {
  Element x(dimension_);
  const auto& orbits = orbits_of(h);
  for (std::size_t o = 0; o < orbits.size(); ++o)
    for (std::size_t a : orbits[o])
      x[a] = values[o];
  return x;
}

std::vector<FixedPointInstance::Element> FixedPointInstance::carrier(SubgroupId h) const {
  if (carrier_size(h) > limits_.max_points)
    throw EnumerationCapExceeded("carrier of level #" + std::to_string(h) +
                                 " exceeds the enumeration cap");
  const std::size_t m = orbits_of(h).size();
  std::vector<Element> out;
  std::vector<std::uint32_t> values(m, 0);
  while (true) {
    out.push_back(from_orbit_values(h, values));
    std::size_t i = 0;
    while (i < m && ++values[i] == modulus_)
      values[i++] = 0;
    if (i == m)
      break;
  }
  return out;
}

std::optional<FixedPointInstance::Element> FixedPointInstance::find_inverse(SubgroupId h,
                                                                          const Element& x) const {
  if (!contains(h, x))
    throw ElementNotInCarrier("element " + describe(x) + " is not in the carrier");
  if (carrier_size(h) > limits_.max_points)
    throw EnumerationCapExceeded("carrier of level #" + std::to_string(h) +
                                 " exceeds the enumeration cap");
  const auto& orbits = orbits_of(h);
  const std::size_t m = orbits.size();
  const std::uint32_t unit = 1 % modulus_;
  // Elements of R^H are constant on coordinate orbits, so x·y = 1 is checked one orbit
  // at a time on the candidate's orbit values.
  std::vector<std::uint32_t> values(m, 0);
  while (true) {
    bool inverse = true;
    for (std::size_t o = 0; o < m && inverse; ++o)
      inverse = (std::uint64_t{x[orbits[o].front()]} * values[o]) % modulus_ == unit;
    if (inverse)
      return from_orbit_values(h, values);
    std::size_t i = 0;
    while (i < m && ++values[i] == modulus_)
      values[i++] = 0;
    if (i == m)
      return std::nullopt;
  }
}

std::vector<FixedPointInstance::Element>
FixedPointInstance::test_elements(SubgroupId h, std::size_t count, std::mt19937_64& rng) const {
  std::vector<Element> out{zero(h), one(h)};
  const std::size_t m = orbits_of(h).size();
  std::vector<std::uint32_t> values(m);
  for (std::size_t s = 0; s < count; ++s) {
    for (auto& v : values)
      v = static_cast<std::uint32_t>(rng() % modulus_);
    out.push_back(from_orbit_values(h, values));
  }
  return out;
}

std::string FixedPointInstance::describe(const Element& x) const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < x.size(); ++i)
    out << (i ? "," : "") << x[i];
  out << ')';
  return out.str();
}

} // namespace tamlab
