#include "tamlab/gset.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <unordered_map>

#include "tamlab/errors.hpp"

namespace tamlab {

namespace {

void require_same_group(const GSet& x, const GSet& y) {
  if (!(x.group() == y.group()))
    throw GroupMismatch("G-sets act through different groups");
}

void require_acting_subgroup(const GSet& x, const Subgroup& h) {
  if (!(h.parent() == x.group()))
    throw NotASubgroup("subgroup does not belong to the acting group");
}

void require_level(const GSet& x, const Subgroup& h) {
  if (!(x.group() == h.as_group()))
    throw NotASubgroup("G-set does not act through the given subgroup");
}

// Position of each parent element inside h.members(), or -1.
std::vector<std::ptrdiff_t> member_positions(const Subgroup& h) {
  std::vector<std::ptrdiff_t> pos(h.parent().order(), -1);
  auto members = h.members();
  for (std::size_t j = 0; j < members.size(); ++j)
    pos[members[j]] = static_cast<std::ptrdiff_t>(j);
  return pos;
}

void check_table_size(std::size_t order, std::uint64_t points, const Limits& limits) {
  if (points > limits.max_points)
    throw EnumerationCapExceeded("G-set with " + std::to_string(points) +
                                 " points exceeds the enumeration cap of " +
                                 std::to_string(limits.max_points));
  if (points * order > limits.max_table_entries)
    throw EnumerationCapExceeded("action table with " + std::to_string(points * order) +
                                 " entries exceeds the cap of " +
                                 std::to_string(limits.max_table_entries));
}

} // namespace

std::optional<std::uint64_t> bounded_power(std::uint64_t k, std::size_t n, std::uint64_t cap) {
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (k != 0 && result > cap / k)
      return std::nullopt;
    result *= k;
  }
  if (result > cap)
    return std::nullopt;
  return result;
}

GSet::GSet(PermGroup group, std::size_t size, std::vector<Point> table,
           std::vector<std::string> labels)
    : group_(std::move(group)), size_(size), table_(std::move(table)), labels_(std::move(labels)) {
  if (table_.size() != group_.order() * size_)
    throw std::invalid_argument("action table has the wrong shape");
  if (!labels_.empty() && labels_.size() != size_)
    throw std::invalid_argument("label count differs from point count");
}

bool check_action(const GSet& x) {
  const auto& G = x.group();
  const std::size_t n = x.size();
  for (Point p = 0; p < n; ++p)
    if (x.act(PermGroup::identity(), p) != p)
      return false;
  for (ElementIndex g = 0; g < G.order(); ++g) {
    std::vector<bool> hit(n, false);
    for (Point p = 0; p < n; ++p) {
      Point q = x.act(g, p);
      if (q >= n || hit[q])
        return false;
      hit[q] = true;
    }
  }
  if (G.order() * n <= 1'000'000) {
    for (ElementIndex g = 0; g < G.order(); ++g)
      for (ElementIndex h = 0; h < G.order(); ++h) {
        const ElementIndex gh = G.mul(g, h);
        for (Point p = 0; p < n; ++p)
          if (x.act(gh, p) != x.act(g, x.act(h, p)))
            return false;
      }
    return true;
  }
  std::mt19937_64 rng(0x7a3b);
  for (int trial = 0; trial < 200'000; ++trial) {
    auto g = static_cast<ElementIndex>(rng() % G.order());
    auto h = static_cast<ElementIndex>(rng() % G.order());
    auto p = static_cast<Point>(rng() % n);
    if (x.act(G.mul(g, h), p) != x.act(g, x.act(h, p)))
      return false;
  }
  return true;
}

GSet empty_gset(const PermGroup& g) { return GSet(g, 0, {}); }

GSet trivial_gset(const PermGroup& g, std::size_t n) {
  std::vector<Point> table(g.order() * n);
  for (std::size_t e = 0; e < g.order(); ++e)
    for (std::size_t p = 0; p < n; ++p)
      table[e * n + p] = static_cast<Point>(p);
  return GSet(g, n, std::move(table));
}

GSet coset_gset(const PermGroup& g, const Subgroup& h) {
  auto blocks = left_cosets(g, h);
  std::vector<Point> coset_of(g.order());
  std::vector<std::string> labels;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (ElementIndex e : blocks[b])
      coset_of[e] = static_cast<Point>(b);
    labels.push_back(g.element(blocks[b].front()).to_cycles() + "H");
  }
  const std::size_t n = blocks.size();
  std::vector<Point> table(g.order() * n);
  for (ElementIndex e = 0; e < g.order(); ++e)
    for (std::size_t b = 0; b < n; ++b)
      table[e * n + b] = coset_of[g.mul(e, blocks[b].front())];
  return GSet(g, n, std::move(table), std::move(labels));
}

FixedPoints fixed_points(const GSet& x, const Subgroup& h) {
  require_acting_subgroup(x, h);
  FixedPoints out;
  for (Point p = 0; p < x.size(); ++p) {
    bool fixed = true;
    for (ElementIndex g : h.generators())
      if (x.act(g, p) != p) {
        fixed = false;
        break;
      }
    if (fixed)
      out.points.push_back(p);
  }
  out.count = out.points.size();
  return out;
}

std::vector<Orbit> orbits(const GSet& x) {
  const auto& G = x.group();
  std::vector<bool> seen(x.size(), false);
  std::vector<Orbit> out;
  for (Point p = 0; p < x.size(); ++p) {
    if (seen[p])
      continue;
    ElementMask stab(G.order());
    std::size_t size = 0;
    for (ElementIndex g = 0; g < G.order(); ++g) {
      Point q = x.act(g, p);
      if (q == p)
        stab.set(g);
      if (!seen[q]) {
        seen[q] = true;
        ++size;
      }
    }
    out.push_back({p, size, Subgroup(G, std::move(stab))});
  }
  return out;
}

GSet disjoint_union(const GSet& x, const GSet& y) {
  require_same_group(x, y);
  const std::size_t n = x.size() + y.size();
  const auto& G = x.group();
  std::vector<Point> table(G.order() * n);
  for (ElementIndex g = 0; g < G.order(); ++g) {
    for (Point p = 0; p < x.size(); ++p)
      table[g * n + p] = x.act(g, p);
    for (Point p = 0; p < y.size(); ++p)
      table[g * n + x.size() + p] = static_cast<Point>(x.size() + y.act(g, p));
  }
  return GSet(G, n, std::move(table));
}

GSet product(const GSet& x, const GSet& y) {
  require_same_group(x, y);
  const std::size_t n = x.size() * y.size();
  const auto& G = x.group();
  std::vector<Point> table(G.order() * n);
  for (ElementIndex g = 0; g < G.order(); ++g)
    for (Point a = 0; a < x.size(); ++a)
      for (Point b = 0; b < y.size(); ++b)
        table[g * n + a * y.size() + b] =
            static_cast<Point>(x.act(g, a) * y.size() + y.act(g, b));
  return GSet(G, n, std::move(table));
}

namespace {

// Shared machinery for functions G → {0..k-1} encoded in base k.
struct FunctionCodec {
  const PermGroup& group;
  std::uint64_t k;
  std::vector<std::uint64_t> powers;

  FunctionCodec(const PermGroup& g, std::uint64_t base) : group(g), k(base) {
    powers.resize(g.order());
    std::uint64_t p = 1;
    for (auto& v : powers) {
      v = p;
      p *= base;
    }
  }

  void decode(std::uint64_t code, std::vector<std::uint32_t>& digits) const {
    for (auto& d : digits) {
      d = static_cast<std::uint32_t>(code % k);
      code /= k;
    }
  }

  // (g·f)(i) = f(i∘g)
  std::uint64_t image(const std::vector<std::uint32_t>& digits, ElementIndex g) const {
    std::uint64_t code = 0;
    for (ElementIndex i = 0; i < digits.size(); ++i)
      code += digits[group.mul(i, g)] * powers[i];
    return code;
  }
};

std::uint64_t function_count(const PermGroup& g, std::uint64_t k, const Limits& limits) {
  auto size = bounded_power(k, g.order(), limits.max_points);
  if (!size)
    throw EnumerationCapExceeded("function G-set with k = " + std::to_string(k) +
                                 " on a group of order " + std::to_string(g.order()) +
                                 " exceeds the enumeration cap of " +
                                 std::to_string(limits.max_points));
  return *size;
}

} // namespace

GSet function_gset(const PermGroup& g, std::uint64_t k, const Limits& limits) {
  const std::uint64_t n = function_count(g, k, limits);
  check_table_size(g.order(), n, limits);
  FunctionCodec codec(g, k);
  std::vector<Point> table(g.order() * n);
  std::vector<std::uint32_t> digits(g.order());
  for (std::uint64_t code = 0; code < n; ++code) {
    codec.decode(code, digits);
    for (ElementIndex e = 0; e < g.order(); ++e)
      table[e * n + code] = static_cast<Point>(codec.image(digits, e));
  }
  return GSet(g, n, std::move(table));
}

FunctionCensus function_census(const PermGroup& g, std::uint64_t k, const Limits& limits) {
  const std::uint64_t n = function_count(g, k, limits);
  FunctionCensus census;
  census.points = n;
  FunctionCodec codec(g, k);
  std::vector<bool> seen(n, false);
  std::vector<std::uint32_t> digits(g.order());
  std::unordered_map<ElementMask, std::uint64_t, ElementMaskHash> counts;
  std::vector<ElementMask> first_seen;
  for (std::uint64_t code = 0; code < n; ++code) {
    if (seen[code])
      continue;
    codec.decode(code, digits);
    ElementMask stab(g.order());
    for (ElementIndex e = 0; e < g.order(); ++e) {
      std::uint64_t img = codec.image(digits, e);
      seen[img] = true;
      if (img == code)
        stab.set(e);
    }
    auto [it, inserted] = counts.emplace(stab, 0);
    if (inserted)
      first_seen.push_back(stab);
    ++it->second;
  }
  for (auto& mask : first_seen)
    census.stabilizer_counts.emplace_back(mask, counts[mask]);
  return census;
}

std::uint64_t count_function_fixed_points(const PermGroup& g, std::uint64_t k,
                                          const Subgroup& h, const Limits& limits) {
  if (!(h.parent() == g))
    throw NotASubgroup("subgroup does not belong to the group");
  const std::uint64_t n = function_count(g, k, limits);
  FunctionCodec codec(g, k);
  std::vector<std::uint32_t> digits(g.order());
  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < n; ++code) {
    codec.decode(code, digits);
    bool fixed = true;
    for (ElementIndex gen : h.generators()) {
      for (ElementIndex i = 0; i < g.order() && fixed; ++i)
        fixed = digits[g.mul(i, gen)] == digits[i];
      if (!fixed)
        break;
    }
    if (fixed)
      ++count;
  }
  return count;
}

GSet restrict(const GSet& x, const Subgroup& h) {
  require_acting_subgroup(x, h);
  const std::size_t n = x.size();
  std::vector<Point> table;
  table.reserve(h.order() * n);
  for (ElementIndex m : h.members()) {
    auto r = x.row(m);
    table.insert(table.end(), r.begin(), r.end());
  }
  return GSet(h.as_group(), n, std::move(table), x.labels());
}

GSet induce(const GSet& x, const Subgroup& h_in_k) {
  require_level(x, h_in_k);
  const auto& K = h_in_k.parent();
  auto blocks = left_cosets(K, h_in_k);
  auto pos = member_positions(h_in_k);
  std::vector<std::size_t> coset_of(K.order());
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (ElementIndex e : blocks[b])
      coset_of[e] = b;
  const std::size_t m = blocks.size();
  const std::size_t n = m * x.size();
  std::vector<Point> table(K.order() * n);
  for (ElementIndex e = 0; e < K.order(); ++e) {
    for (std::size_t j = 0; j < m; ++j) {
      // e·l_j = l_{j'}·h
      ElementIndex z = K.mul(e, blocks[j].front());
      std::size_t jp = coset_of[z];
      ElementIndex h = K.mul(K.inv(blocks[jp].front()), z);
      auto hp = static_cast<ElementIndex>(pos[h]);
      for (Point p = 0; p < x.size(); ++p)
        table[e * n + j * x.size() + p] = static_cast<Point>(jp * x.size() + x.act(hp, p));
    }
  }
  return GSet(K, n, std::move(table));
}

GSet coinduce(const GSet& x, const Subgroup& h_in_k, const Limits& limits) {
  require_level(x, h_in_k);
  const auto& K = h_in_k.parent();
  auto blocks = right_cosets(K, h_in_k);
  auto pos = member_positions(h_in_k);
  std::vector<std::size_t> coset_of(K.order());
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (ElementIndex e : blocks[b])
      coset_of[e] = b;
  const std::size_t m = blocks.size();
  auto count = bounded_power(x.size(), m, limits.max_points);
  if (!count)
    throw EnumerationCapExceeded("coinduced G-set exceeds the enumeration cap of " +
                                 std::to_string(limits.max_points));
  const std::uint64_t n = *count;
  check_table_size(K.order(), n, limits);

  // (e·f)(r_j) = f(r_j e) = h'·f(r_{j'}) where r_j e = h' r_{j'}.
  std::vector<std::size_t> target(K.order() * m);
  std::vector<ElementIndex> twist(K.order() * m);
  for (ElementIndex e = 0; e < K.order(); ++e)
    for (std::size_t j = 0; j < m; ++j) {
      ElementIndex z = K.mul(blocks[j].front(), e);
      std::size_t jp = coset_of[z];
      ElementIndex h = K.mul(z, K.inv(blocks[jp].front()));
      target[e * m + j] = jp;
      twist[e * m + j] = static_cast<ElementIndex>(pos[h]);
    }

  const std::uint64_t base = x.size();
  std::vector<std::uint64_t> powers(m);
  for (std::size_t j = 0, p = 1; j < m; ++j, p *= base)
    powers[j] = p;
  std::vector<Point> table(K.order() * n);
  std::vector<Point> values(m);
  for (std::uint64_t code = 0; code < n; ++code) {
    std::uint64_t c = code;
    for (auto& v : values) {
      v = static_cast<Point>(c % base);
      c /= base;
    }
    for (ElementIndex e = 0; e < K.order(); ++e) {
      std::uint64_t img = 0;
      for (std::size_t j = 0; j < m; ++j)
        img += x.act(twist[e * m + j], values[target[e * m + j]]) * powers[j];
      table[e * n + code] = static_cast<Point>(img);
    }
  }
  return GSet(K, n, std::move(table));
}

GSet transport(const GSet& x, const Subgroup& h, ElementIndex g) {
  require_level(x, h);
  const auto& G = h.parent();
  Subgroup target = conjugate_subgroup(h, g);
  auto pos = member_positions(h);
  const std::size_t n = x.size();
  std::vector<Point> table;
  table.reserve(target.order() * n);
  const ElementIndex g_inv = G.inv(g);
  for (ElementIndex y : target.members()) {
    auto r = x.row(static_cast<ElementIndex>(pos[G.conj(g_inv, y)]));
    table.insert(table.end(), r.begin(), r.end());
  }
  return GSet(target.as_group(), n, std::move(table), x.labels());
}

std::vector<std::size_t> orbit_type(const GSet& x, const SubgroupLattice& lattice) {
  if (!(x.group() == lattice.group()))
    throw GroupMismatch("lattice belongs to a different group");
  std::vector<std::size_t> counts(lattice.class_count(), 0);
  for (const auto& orbit : orbits(x))
    ++counts[lattice.class_of(orbit.stabilizer)];
  return counts;
}

bool isomorphic(const GSet& x, const GSet& y, const SubgroupLattice& lattice) {
  return orbit_type(x, lattice) == orbit_type(y, lattice);
}

std::string dump(const GSet& x) {
  std::ostringstream out;
  out << "points " << x.size() << '\n';
  if (!x.labels().empty()) {
    out << "labels";
    for (const auto& l : x.labels())
      out << ' ' << l;
    out << '\n';
  }
  for (ElementIndex g = 0; g < x.group().order(); ++g) {
    out << x.group().element(g).to_cycles() << ':';
    for (Point p : x.row(g))
      out << ' ' << p;
    out << '\n';
  }
  return out.str();
}

} // namespace tamlab
