#pragma once

// Brute-force reference computations shared by the unit and acceptance tests.
// Nothing here calls the code it is used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "tamlab/burnside.hpp"
#include "tamlab/gset.hpp"
#include "tamlab/perm.hpp"

namespace oracle {

using namespace tamlab;

/// Every subset of G closed under products, by exhaustion. |G| <= 16.
inline std::vector<std::vector<ElementIndex>> all_subgroups(const PermGroup& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<ElementIndex>> out;
  for (std::uint32_t bits = 1; bits < (std::uint32_t{1} << n); bits += 2) {
    bool closed = true;
    for (std::size_t a = 0; a < n && closed; ++a)
      if (bits >> a & 1U)
        for (std::size_t b = 0; b < n && closed; ++b)
          if (bits >> b & 1U)
            closed = bits >> g.mul(static_cast<ElementIndex>(a), static_cast<ElementIndex>(b)) & 1U;
    if (!closed)
      continue;
    std::vector<ElementIndex> s;
    for (std::size_t a = 0; a < n; ++a)
      if (bits >> a & 1U)
        s.push_back(static_cast<ElementIndex>(a));
    out.push_back(s);
  }
  return out;
}

/// Closure of a set of elements under the raw permutation product.
inline std::set<std::vector<Point>> raw_closure(const std::vector<Permutation>& gens,
                                               std::size_t degree) {
  std::set<std::vector<Point>> seen;
  std::vector<Permutation> frontier{Permutation::identity(degree)};
  seen.insert({frontier[0].images().begin(), frontier[0].images().end()});
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier)
      for (const auto& s : gens) {
        Permutation q = p * s;
        std::vector<Point> key(q.images().begin(), q.images().end());
        if (seen.insert(key).second)
          next.push_back(q);
      }
    frontier = std::move(next);
  }
  return seen;
}

/// Subgroups generated by at most two elements, as sorted element lists.
inline std::set<std::vector<ElementIndex>> two_generated_subgroups(const PermGroup& g) {
  std::set<std::vector<ElementIndex>> out;
  for (ElementIndex a = 0; a < g.order(); ++a)
    for (ElementIndex b = a; b < g.order(); ++b) {
      std::vector<ElementIndex> members{0};
      std::vector<bool> in(g.order(), false);
      in[0] = true;
      for (std::size_t i = 0; i < members.size(); ++i)
        for (ElementIndex s : {a, b}) {
          ElementIndex c = g.mul(members[i], s);
          if (!in[c]) {
            in[c] = true;
            members.push_back(c);
          }
        }
      std::sort(members.begin(), members.end());
      out.insert(members);
    }
  return out;
}

/// The sorted element list of x H x^-1.
inline std::vector<ElementIndex> conjugate(const PermGroup& g, const std::vector<ElementIndex>& h,
                                           ElementIndex x) {
  std::vector<ElementIndex> out;
  for (ElementIndex e : h)
    out.push_back(g.mul(g.mul(x, e), g.inv(x)));
  std::sort(out.begin(), out.end());
  return out;
}

/// Number of conjugacy classes among the given subgroups.
inline std::size_t class_count(const PermGroup& g,
                               const std::vector<std::vector<ElementIndex>>& subs) {
  std::set<std::vector<ElementIndex>> seen;
  std::size_t classes = 0;
  for (const auto& h : subs) {
    if (seen.count(h))
      continue;
    ++classes;
    for (ElementIndex x = 0; x < g.order(); ++x)
      seen.insert(conjugate(g, h, x));
  }
  return classes;
}

/// |(G/K)^H| by testing each coset xK for H x K = x K, straight from the definition.
inline std::int64_t mark(const PermGroup& g, const Subgroup& h, const Subgroup& k) {
  std::vector<bool> done(g.order(), false);
  std::int64_t fixed = 0;
  for (ElementIndex x = 0; x < g.order(); ++x) {
    if (done[x])
      continue;
    std::set<ElementIndex> coset;
    for (ElementIndex m : k.members())
      coset.insert(g.mul(x, m));
    for (ElementIndex c : coset)
      done[c] = true;
    bool stable = true;
    for (ElementIndex a : h.members())
      stable = stable && coset.count(g.mul(a, x)) == 1;
    fixed += stable;
  }
  return fixed;
}

/// The table of marks recounted with fixed_points over coset_gset.
inline std::vector<std::vector<std::int64_t>> marks_by_fixed_points(const SubgroupLattice& lat) {
  const std::size_t c = lat.class_count();
  std::vector<std::vector<std::int64_t>> m(c, std::vector<std::int64_t>(c));
  for (ClassIndex j = 0; j < c; ++j) {
    GSet x = coset_gset(lat.group(), lat.class_rep(j));
    for (ClassIndex i = 0; i < c; ++i)
      m[i][j] = static_cast<std::int64_t>(fixed_points(x, lat.class_rep(i)).count);
  }
  return m;
}

/// Marks of an element as Σ_j c_j m(i, j).
inline std::vector<Integer> marks_of(const BurnsideElement& x) {
  const auto& t = *x.table();
  std::vector<Integer> v(t.size(), 0);
  for (ClassIndex i = 0; i < t.size(); ++i)
    for (ClassIndex j = 0; j < t.size(); ++j)
      v[i] += x.coeff(j) * t.mark(i, j);
  return v;
}

/// Primes dividing |n| by plain trial division.
inline std::vector<std::int64_t> primes_dividing(std::int64_t n) {
  n = n < 0 ? -n : n;
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p <= n; ++p) {
    bool prime = true;
    for (std::int64_t d = 2; d * d <= p && prime; ++d)
      prime = p % d != 0;
    if (prime && n % p == 0)
      out.push_back(p);
  }
  return out;
}

/// x is a unit of A(G)[1/u] iff on every class, each prime ideal through the mark of x
/// also holds the mark of u. Marks must fit in int64.
inline bool unit_in_localization(const BurnsideElement& x, const BurnsideElement& u) {
  auto a = marks_of(x);
  auto b = marks_of(u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto ai = static_cast<std::int64_t>(a[i]);
    auto bi = static_cast<std::int64_t>(b[i]);
    if (ai == 0) {
      if (bi != 0)
        return false;
      continue;
    }
    for (auto p : primes_dividing(ai))
      if (bi % p != 0)
        return false;
  }
  return true;
}

/// Orbit sizes of all functions G -> {0..k-1} under (g·f)(a) = f(a g), grouped by the
/// stabilizer's element list. Raw enumeration.
inline std::map<std::vector<ElementIndex>, std::uint64_t> function_orbits(const PermGroup& g,
                                                                          std::uint64_t k) {
  const std::size_t n = g.order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i)
    total *= k;
  auto act = [&](ElementIndex s, const std::vector<std::uint32_t>& f) {
    std::vector<std::uint32_t> out(n);
    for (ElementIndex a = 0; a < n; ++a)
      out[a] = f[g.mul(a, s)];
    return out;
  };
  std::set<std::vector<std::uint32_t>> seen;
  std::map<std::vector<ElementIndex>, std::uint64_t> counts;
  std::vector<std::uint32_t> f(n, 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      f[i] = static_cast<std::uint32_t>(c % k);
      c /= k;
    }
    if (seen.count(f))
      continue;
    std::vector<ElementIndex> stab;
    for (ElementIndex s = 0; s < n; ++s) {
      auto y = act(s, f);
      seen.insert(y);
      if (y == f)
        stab.push_back(s);
    }
    ++counts[stab];
  }
  return counts;
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

} // namespace oracle
