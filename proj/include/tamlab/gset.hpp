#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tamlab/limits.hpp"
#include "tamlab/perm.hpp"

namespace tamlab {

/// A finite left G-set stored as a full action table.
class GSet {
public:
  /// `table[g * size + x]` is g·x. Width must be group.order() * size.
  GSet(PermGroup group, std::size_t size, std::vector<Point> table,
       std::vector<std::string> labels = {});

  const PermGroup& group() const { return group_; }
  std::size_t size() const { return size_; }
  Point act(ElementIndex g, Point x) const { return table_[g * size_ + x]; }
  std::span<const Point> row(ElementIndex g) const {
    return {table_.data() + static_cast<std::size_t>(g) * size_, size_};
  }
  const std::vector<std::string>& labels() const { return labels_; }

private:
  PermGroup group_;
  std::size_t size_;
  std::vector<Point> table_;
  std::vector<std::string> labels_;
};

/// Checks act[e] = id and act[gh] = act[g]∘act[h]. Exhaustive when |G|·|X| ≤ 10^6,
/// otherwise on a fixed-seed sample of (g, h, x) triples.
bool check_action(const GSet& x);

GSet empty_gset(const PermGroup& g);
/// n points, each fixed by all of G.
GSet trivial_gset(const PermGroup& g, std::size_t n);

/// Left cosets of H with action by left translation; point order follows left_cosets().
GSet coset_gset(const PermGroup& g, const Subgroup& h);

struct FixedPoints {
  std::size_t count = 0;
  std::vector<Point> points;
};

/// X^H. Throws NotASubgroup unless H is a subgroup of X's group.
FixedPoints fixed_points(const GSet& x, const Subgroup& h);

struct Orbit {
  Point representative;
  std::size_t size;
  Subgroup stabilizer;
};

/// Orbits in order of least point.
std::vector<Orbit> orbits(const GSet& x);

/// Throws GroupMismatch unless both act through the same group.
GSet disjoint_union(const GSet& x, const GSet& y);
/// Cartesian product with the diagonal action; point (a, b) is a * |Y| + b.
GSet product(const GSet& x, const GSet& y);

/// All functions G → {1..k} with (g·f)(g') = f(g'g). Point f is the base-k number whose
/// digit at position i is f(element i) - 1. Throws EnumerationCapExceeded when k^|G|
/// exceeds limits.max_points or the table would exceed limits.max_table_entries.
GSet function_gset(const PermGroup& g, std::uint64_t k, const Limits& limits = {});

/// Same points and action restricted to H; the result acts through H.as_group().
GSet restrict(const GSet& x, const Subgroup& h);

/// K ×_H X for X acting through h_in_k.as_group(). Point (j, x) is j * |X| + x where j
/// indexes the left cosets of H in K.
GSet induce(const GSet& x, const Subgroup& h_in_k);

/// H-equivariant maps f: K → X (f(hk) = h·f(k)) with (k·f)(k') = f(k'k). A map is
/// encoded by its values on the least representatives of the right cosets Hk.
GSet coinduce(const GSet& x, const Subgroup& h_in_k, const Limits& limits = {});

/// Moves an H-set to a gHg^-1-set along conjugation by g ∈ G, where H ≤ G.
GSet transport(const GSet& x, const Subgroup& h, ElementIndex g);

/// Number of orbits of each conjugacy-class type, indexed by class.
std::vector<std::size_t> orbit_type(const GSet& x, const SubgroupLattice& lattice);
/// Finite G-sets are isomorphic iff their orbit types agree.
bool isomorphic(const GSet& x, const GSet& y, const SubgroupLattice& lattice);

/// Plain-text grid of the action table: one row per group element.
std::string dump(const GSet& x);

/// Orbit decomposition of function_gset(g, k) computed by streaming over the points.
/// Each entry is (stabilizer of an orbit, number of orbits with that stabilizer).
struct FunctionCensus {
  std::vector<std::pair<ElementMask, std::uint64_t>> stabilizer_counts;
  std::uint64_t points = 0;
};
/// Throws EnumerationCapExceeded when k^|G| exceeds limits.max_points.
FunctionCensus function_census(const PermGroup& g, std::uint64_t k, const Limits& limits = {});

/// Direct count of functions G → {1..k} with f(gh) = f(g) for every h ∈ H.
std::uint64_t count_function_fixed_points(const PermGroup& g, std::uint64_t k,
                                          const Subgroup& h, const Limits& limits = {});

/// k^n if it is at most `cap`, otherwise nullopt.
std::optional<std::uint64_t> bounded_power(std::uint64_t k, std::size_t n, std::uint64_t cap);

} // namespace tamlab
