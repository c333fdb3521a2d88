#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tamlab/limits.hpp"

namespace tamlab {

using Point = std::uint32_t;
/// Position of an element in a group's canonical (image-tuple sorted) order.
using ElementIndex = std::uint32_t;
/// Position of a subgroup in SubgroupLattice::subgroups().
using SubgroupId = std::size_t;
/// Position of a conjugacy class of subgroups in the canonical class order.
using ClassIndex = std::size_t;

/// A bijection of {0, ..., n-1}. Composition is right-to-left: (a * b)(x) = a(b(x)).
class Permutation {
public:
  Permutation() = default;
  /// Throws InvalidPermutation unless `images` is a bijection of {0..n-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point p) const { return images_[p]; }
  std::span<const Point> images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  /// 1-based cycle notation, "()" for the identity.
  std::string to_cycles() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<Point> images_;
};

/// Parses 1-based cycle notation such as "(1 2)(3 4)". Juxtaposed cycles compose
/// right-to-left. Throws ParseError on malformed text or points outside 1..degree.
Permutation parse_cycles(std::string_view text, std::size_t degree);

/// Fixed-size bitset over a group's canonical element order.
class ElementMask {
public:
  ElementMask() = default;
  explicit ElementMask(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  std::size_t count() const;
  bool is_subset_of(const ElementMask& other) const;
  std::vector<ElementIndex> members() const;
  std::size_t hash() const;

  friend ElementMask operator&(const ElementMask& a, const ElementMask& b);
  friend bool operator==(const ElementMask&, const ElementMask&) = default;

private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementMaskHash {
  std::size_t operator()(const ElementMask& m) const { return m.hash(); }
};

/// Finite permutation group with all elements enumerated and a cached Cayley table.
/// Cheap to copy; copies share the immutable data.
class PermGroup {
public:
  /// Trivial group on one point.
  PermGroup();

  std::size_t degree() const;
  std::size_t order() const;
  const std::string& name() const;
  std::span<const Permutation> generators() const;
  std::span<const Permutation> elements() const;
  const Permutation& element(ElementIndex i) const;

  /// The identity is always the lexicographically least image tuple.
  static constexpr ElementIndex identity() { return 0; }
  ElementIndex mul(ElementIndex a, ElementIndex b) const;
  ElementIndex inv(ElementIndex a) const;
  /// g h g^-1
  ElementIndex conj(ElementIndex g, ElementIndex h) const;

  std::optional<ElementIndex> find(const Permutation& p) const;
  /// Throws ElementNotInGroup.
  ElementIndex index_of(const Permutation& p) const;

  PermGroup renamed(std::string name) const;

  /// Same degree and same element set.
  friend bool operator==(const PermGroup& a, const PermGroup& b);

private:
  struct Data;
  explicit PermGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;

  friend PermGroup make_group(std::vector<Permutation> sorted_elements,
                              std::vector<Permutation> generators, std::size_t degree,
                              std::string name);
};

/// Closure of `generators` under composition. Elements are sorted by image tuple.
/// Throws InvalidPermutation on degree mismatch, OrderCapExceeded past limits.max_order.
PermGroup enumerate_elements(std::span<const Permutation> generators, std::size_t degree,
                             const Limits& limits = {}, std::string name = {});

/// Members of ⟨generators⟩ inside `group`.
ElementMask closure(const PermGroup& group, std::span<const ElementIndex> generators);

/// A subgroup of a PermGroup, stored as a membership mask over the parent's elements.
class Subgroup {
public:
  /// Throws NotASubgroup unless `members` is closed under products and contains e.
  Subgroup(PermGroup parent, ElementMask members);

  static Subgroup generated_by(PermGroup parent, std::span<const ElementIndex> generators);
  static Subgroup trivial(PermGroup parent);
  static Subgroup whole(PermGroup parent);

  const PermGroup& parent() const { return parent_; }
  const ElementMask& mask() const { return mask_; }
  std::span<const ElementIndex> members() const { return members_; }
  /// A small generating set, greedily picked in canonical order.
  std::span<const ElementIndex> generators() const { return generators_; }
  std::size_t order() const { return members_.size(); }
  std::size_t index() const { return parent_.order() / members_.size(); }
  bool contains(ElementIndex g) const { return mask_.test(g); }
  bool is_subgroup_of(const Subgroup& other) const;

  /// The subgroup as a group in its own right. Element j is parent element members()[j].
  PermGroup as_group() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b);

private:
  PermGroup parent_;
  ElementMask mask_;
  std::vector<ElementIndex> members_;
  std::vector<ElementIndex> generators_;
};

/// Orders subgroups by (order, sorted member list).
bool canonical_less(const Subgroup& a, const Subgroup& b);

/// g H g^-1. Throws ElementNotInGroup if g is not in H's parent.
Subgroup conjugate_subgroup(const Subgroup& h, const Permutation& g);
Subgroup conjugate_subgroup(const Subgroup& h, ElementIndex g);

Subgroup intersect(const Subgroup& a, const Subgroup& b);
Subgroup normalizer(const Subgroup& h);

/// Left cosets gH as sorted element blocks, ordered by least member.
/// Throws NotASubgroup if H is not a subgroup of G.
std::vector<std::vector<ElementIndex>> left_cosets(const PermGroup& g, const Subgroup& h);
/// Right cosets Hg, same conventions.
std::vector<std::vector<ElementIndex>> right_cosets(const PermGroup& g, const Subgroup& h);
/// Least element of each double coset H g K, ascending.
std::vector<ElementIndex> double_coset_reps(const Subgroup& h, const Subgroup& k);
/// Least element of each double coset H x K with x ranging over `ambient` ⊇ H, K.
std::vector<ElementIndex> double_coset_reps(const Subgroup& h, const Subgroup& k,
                                            const Subgroup& ambient);
/// Least element of each left coset xH with x in K, for H ≤ K.
std::vector<ElementIndex> left_transversal(const Subgroup& h, const Subgroup& k);

/// Carries a subgroup of `outer.as_group()` back into outer's parent.
Subgroup lift(const Subgroup& inner, const Subgroup& outer);
/// Views a subgroup of G contained in `outer` as a subgroup of `outer.as_group()`.
Subgroup descend(const Subgroup& sub, const Subgroup& outer);

/// All subgroups of a group, partitioned into conjugacy classes.
class SubgroupLattice {
public:
  const PermGroup& group() const { return group_; }
  std::span<const Subgroup> subgroups() const { return subgroups_; }
  const Subgroup& subgroup(SubgroupId id) const { return subgroups_[id]; }

  std::size_t class_count() const { return classes_.size(); }
  std::span<const SubgroupId> class_members(ClassIndex c) const { return classes_[c]; }
  SubgroupId class_rep_id(ClassIndex c) const { return classes_[c].front(); }
  const Subgroup& class_rep(ClassIndex c) const { return subgroups_[class_rep_id(c)]; }
  ClassIndex class_of(SubgroupId id) const { return class_of_[id]; }
  ClassIndex class_of(const Subgroup& h) const { return class_of_[id_of(h)]; }
  std::size_t class_order(ClassIndex c) const { return class_rep(c).order(); }
  std::size_t index_of(ClassIndex c) const { return class_rep(c).index(); }

  /// True iff class i has a member contained in a member of class j.
  bool subconjugate(ClassIndex i, ClassIndex j) const { return subconj_[i * classes_.size() + j]; }

  std::optional<SubgroupId> find(const ElementMask& mask) const;
  /// Throws NotASubgroup if `h` does not belong to this lattice's group.
  SubgroupId id_of(const Subgroup& h) const;

  /// Order followed by a letter within equal orders: "1a", "2a", "2b", ...
  std::string label(ClassIndex c) const;

private:
  friend SubgroupLattice subgroup_lattice(const PermGroup& g, const Limits& limits);

  PermGroup group_;
  std::vector<Subgroup> subgroups_;
  std::vector<std::vector<SubgroupId>> classes_;
  std::vector<ClassIndex> class_of_;
  std::vector<bool> subconj_;
  std::vector<std::string> labels_;
};

/// Enumerates every subgroup by repeatedly extending known subgroups with one element,
/// starting from {e}. Throws OrderCapExceeded when |G| exceeds limits.max_order.
SubgroupLattice subgroup_lattice(const PermGroup& g, const Limits& limits = {});

} // namespace tamlab
