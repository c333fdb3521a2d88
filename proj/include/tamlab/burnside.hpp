#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tamlab/gset.hpp"
#include "tamlab/integer.hpp"
#include "tamlab/limits.hpp"
#include "tamlab/perm.hpp"

namespace tamlab {

/// m(i, j) = number of points of G/H_j fixed by H_i, over canonical class order.
/// Upper triangular with positive diagonal.
class TableOfMarks {
public:
  explicit TableOfMarks(SubgroupLattice lattice);

  const SubgroupLattice& lattice() const { return lattice_; }
  const PermGroup& group() const { return lattice_.group(); }
  std::size_t size() const { return n_; }
  std::int64_t mark(ClassIndex i, ClassIndex j) const { return marks_[i * n_ + j]; }

  /// "e" for the trivial class, the group's name (or "G") for the top class, otherwise
  /// the lattice label.
  std::string subgroup_name(ClassIndex c) const;
  /// Display name of the group, "G" if unnamed.
  std::string group_name() const;

private:
  SubgroupLattice lattice_;
  std::size_t n_;
  std::vector<std::int64_t> marks_;
};

using MarksTable = std::shared_ptr<const TableOfMarks>;

MarksTable table_of_marks(const PermGroup& g, const Limits& limits = {});
MarksTable table_of_marks(SubgroupLattice lattice);

/// An element of A(G): integer coefficients over the basis [G/H_j].
class BurnsideElement {
public:
  /// Throws LatticeMismatch if the coefficient count differs from the class count.
  BurnsideElement(MarksTable table, std::vector<Integer> coeffs);

  static BurnsideElement zero(const MarksTable& table);
  static BurnsideElement one(const MarksTable& table);
  /// k·[G/G]
  static BurnsideElement integer(const MarksTable& table, const Integer& k);
  static BurnsideElement basis(const MarksTable& table, ClassIndex j);

  const MarksTable& table() const { return table_; }
  std::span<const Integer> coeffs() const { return coeffs_; }
  const Integer& coeff(ClassIndex j) const { return coeffs_[j]; }
  bool is_nonnegative() const;

  friend BurnsideElement operator+(const BurnsideElement& a, const BurnsideElement& b);
  friend BurnsideElement operator-(const BurnsideElement& a, const BurnsideElement& b);
  friend BurnsideElement operator-(const BurnsideElement& a);
  /// Routed through the ghost map: from_marks(ghost(a) ⊙ ghost(b)).
  friend BurnsideElement operator*(const BurnsideElement& a, const BurnsideElement& b);
  /// Same table (by identity) and same coefficients.
  friend bool operator==(const BurnsideElement& a, const BurnsideElement& b);

private:
  MarksTable table_;
  std::vector<Integer> coeffs_;
};

/// values[i] = χ^{H_i}(x).
struct MarksVector {
  std::vector<Integer> values;
  friend bool operator==(const MarksVector&, const MarksVector&) = default;
};

MarksVector ghost(const BurnsideElement& x);
/// Exact back-substitution. Throws NotIntegral if v is not in the image of ghost.
BurnsideElement from_marks(const MarksTable& table, const MarksVector& v);

/// Product of two basis elements computed by decomposing G/H_i × G/H_j into orbits.
BurnsideElement mul_oracle(const MarksTable& table, ClassIndex i, ClassIndex j);

/// Class of a G-set in A(G), by orbit stabilizers.
BurnsideElement decompose(const GSet& x, const MarksTable& table);
BurnsideElement decompose(const FunctionCensus& census, const MarksTable& table);
/// Disjoint union of coset G-sets. Throws std::invalid_argument on negative coefficients.
GSet realize(const BurnsideElement& x);

/// nm_e^G(k) as the class of the G-set of all functions G → {1..k}.
struct NormResult {
  BurnsideElement value;
  /// True when the G-set was enumerated (and checked against the marks formula).
  bool enumerated;
};
NormResult norm_int_detailed(const MarksTable& table, std::uint64_t k, const Limits& limits = {});
BurnsideElement norm_int(const MarksTable& table, std::uint64_t k, const Limits& limits = {});
/// from_marks of (k^[G:H_i])_i.
BurnsideElement norm_from_marks(const MarksTable& table, std::uint64_t k);

struct LemmaCell {
  std::uint64_t k;
  ClassIndex class_index;
  Integer observed;
  Integer expected;
};

struct LemmaReport {
  std::uint64_t k_max = 0;
  std::size_t cells_checked = 0;
  std::size_t cells_enumerated = 0;
  /// k values where the enumerated norm differed from the marks-formula norm.
  std::vector<std::uint64_t> path_disagreements;
  std::vector<LemmaCell> violations;
  bool ok() const { return violations.empty() && path_disagreements.empty(); }
};

/// Checks χ^{H_i}(nm(k)) = k^[G:H_i] for 0 ≤ k ≤ k_max over every class, enumerating
/// wherever k^|G| fits the point cap.
LemmaReport lemma_check(const MarksTable& table, std::uint64_t k_max, const Limits& limits = {});

/// All marks are ±1. Cross-checked against x·x = 1; disagreement is a logic_error.
bool is_unit(const BurnsideElement& x);

/// The prime ker(A(G) → ℤ → ℤ/q) through χ^{H_i}. q is 0 or a rational prime.
struct PrimeDescriptor {
  ClassIndex class_index;
  Integer q;

  /// Throws std::invalid_argument unless q is 0 or prime.
  PrimeDescriptor(ClassIndex class_index, Integer q);
  friend bool operator==(const PrimeDescriptor&, const PrimeDescriptor&) = default;
};

bool prime_membership(const BurnsideElement& x, const PrimeDescriptor& p);

/// Primes of A(G) containing x. A zero mark at class i puts x in (i, q) for every q,
/// which is recorded in zero_mark_classes instead of listing descriptors.
struct PrimeSupport {
  std::vector<PrimeDescriptor> primes;
  std::vector<ClassIndex> zero_mark_classes;
};
PrimeSupport relevant_primes(const BurnsideElement& x);

struct LocalizationVerdict {
  bool unit;
  /// A prime containing x but not u, when x is not a unit.
  std::optional<PrimeDescriptor> witness;
};
/// x is a unit of A(G)[1/u] iff every prime containing x also contains u.
LocalizationVerdict is_unit_in_localization(const BurnsideElement& x, const BurnsideElement& u);

struct TheoremCase {
  std::uint64_t k;
  bool pass;
  bool enumerated;
  std::optional<PrimeDescriptor> witness;
};

struct TheoremReport {
  std::uint64_t k_max = 0;
  std::vector<TheoremCase> results;
  /// k = 0 is reported apart: 0 becomes a unit only in the zero ring.
  bool zero_case_unit = false;
  std::size_t passed() const;
  bool ok() const { return passed() == results.size(); }
};

/// For 1 ≤ k ≤ k_max, checks that k·1 is a unit of A(G)[1/nm_e^G(k)].
TheoremReport verify_main_theorem(const MarksTable& table, std::uint64_t k_max,
                                  const Limits& limits = {});

bool is_prime(const Integer& n);
/// Distinct prime factors by trial division, ascending. |n| is used; 0 and ±1 have none.
std::vector<Integer> prime_factors(const Integer& n);

/// "1·[C2/e] + 2·[C2/C2]", or "0".
std::string format(const BurnsideElement& x);
/// "(4, 2)"
std::string format(const MarksVector& v);

} // namespace tamlab
