#include "tamlab/burnside.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tamlab/errors.hpp"

namespace tamlab {

// ---------------------------------------------------------------------------
// TableOfMarks

TableOfMarks::TableOfMarks(SubgroupLattice lattice)
    : lattice_(std::move(lattice)), n_(lattice_.class_count()), marks_(n_ * n_, 0) {
  const auto& G = lattice_.group();
  // gH_j is fixed by H_i iff g^-1 H_i g ⊆ H_j; each coset is hit by |H_j| elements g.
  for (ClassIndex i = 0; i < n_; ++i) {
    const auto& hi = lattice_.class_rep(i);
    for (ClassIndex j = 0; j < n_; ++j) {
      const auto& hj = lattice_.class_rep(j);
      if (hi.order() > hj.order() || !lattice_.subconjugate(i, j))
        continue;
      std::size_t hits = 0;
      for (ElementIndex g = 0; g < G.order(); ++g) {
        const ElementIndex g_inv = G.inv(g);
        bool inside = true;
        for (ElementIndex h : hi.generators())
          if (!hj.contains(G.conj(g_inv, h))) {
            inside = false;
            break;
          }
        if (inside)
          ++hits;
      }
      marks_[i * n_ + j] = static_cast<std::int64_t>(hits / hj.order());
    }
  }
  for (ClassIndex i = 0; i < n_; ++i) {
    if (marks_[i * n_ + i] <= 0)
      throw std::logic_error("table of marks has a non-positive diagonal entry");
    for (ClassIndex j = 0; j < i; ++j)
      if (marks_[i * n_ + j] != 0)
        throw std::logic_error("table of marks is not upper triangular");
  }
}

std::string TableOfMarks::group_name() const {
  return group().name().empty() ? std::string("G") : group().name();
}

std::string TableOfMarks::subgroup_name(ClassIndex c) const {
  if (c == 0)
    return "e";
  if (c + 1 == n_)
    return group_name();
  return lattice_.label(c);
}

MarksTable table_of_marks(const PermGroup& g, const Limits& limits) {
  return table_of_marks(subgroup_lattice(g, limits));
}

MarksTable table_of_marks(SubgroupLattice lattice) {
  return std::make_shared<const TableOfMarks>(std::move(lattice));
}

// ---------------------------------------------------------------------------
// BurnsideElement

namespace {

void require_same_table(const BurnsideElement& a, const BurnsideElement& b) {
  if (a.table() != b.table())
    throw LatticeMismatch("Burnside elements over different tables of marks");
}

} // namespace

BurnsideElement::BurnsideElement(MarksTable table, std::vector<Integer> coeffs)
    : table_(std::move(table)), coeffs_(std::move(coeffs)) {
  if (!table_)
    throw std::invalid_argument("null table of marks");
  if (coeffs_.size() != table_->size())
    throw LatticeMismatch("expected " + std::to_string(table_->size()) + " coefficients, got " +
                          std::to_string(coeffs_.size()));
}

BurnsideElement BurnsideElement::zero(const MarksTable& table) {
  return BurnsideElement(table, std::vector<Integer>(table->size()));
}

BurnsideElement BurnsideElement::one(const MarksTable& table) { return integer(table, 1); }

BurnsideElement BurnsideElement::integer(const MarksTable& table, const Integer& k) {
  std::vector<Integer> c(table->size());
  c.back() = k;
  return BurnsideElement(table, std::move(c));
}

BurnsideElement BurnsideElement::basis(const MarksTable& table, ClassIndex j) {
  std::vector<Integer> c(table->size());
  c.at(j) = 1;
  return BurnsideElement(table, std::move(c));
}

bool BurnsideElement::is_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& v) { return v >= 0; });
}

BurnsideElement operator+(const BurnsideElement& a, const BurnsideElement& b) {
  require_same_table(a, b);
  std::vector<Integer> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = a.coeffs_[i] + b.coeffs_[i];
  return BurnsideElement(a.table_, std::move(c));
}

BurnsideElement operator-(const BurnsideElement& a) {
  std::vector<Integer> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = -a.coeffs_[i];
  return BurnsideElement(a.table_, std::move(c));
}

BurnsideElement operator-(const BurnsideElement& a, const BurnsideElement& b) { return a + (-b); }

BurnsideElement operator*(const BurnsideElement& a, const BurnsideElement& b) {
  require_same_table(a, b);
  MarksVector va = ghost(a);
  MarksVector vb = ghost(b);
  for (std::size_t i = 0; i < va.values.size(); ++i)
    va.values[i] *= vb.values[i];
  try {
    return from_marks(a.table_, va);
  } catch (const NotIntegral&) {
    throw std::logic_error("ghost image is not closed under products");
  }
}

bool operator==(const BurnsideElement& a, const BurnsideElement& b) {
  return a.table_ == b.table_ && a.coeffs_ == b.coeffs_;
}

MarksVector ghost(const BurnsideElement& x) {
  const auto& t = *x.table();
  MarksVector v;
  v.values.resize(t.size());
  for (ClassIndex i = 0; i < t.size(); ++i)
    for (ClassIndex j = i; j < t.size(); ++j)
      if (t.mark(i, j) != 0)
        v.values[i] += t.mark(i, j) * x.coeff(j);
  return v;
}

BurnsideElement from_marks(const MarksTable& table, const MarksVector& v) {
  const auto& t = *table;
  const std::size_t n = t.size();
  if (v.values.size() != n)
    throw LatticeMismatch("marks vector has the wrong length");
  std::vector<Integer> c(n);
  for (std::size_t step = 0; step < n; ++step) {
    const ClassIndex i = n - 1 - step;
    Integer rest = v.values[i];
    for (ClassIndex j = i + 1; j < n; ++j)
      if (t.mark(i, j) != 0)
        rest -= t.mark(i, j) * c[j];
    const Integer d = t.mark(i, i);
    Integer q, r;
    boost::multiprecision::divide_qr(rest, d, q, r);
    if (r != 0)
      throw NotIntegral("marks vector " + format(v) + " is not in the image of the ghost map");
    c[i] = std::move(q);
  }
  return BurnsideElement(table, std::move(c));
}

// ---------------------------------------------------------------------------
// G-set bridges

BurnsideElement decompose(const GSet& x, const MarksTable& table) {
  const auto& lat = table->lattice();
  if (!(x.group() == lat.group()))
    throw GroupMismatch("G-set acts through a different group than the table of marks");
  auto counts = orbit_type(x, lat);
  std::vector<Integer> c(counts.begin(), counts.end());
  return BurnsideElement(table, std::move(c));
}

BurnsideElement decompose(const FunctionCensus& census, const MarksTable& table) {
  const auto& lat = table->lattice();
  std::vector<Integer> c(table->size());
  for (const auto& [mask, count] : census.stabilizer_counts) {
    auto id = lat.find(mask);
    if (!id)
      throw std::logic_error("stabilizer missing from the subgroup lattice");
    c[lat.class_of(*id)] += count;
  }
  return BurnsideElement(table, std::move(c));
}

GSet realize(const BurnsideElement& x) {
  if (!x.is_nonnegative())
    throw std::invalid_argument("only elements with nonnegative coefficients are G-sets");
  const auto& t = *x.table();
  GSet out = empty_gset(t.group());
  for (ClassIndex j = 0; j < t.size(); ++j) {
    if (x.coeff(j) == 0)
      continue;
    GSet orbit = coset_gset(t.group(), t.lattice().class_rep(j));
    for (Integer m = 0; m < x.coeff(j); ++m)
      out = disjoint_union(out, orbit);
  }
  return out;
}

BurnsideElement mul_oracle(const MarksTable& table, ClassIndex i, ClassIndex j) {
  const auto& t = *table;
  GSet a = coset_gset(t.group(), t.lattice().class_rep(i));
  GSet b = coset_gset(t.group(), t.lattice().class_rep(j));
  return decompose(product(a, b), table);
}

// ---------------------------------------------------------------------------
// Norms

BurnsideElement norm_from_marks(const MarksTable& table, std::uint64_t k) {
  const auto& t = *table;
  MarksVector v;
  for (ClassIndex i = 0; i < t.size(); ++i)
    v.values.push_back(ipow(Integer(k), t.lattice().index_of(i)));
  return from_marks(table, v);
}

NormResult norm_int_detailed(const MarksTable& table, std::uint64_t k, const Limits& limits) {
  const auto& G = table->group();
  BurnsideElement by_marks = norm_from_marks(table, k);
  if (!by_marks.is_nonnegative())
    throw std::logic_error("norm has a negative coefficient");
  if (!bounded_power(k, G.order(), limits.max_points))
    return {std::move(by_marks), false};
  BurnsideElement counted = decompose(function_census(G, k, limits), table);
  if (!(counted == by_marks))
    throw std::logic_error("enumerated norm " + format(counted) +
                           " disagrees with the marks formula " + format(by_marks));
  return {std::move(counted), true};
}

BurnsideElement norm_int(const MarksTable& table, std::uint64_t k, const Limits& limits) {
  return norm_int_detailed(table, k, limits).value;
}

LemmaReport lemma_check(const MarksTable& table, std::uint64_t k_max, const Limits& limits) {
  const auto& t = *table;
  LemmaReport report;
  report.k_max = k_max;
  for (std::uint64_t k = 0; k <= k_max; ++k) {
    const bool enumerable = bounded_power(k, t.group().order(), limits.max_points).has_value();
    BurnsideElement by_marks = norm_from_marks(table, k);
    BurnsideElement norm = by_marks;
    if (enumerable) {
      norm = decompose(function_census(t.group(), k, limits), table);
      if (!(norm == by_marks))
        report.path_disagreements.push_back(k);
    } else if (!by_marks.is_nonnegative()) {
      report.path_disagreements.push_back(k);
    }
    MarksVector marks = ghost(norm);
    for (ClassIndex i = 0; i < t.size(); ++i) {
      Integer expected = ipow(Integer(k), t.lattice().index_of(i));
      ++report.cells_checked;
      if (enumerable)
        ++report.cells_enumerated;
      if (marks.values[i] != expected)
        report.violations.push_back({k, i, marks.values[i], expected});
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Units and primes

bool is_prime(const Integer& n) {
  if (n < 2)
    return false;
  if (n < 4)
    return true;
  if (n % 2 == 0)
    return false;
  for (Integer d = 3; d * d <= n; d += 2)
    if (n % d == 0)
      return false;
  return true;
}

std::vector<Integer> prime_factors(const Integer& value) {
  Integer n = abs(value);
  std::vector<Integer> out;
  if (n < 2)
    return out;
  for (Integer d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0)
      continue;
    out.push_back(d);
    while (n % d == 0)
      n /= d;
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

bool is_unit(const BurnsideElement& x) {
  const MarksVector v = ghost(x);
  const bool by_marks = std::all_of(v.values.begin(), v.values.end(),
                                    [](const Integer& m) { return m == 1 || m == -1; });
  const bool squares_to_one = x * x == BurnsideElement::one(x.table());
  if (by_marks != squares_to_one)
    throw std::logic_error("unit criteria disagree for " + format(x));
  return by_marks;
}

PrimeDescriptor::PrimeDescriptor(ClassIndex class_index, Integer q)
    : class_index(class_index), q(std::move(q)) {
  if (this->q != 0 && !is_prime(this->q))
    throw std::invalid_argument("prime descriptor needs q = 0 or a prime, got " + this->q.str());
}

bool prime_membership(const BurnsideElement& x, const PrimeDescriptor& p) {
  if (p.class_index >= x.table()->size())
    throw LatticeMismatch("prime descriptor class out of range");
  const Integer mark = ghost(x).values[p.class_index];
  if (p.q == 0)
    return mark == 0;
  return mark % p.q == 0;
}

PrimeSupport relevant_primes(const BurnsideElement& x) {
  const MarksVector v = ghost(x);
  PrimeSupport out;
  for (ClassIndex i = 0; i < v.values.size(); ++i) {
    if (v.values[i] == 0) {
      out.zero_mark_classes.push_back(i);
      continue;
    }
    for (auto& p : prime_factors(v.values[i]))
      out.primes.emplace_back(i, std::move(p));
  }
  return out;
}

LocalizationVerdict is_unit_in_localization(const BurnsideElement& x, const BurnsideElement& u) {
  require_same_table(x, u);
  const MarksVector vx = ghost(x);
  const MarksVector vu = ghost(u);
  for (ClassIndex i = 0; i < vx.values.size(); ++i) {
    const Integer& a = vx.values[i];
    const Integer b = abs(vu.values[i]);
    if (a == 0) {
      if (b != 0)
        return {false, PrimeDescriptor(i, 0)};
      continue;
    }
    if (b == 0)
      continue;
    // Strip from |a| every prime it shares with b; what remains has only primes not dividing b.
    Integer rest = abs(a);
    while (rest > 1) {
      Integer g = gcd(rest, b);
      if (g == 1)
        break;
      while (rest % g == 0)
        rest /= g;
    }
    if (rest > 1)
      return {false, PrimeDescriptor(i, prime_factors(rest).front())};
  }
  return {true, std::nullopt};
}

std::size_t TheoremReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const TheoremCase& c) { return c.pass; }));
}

TheoremReport verify_main_theorem(const MarksTable& table, std::uint64_t k_max,
                                  const Limits& limits) {
  TheoremReport report;
  report.k_max = k_max;
  {
    auto zero = BurnsideElement::zero(table);
    report.zero_case_unit = is_unit_in_localization(zero, norm_from_marks(table, 0)).unit;
  }
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    NormResult norm = norm_int_detailed(table, k, limits);
    auto verdict =
        is_unit_in_localization(BurnsideElement::integer(table, Integer(k)), norm.value);
    report.results.push_back({k, verdict.unit, norm.enumerated, verdict.witness});
  }
  return report;
}

// ---------------------------------------------------------------------------
// Formatting

std::string format(const BurnsideElement& x) {
  const auto& t = *x.table();
  std::ostringstream out;
  bool first = true;
  for (ClassIndex j = 0; j < t.size(); ++j) {
    const Integer& c = x.coeff(j);
    if (c == 0)
      continue;
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    out << abs(c) << "·[" << t.group_name() << '/' << t.subgroup_name(j) << ']';
    first = false;
  }
  return first ? std::string("0") : out.str();
}

std::string format(const MarksVector& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.values.size(); ++i)
    out << (i ? ", " : "") << v.values[i];
  out << ')';
  return out.str();
}

} // namespace tamlab
