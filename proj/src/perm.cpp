#include "tamlab/perm.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "tamlab/errors.hpp"

namespace tamlab {

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p])
      throw InvalidPermutation("image list is not a bijection");
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = static_cast<Point>(i);
  Permutation result;
  result.images_ = std::move(inv);
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

std::string Permutation::to_cycles() const {
  std::ostringstream out;
  std::vector<bool> done(images_.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start)
      continue;
    any = true;
    out << '(';
    std::size_t p = start;
    bool first = true;
    while (!done[p]) {
      done[p] = true;
      if (!first)
        out << ' ';
      out << p + 1;
      first = false;
      p = images_[p];
    }
    out << ')';
  }
  if (!any)
    return "()";
  return out.str();
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw InvalidPermutation("degree mismatch in composition");
  std::vector<Point> images(a.degree());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = a.images_[b.images_[i]];
  Permutation result;
  result.images_ = std::move(images);
  return result;
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  Permutation result = Permutation::identity(degree);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip_space();
  if (pos == text.size())
    throw ParseError("empty cycle notation");
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw ParseError("expected '(' in cycle notation: " + std::string(text));
    ++pos;
    std::vector<Point> cycle;
    while (true) {
      skip_space();
      if (pos >= text.size())
        throw ParseError("unterminated cycle: " + std::string(text));
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("unexpected character in cycle: " + std::string(text));
      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > degree)
          throw ParseError("point out of range in: " + std::string(text));
        ++pos;
      }
      if (value == 0)
        throw ParseError("points are 1-based: " + std::string(text));
      cycle.push_back(static_cast<Point>(value - 1));
    }
    std::vector<bool> seen(degree, false);
    for (Point p : cycle) {
      if (seen[p])
        throw ParseError("repeated point in cycle: " + std::string(text));
      seen[p] = true;
    }
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    result = result * Permutation(std::move(images));
    skip_space();
  }
  return result;
}

// ---------------------------------------------------------------------------
// ElementMask

std::size_t ElementMask::count() const {
  std::size_t n = 0;
  for (auto w : words_)
    n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ElementMask::is_subset_of(const ElementMask& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0)
      return false;
  return true;
}

std::vector<ElementIndex> ElementMask::members() const {
  std::vector<ElementIndex> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      auto bit = static_cast<std::size_t>(std::countr_zero(bits));
      out.push_back(static_cast<ElementIndex>(w * 64 + bit));
      bits &= bits - 1;
    }
  }
  return out;
}

std::size_t ElementMask::hash() const {
  std::size_t h = size_;
  for (auto w : words_)
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

ElementMask operator&(const ElementMask& a, const ElementMask& b) {
  ElementMask out(a.size_);
  for (std::size_t i = 0; i < a.words_.size(); ++i)
    out.words_[i] = a.words_[i] & b.words_[i];
  return out;
}

// ---------------------------------------------------------------------------
// PermGroup

struct PermGroup::Data {
  std::size_t degree = 0;
  std::string name;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;
  std::vector<ElementIndex> mul;
  std::vector<ElementIndex> inv;
};

PermGroup make_group(std::vector<Permutation> sorted_elements, std::vector<Permutation> generators,
                     std::size_t degree, std::string name) {
  auto data = std::make_shared<PermGroup::Data>();
  data->degree = degree;
  data->name = std::move(name);
  data->generators = std::move(generators);
  data->elements = std::move(sorted_elements);
  const std::size_t n = data->elements.size();
  const auto& els = data->elements;
  auto lookup = [&](const Permutation& p) {
    auto it = std::lower_bound(els.begin(), els.end(), p);
    if (it == els.end() || *it != p)
      throw std::logic_error("element set is not closed");
    return static_cast<ElementIndex>(it - els.begin());
  };
  data->mul.resize(n * n);
  data->inv.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      ElementIndex c = lookup(els[a] * els[b]);
      data->mul[a * n + b] = c;
      if (c == 0)
        data->inv[a] = static_cast<ElementIndex>(b);
    }
  }
  return PermGroup(std::move(data));
}

PermGroup::PermGroup() : PermGroup(make_group({Permutation::identity(1)}, {}, 1, "e").data_) {}

std::size_t PermGroup::degree() const { return data_->degree; }
std::size_t PermGroup::order() const { return data_->elements.size(); }
const std::string& PermGroup::name() const { return data_->name; }
std::span<const Permutation> PermGroup::generators() const { return data_->generators; }
std::span<const Permutation> PermGroup::elements() const { return data_->elements; }
const Permutation& PermGroup::element(ElementIndex i) const { return data_->elements[i]; }

ElementIndex PermGroup::mul(ElementIndex a, ElementIndex b) const {
  return data_->mul[static_cast<std::size_t>(a) * data_->elements.size() + b];
}
ElementIndex PermGroup::inv(ElementIndex a) const { return data_->inv[a]; }
ElementIndex PermGroup::conj(ElementIndex g, ElementIndex h) const {
  return mul(mul(g, h), inv(g));
}

std::optional<ElementIndex> PermGroup::find(const Permutation& p) const {
  const auto& els = data_->elements;
  auto it = std::lower_bound(els.begin(), els.end(), p);
  if (it == els.end() || *it != p)
    return std::nullopt;
  return static_cast<ElementIndex>(it - els.begin());
}

ElementIndex PermGroup::index_of(const Permutation& p) const {
  auto idx = find(p);
  if (!idx)
    throw ElementNotInGroup("permutation " + p.to_cycles() + " is not in the group");
  return *idx;
}

PermGroup PermGroup::renamed(std::string name) const {
  auto data = std::make_shared<Data>(*data_);
  data->name = std::move(name);
  return PermGroup(std::move(data));
}

bool operator==(const PermGroup& a, const PermGroup& b) {
  if (a.data_ == b.data_)
    return true;
  return a.data_->degree == b.data_->degree && a.data_->elements == b.data_->elements;
}

PermGroup enumerate_elements(std::span<const Permutation> generators, std::size_t degree,
                             const Limits& limits, std::string name) {
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw InvalidPermutation("generator " + g.to_cycles() + " has degree " +
                               std::to_string(g.degree()) + ", expected " +
                               std::to_string(degree));
  std::set<Permutation> seen;
  std::vector<Permutation> queue{Permutation::identity(degree)};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : generators) {
      Permutation next = queue[head] * g;
      if (seen.insert(next).second) {
        if (seen.size() > limits.max_order)
          throw OrderCapExceeded("group order exceeds cap of " +
                                 std::to_string(limits.max_order));
        queue.push_back(std::move(next));
      }
    }
  }
  std::vector<Permutation> sorted(seen.begin(), seen.end());
  return make_group(std::move(sorted), {generators.begin(), generators.end()}, degree,
                    std::move(name));
}

ElementMask closure(const PermGroup& group, std::span<const ElementIndex> generators) {
  ElementMask mask(group.order());
  std::vector<ElementIndex> queue{PermGroup::identity()};
  mask.set(PermGroup::identity());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (ElementIndex g : generators) {
      ElementIndex next = group.mul(queue[head], g);
      if (!mask.test(next)) {
        mask.set(next);
        queue.push_back(next);
      }
    }
  }
  return mask;
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup::Subgroup(PermGroup parent, ElementMask members)
    : parent_(std::move(parent)), mask_(std::move(members)) {
  if (mask_.size() != parent_.order())
    throw NotASubgroup("membership mask does not match the parent group");
  members_ = mask_.members();
  if (members_.empty() || members_.front() != PermGroup::identity())
    throw NotASubgroup("subset does not contain the identity");
  for (ElementIndex a : members_)
    for (ElementIndex b : members_)
      if (!mask_.test(parent_.mul(a, b)))
        throw NotASubgroup("subset is not closed under composition");
  if (parent_.order() % members_.size() != 0)
    throw std::logic_error("Lagrange violated");

  ElementMask generated(parent_.order());
  generated.set(PermGroup::identity());
  for (ElementIndex g : members_) {
    if (generated.test(g))
      continue;
    generators_.push_back(g);
    generated = closure(parent_, generators_);
  }
}

Subgroup Subgroup::generated_by(PermGroup parent, std::span<const ElementIndex> generators) {
  auto mask = closure(parent, generators);
  return Subgroup(std::move(parent), std::move(mask));
}

Subgroup Subgroup::trivial(PermGroup parent) {
  ElementMask mask(parent.order());
  mask.set(PermGroup::identity());
  return Subgroup(std::move(parent), std::move(mask));
}

Subgroup Subgroup::whole(PermGroup parent) {
  ElementMask mask(parent.order());
  for (std::size_t i = 0; i < parent.order(); ++i)
    mask.set(i);
  return Subgroup(std::move(parent), std::move(mask));
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  return parent_ == other.parent_ && mask_.is_subset_of(other.mask_);
}

PermGroup Subgroup::as_group() const {
  std::vector<Permutation> elements;
  elements.reserve(members_.size());
  for (ElementIndex m : members_)
    elements.push_back(parent_.element(m));
  std::vector<Permutation> gens;
  for (ElementIndex g : generators_)
    gens.push_back(parent_.element(g));
  return make_group(std::move(elements), std::move(gens), parent_.degree(), {});
}

bool operator==(const Subgroup& a, const Subgroup& b) {
  return a.parent_ == b.parent_ && a.mask_ == b.mask_;
}

bool canonical_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order())
    return a.order() < b.order();
  return std::lexicographical_compare(a.members().begin(), a.members().end(),
                                      b.members().begin(), b.members().end());
}

Subgroup conjugate_subgroup(const Subgroup& h, ElementIndex g) {
  const auto& G = h.parent();
  if (g >= G.order())
    throw ElementNotInGroup("element index out of range");
  ElementMask mask(G.order());
  for (ElementIndex m : h.members())
    mask.set(G.conj(g, m));
  return Subgroup(G, std::move(mask));
}

Subgroup conjugate_subgroup(const Subgroup& h, const Permutation& g) {
  return conjugate_subgroup(h, h.parent().index_of(g));
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  if (!(a.parent() == b.parent()))
    throw GroupMismatch("intersection of subgroups of different groups");
  return Subgroup(a.parent(), a.mask() & b.mask());
}

Subgroup normalizer(const Subgroup& h) {
  const auto& G = h.parent();
  std::vector<ElementIndex> normalizing;
  for (ElementIndex g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (ElementIndex m : h.members())
      if (!h.contains(G.conj(g, m))) {
        ok = false;
        break;
      }
    if (ok)
      normalizing.push_back(g);
  }
  return Subgroup::generated_by(G, normalizing);
}

namespace {

void require_subgroup_of(const PermGroup& g, const Subgroup& h) {
  if (!(h.parent() == g))
    throw NotASubgroup("subgroup does not belong to the given group");
}

std::vector<std::vector<ElementIndex>> cosets(const Subgroup& h, bool left) {
  const auto& G = h.parent();
  std::vector<bool> done(G.order(), false);
  std::vector<std::vector<ElementIndex>> blocks;
  for (ElementIndex g = 0; g < G.order(); ++g) {
    if (done[g])
      continue;
    std::vector<ElementIndex> block;
    for (ElementIndex m : h.members())
      block.push_back(left ? G.mul(g, m) : G.mul(m, g));
    std::sort(block.begin(), block.end());
    for (ElementIndex x : block)
      done[x] = true;
    blocks.push_back(std::move(block));
  }
  return blocks;
}

} // namespace

std::vector<std::vector<ElementIndex>> left_cosets(const PermGroup& g, const Subgroup& h) {
  require_subgroup_of(g, h);
  return cosets(h, true);
}

std::vector<std::vector<ElementIndex>> right_cosets(const PermGroup& g, const Subgroup& h) {
  require_subgroup_of(g, h);
  return cosets(h, false);
}

std::vector<ElementIndex> double_coset_reps(const Subgroup& h, const Subgroup& k) {
  if (!(h.parent() == k.parent()))
    throw GroupMismatch("double cosets of subgroups of different groups");
  const auto& G = h.parent();
  std::vector<bool> done(G.order(), false);
  std::vector<ElementIndex> reps;
  for (ElementIndex g = 0; g < G.order(); ++g) {
    if (done[g])
      continue;
    reps.push_back(g);
    for (ElementIndex a : h.members())
      for (ElementIndex b : k.members())
        done[G.mul(G.mul(a, g), b)] = true;
  }
  return reps;
}

std::vector<ElementIndex> double_coset_reps(const Subgroup& h, const Subgroup& k,
                                            const Subgroup& ambient) {
  if (!h.is_subgroup_of(ambient) || !k.is_subgroup_of(ambient))
    throw NotASubgroup("double coset factors must lie in the ambient subgroup");
  const auto& G = h.parent();
  std::vector<bool> done(G.order(), false);
  std::vector<ElementIndex> reps;
  for (ElementIndex g : ambient.members()) {
    if (done[g])
      continue;
    reps.push_back(g);
    for (ElementIndex a : h.members())
      for (ElementIndex b : k.members())
        done[G.mul(G.mul(a, g), b)] = true;
  }
  return reps;
}

std::vector<ElementIndex> left_transversal(const Subgroup& h, const Subgroup& k) {
  if (!h.is_subgroup_of(k))
    throw NotASubgroup("transversal needs H ≤ K");
  const auto& G = h.parent();
  std::vector<bool> done(G.order(), false);
  std::vector<ElementIndex> reps;
  for (ElementIndex x : k.members()) {
    if (done[x])
      continue;
    reps.push_back(x);
    for (ElementIndex m : h.members())
      done[G.mul(x, m)] = true;
  }
  return reps;
}

Subgroup lift(const Subgroup& inner, const Subgroup& outer) {
  if (!(inner.parent() == outer.as_group()))
    throw NotASubgroup("subgroup is not a subgroup of the given level");
  ElementMask mask(outer.parent().order());
  auto embedding = outer.members();
  for (ElementIndex m : inner.members())
    mask.set(embedding[m]);
  return Subgroup(outer.parent(), std::move(mask));
}

Subgroup descend(const Subgroup& sub, const Subgroup& outer) {
  if (!sub.is_subgroup_of(outer))
    throw NotASubgroup("subgroup is not contained in the given level");
  auto embedding = outer.members();
  ElementMask mask(outer.order());
  for (std::size_t j = 0; j < embedding.size(); ++j)
    if (sub.contains(embedding[j]))
      mask.set(j);
  return Subgroup(outer.as_group(), std::move(mask));
}

// ---------------------------------------------------------------------------
// SubgroupLattice

std::optional<SubgroupId> SubgroupLattice::find(const ElementMask& mask) const {
  // Subgroups are sorted canonically, so a binary search on (order, members) works.
  ElementMask probe = mask;
  auto members = probe.members();
  auto it = std::lower_bound(subgroups_.begin(), subgroups_.end(), members,
                             [](const Subgroup& s, const std::vector<ElementIndex>& m) {
                               if (s.order() != m.size())
                                 return s.order() < m.size();
                               return std::lexicographical_compare(
                                   s.members().begin(), s.members().end(), m.begin(), m.end());
                             });
  if (it == subgroups_.end() || !(it->mask() == mask))
    return std::nullopt;
  return static_cast<SubgroupId>(it - subgroups_.begin());
}

SubgroupId SubgroupLattice::id_of(const Subgroup& h) const {
  if (!(h.parent() == group_))
    throw NotASubgroup("subgroup belongs to a different group");
  auto id = find(h.mask());
  if (!id)
    throw std::logic_error("subgroup missing from lattice");
  return *id;
}

std::string SubgroupLattice::label(ClassIndex c) const { return labels_[c]; }

SubgroupLattice subgroup_lattice(const PermGroup& g, const Limits& limits) {
  if (g.order() > limits.max_order)
    throw OrderCapExceeded("group order " + std::to_string(g.order()) + " exceeds cap of " +
                           std::to_string(limits.max_order));

  struct Found {
    ElementMask mask;
    std::vector<ElementIndex> gens;
  };
  std::vector<Found> found;
  std::unordered_map<ElementMask, std::size_t, ElementMaskHash> seen;

  ElementMask trivial(g.order());
  trivial.set(PermGroup::identity());
  found.push_back({trivial, {}});
  seen.emplace(trivial, 0);

  for (std::size_t head = 0; head < found.size(); ++head) {
    for (ElementIndex x = 1; x < g.order(); ++x) {
      if (found[head].mask.test(x))
        continue;
      auto gens = found[head].gens;
      gens.push_back(x);
      ElementMask ext = closure(g, gens);
      if (seen.emplace(ext, found.size()).second)
        found.push_back({std::move(ext), std::move(gens)});
    }
  }

  SubgroupLattice lat;
  lat.group_ = g;
  lat.subgroups_.reserve(found.size());
  for (auto& f : found)
    lat.subgroups_.emplace_back(g, std::move(f.mask));
  std::sort(lat.subgroups_.begin(), lat.subgroups_.end(), canonical_less);

  const std::size_t n = lat.subgroups_.size();
  constexpr ClassIndex unassigned = static_cast<ClassIndex>(-1);
  lat.class_of_.assign(n, unassigned);
  // Ids are already canonical, so the first unassigned id of each class is its least
  // member and classes come out in canonical order.
  for (SubgroupId s = 0; s < n; ++s) {
    if (lat.class_of_[s] != unassigned)
      continue;
    ClassIndex c = lat.classes_.size();
    std::set<SubgroupId> members;
    for (ElementIndex x = 0; x < g.order(); ++x)
      members.insert(lat.id_of(conjugate_subgroup(lat.subgroups_[s], x)));
    for (SubgroupId m : members)
      lat.class_of_[m] = c;
    lat.classes_.emplace_back(members.begin(), members.end());
  }

  const std::size_t c = lat.classes_.size();
  lat.subconj_.assign(c * c, false);
  for (ClassIndex i = 0; i < c; ++i) {
    const auto& rep = lat.class_rep(i);
    for (ClassIndex j = 0; j < c; ++j)
      for (SubgroupId m : lat.classes_[j])
        if (rep.mask().is_subset_of(lat.subgroups_[m].mask())) {
          lat.subconj_[i * c + j] = true;
          break;
        }
  }

  std::map<std::size_t, int> letters;
  for (ClassIndex i = 0; i < c; ++i) {
    std::size_t ord = lat.class_order(i);
    int letter = letters[ord]++;
    std::string suffix;
    // a..z, then aa, ab, ...
    do {
      suffix.insert(suffix.begin(), static_cast<char>('a' + letter % 26));
      letter = letter / 26 - 1;
    } while (letter >= 0);
    lat.labels_.push_back(std::to_string(ord) + suffix);
  }
  return lat;
}

} // namespace tamlab
