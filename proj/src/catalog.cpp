#include "tamlab/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <string>
#include <vector>

#include "tamlab/errors.hpp"

namespace tamlab {

namespace {

Permutation cycle_on(std::size_t degree, const std::vector<Point>& cycle) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (std::size_t i = 0; i < cycle.size(); ++i)
    images[cycle[i]] = cycle[(i + 1) % cycle.size()];
  return Permutation(std::move(images));
}

Permutation rotation(std::size_t n) {
  std::vector<Point> c(n);
  std::iota(c.begin(), c.end(), Point{0});
  return cycle_on(n, c);
}

// Factorial order check before enumerating so that S<n> for large n fails fast.
void check_order(std::size_t order, const Limits& limits) {
  if (order > limits.max_order)
    throw OrderCapExceeded("group order " + std::to_string(order) + " exceeds cap of " +
                           std::to_string(limits.max_order));
}

std::size_t factorial_capped(std::size_t n, std::size_t cap) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    f *= i;
    if (f > cap)
      return cap + 1;
  }
  return f;
}

std::size_t parse_size(std::string_view digits, std::string_view spec) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size())
    throw ParseError("malformed group spec: " + std::string(spec));
  return value;
}

} // namespace

PermGroup trivial_group() { return PermGroup().renamed("e"); }

PermGroup cyclic_group(std::size_t n, const Limits& limits) {
  if (n == 0)
    throw ParseError("cyclic group order must be positive");
  check_order(n, limits);
  std::vector<Permutation> gens;
  if (n > 1)
    gens.push_back(rotation(n));
  return enumerate_elements(gens, n, limits, "C" + std::to_string(n));
}

PermGroup dihedral_group(std::size_t n, const Limits& limits) {
  if (n == 0)
    throw ParseError("dihedral parameter must be positive");
  check_order(2 * n, limits);
  const std::string name = "D" + std::to_string(n);
  if (n == 1)
    return cyclic_group(2, limits).renamed(name);
  if (n == 2)
    return klein_four_group().renamed(name);
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i)
    images[i] = static_cast<Point>((n - i) % n);
  std::vector<Permutation> gens{rotation(n), Permutation(std::move(images))};
  return enumerate_elements(gens, n, limits, name);
}

PermGroup symmetric_group(std::size_t n, const Limits& limits) {
  if (n == 0)
    throw ParseError("symmetric group degree must be positive");
  check_order(factorial_capped(n, limits.max_order), limits);
  std::vector<Permutation> gens;
  if (n >= 2)
    gens.push_back(cycle_on(n, {0, 1}));
  if (n >= 3)
    gens.push_back(rotation(n));
  return enumerate_elements(gens, n, limits, "S" + std::to_string(n));
}

PermGroup alternating_group(std::size_t n, const Limits& limits) {
  if (n == 0)
    throw ParseError("alternating group degree must be positive");
  std::size_t order = n <= 2 ? 1 : factorial_capped(n, 2 * limits.max_order + 1) / 2;
  check_order(order, limits);
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i < n; ++i)
    gens.push_back(cycle_on(n, {0, 1, static_cast<Point>(i)}));
  return enumerate_elements(gens, n, limits, "A" + std::to_string(n));
}

PermGroup quaternion_group() {
  // Left-regular action on Q8 = {±1, ±i, ±j, ±k}, points 0..7 = 1, i, j, k, -1, -i, -j, -k.
  // Left multiplication by i and by j as permutations of the points.
  auto perm = [](std::initializer_list<Point> images) {
    return Permutation(std::vector<Point>(images));
  };
  // i*1=i, i*i=-1, i*j=k, i*k=-j, i*(-x) = -(i*x)
  Permutation left_i = perm({1, 4, 3, 6, 5, 0, 7, 2});
  // j*1=j, j*i=-k, j*j=-1, j*k=i
  Permutation left_j = perm({2, 7, 4, 1, 6, 3, 0, 5});
  std::vector<Permutation> gens{left_i, left_j};
  return enumerate_elements(gens, 8, Limits{}, "Q8");
}

PermGroup klein_four_group() {
  std::vector<Permutation> gens{parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)};
  return enumerate_elements(gens, 4, Limits{}, "V4");
}

PermGroup parse_group_spec(std::string_view spec, const Limits& limits) {
  if (spec == "Q8") {
    check_order(8, limits);
    return quaternion_group();
  }
  if (spec == "V4") {
    check_order(4, limits);
    return klein_four_group();
  }
  if (spec.rfind("perm:", 0) == 0) {
    std::string_view rest = spec.substr(5);
    auto colon = rest.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("perm spec needs perm:<degree>:<generators>: " + std::string(spec));
    std::size_t degree = parse_size(rest.substr(0, colon), spec);
    if (degree == 0)
      throw ParseError("perm degree must be positive: " + std::string(spec));
    std::string_view gens_text = rest.substr(colon + 1);
    std::vector<Permutation> gens;
    std::size_t start = 0;
    while (start <= gens_text.size()) {
      auto semi = gens_text.find(';', start);
      auto piece = gens_text.substr(start, semi == std::string_view::npos ? std::string_view::npos
                                                                          : semi - start);
      gens.push_back(parse_cycles(piece, degree));
      if (semi == std::string_view::npos)
        break;
      start = semi + 1;
    }
    return enumerate_elements(gens, degree, limits, std::string(spec));
  }
  if (spec.size() < 2)
    throw ParseError("unknown group spec: " + std::string(spec));
  std::size_t n = parse_size(spec.substr(1), spec);
  switch (spec.front()) {
  case 'C':
    return cyclic_group(n, limits);
  case 'D':
    return dihedral_group(n, limits);
  case 'S':
    return symmetric_group(n, limits);
  case 'A':
    return alternating_group(n, limits);
  default:
    throw ParseError("unknown group spec: " + std::string(spec));
  }
}

} // namespace tamlab
