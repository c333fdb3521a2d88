// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 on any failure.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "json.hpp"
#include "oracles.hpp"
#include "tamlab/burnside_functor.hpp"
#include "tamlab/catalog.hpp"
#include "tamlab/cli.hpp"
#include "tamlab/fixed_point.hpp"
#include "tamlab/tambara.hpp"

using namespace tamlab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass)
      detail = why;
    pass = false;
  }
};

const std::vector<std::string> kNine{"C2", "C3", "C4", "V4", "S3", "D4", "Q8", "A4", "S4"};

Integer ipow_u(std::uint64_t k, std::size_t e) {
  Integer r = 1;
  for (std::size_t i = 0; i < e; ++i)
    r *= k;
  return r;
}

Outcome marks_tables() {
  Outcome o;
  for (const auto& name : kNine) {
    cli::Options opt;
    opt.group = name;
    opt.json = true;
    cli::CommandResult r = cli::cmd_marks(opt);
    if (r.exit_code != 0) {
      o.fail(name + ": marks exited " + std::to_string(r.exit_code));
      continue;
    }
    auto got = nlohmann::json::parse(r.out)["matrix"].get<std::vector<std::vector<std::int64_t>>>();
    PermGroup g = parse_group_spec(name);
    auto expected = oracle::marks_by_fixed_points(subgroup_lattice(g));
    if (got != expected)
      o.fail(name + ": marks differ from fixed-point recount");
    if (name == "S3" &&
        got != std::vector<std::vector<std::int64_t>>{
                   {6, 3, 2, 1}, {0, 1, 0, 1}, {0, 0, 2, 1}, {0, 0, 0, 1}})
      o.fail("S3 matrix differs from the reference matrix");
  }
  return o;
}

Outcome lemma() {
  Outcome o;
  Limits limits;
  std::size_t enumerated = 0;
  for (const auto& name : kNine) {
    auto table = table_of_marks(parse_group_spec(name));
    const std::size_t n = table->group().order();
    LemmaReport r = lemma_check(table, 5, limits);
    std::size_t expect_enumerated = 0;
    for (std::uint64_t k = 0; k <= 5; ++k)
      if (bounded_power(k, n, 20'000'000))
        expect_enumerated += table->size();
    if (!r.violations.empty())
      o.fail(name + ": " + std::to_string(r.violations.size()) + " violations");
    if (!r.path_disagreements.empty())
      o.fail(name + ": enumerative and marks norms disagree");
    if (r.cells_enumerated != expect_enumerated)
      o.fail(name + ": " + std::to_string(r.cells_enumerated) + " cells enumerated, expected " +
             std::to_string(expect_enumerated));
    enumerated += r.cells_enumerated;
  }
  if (o.pass)
    o.detail = std::to_string(enumerated) + " cells by enumeration";
  return o;
}

Outcome ring_arithmetic() {
  Outcome o;
  std::size_t pairs = 0;
  for (const auto& name : kNine) {
    auto t = table_of_marks(parse_group_spec(name));
    for (ClassIndex i = 0; i < t->size(); ++i)
      for (ClassIndex j = i; j < t->size(); ++j) {
        ++pairs;
        if (!(BurnsideElement::basis(t, i) * BurnsideElement::basis(t, j) == mul_oracle(t, i, j)))
          o.fail(name + ": basis pair " + std::to_string(i) + "," + std::to_string(j));
      }
  }
  if (o.pass)
    o.detail = std::to_string(pairs) + " unordered basis pairs";
  return o;
}

Outcome unit_law() {
  Outcome o;
  std::size_t checked = 0;
  std::size_t units = 0;
  auto check = [&](const std::string& name, const BurnsideElement& x) {
    ++checked;
    const bool via_api = is_unit(x);
    const bool via_square = x * x == BurnsideElement::one(x.table());
    bool via_marks = true;
    for (const auto& m : oracle::marks_of(x))
      via_marks = via_marks && (m == 1 || m == -1);
    units += via_marks;
    if (via_api != via_square || via_api != via_marks)
      o.fail(name + ": disagreement at " + format(x));
  };
  std::mt19937_64 rng(20240601);
  for (const auto& name : kNine) {
    auto t = table_of_marks(parse_group_spec(name));
    const std::size_t c = t->size();
    if (c <= 3) {
      std::size_t total = 1;
      for (std::size_t i = 0; i < c; ++i)
        total *= 5;
      for (std::size_t code = 0; code < total; ++code) {
        std::vector<Integer> cs;
        std::size_t v = code;
        for (std::size_t i = 0; i < c; ++i) {
          cs.push_back(Integer(static_cast<long>(v % 5)) - 2);
          v /= 5;
        }
        check(name, BurnsideElement(t, cs));
      }
    } else {
      for (int s = 0; s < 10'000; ++s) {
        std::vector<Integer> cs;
        for (std::size_t i = 0; i < c; ++i)
          cs.push_back(Integer(static_cast<long>(rng() % 5)) - 2);
        check(name, BurnsideElement(t, cs));
      }
    }
    // Every integral sign vector, so the unit side of the law is exercised.
    for (std::size_t bits = 0; bits < (std::size_t{1} << c); ++bits) {
      MarksVector v;
      for (std::size_t i = 0; i < c; ++i)
        v.values.push_back(bits >> i & 1U ? -1 : 1);
      try {
        check(name, from_marks(t, v));
      } catch (const NotIntegral&) {
      }
    }
  }
  if (o.pass)
    o.detail = std::to_string(checked) + " elements, " + std::to_string(units) + " units";
  return o;
}

Outcome main_theorem() {
  Outcome o;
  for (const auto& name : kNine) {
    auto t = table_of_marks(parse_group_spec(name));
    TheoremReport r = verify_main_theorem(t, 20);
    if (r.results.size() != 20 || !r.ok())
      o.fail(name + ": " + std::to_string(r.passed()) + "/20");
    // Independent verdict: marks of nm(k) are k^[G:H] (criterion 2), and k·1 is a unit
    // of A(G)[1/u] iff every prime dividing k divides every mark of u.
    for (const auto& c : r.results) {
      bool unit = true;
      for (ClassIndex i = 0; i < t->size(); ++i)
        for (auto p : oracle::primes_dividing(static_cast<std::int64_t>(c.k)))
          unit = unit && ipow_u(c.k, t->lattice().index_of(i)) % p == 0;
      if (unit != c.pass)
        o.fail(name + ": k=" + std::to_string(c.k) + " verdict differs from the oracle");
    }
  }
  auto z = table_of_marks(trivial_group());
  if (is_unit_in_localization(BurnsideElement::integer(z, 2), BurnsideElement::integer(z, 3)).unit)
    o.fail("2 is reported a unit of Z[1/3]");
  return o;
}

Outcome functor_levels() {
  Outcome o;
  std::size_t cases = 0;
  for (const std::string name : {"C2", "C3", "C4", "V4", "S3"}) {
    PermGroup g = parse_group_spec(name);
    for (std::uint32_t n = 2; n <= 12; ++n) {
      FixedPointInstance t(g, n);
      for (std::uint32_t k = 0; k < n; ++k) {
        ++cases;
        UnitLevels u = unit_levels(t, k);
        const bool truth = std::gcd(k, n) == 1;
        if (!u.consistent)
          o.fail(name + " n=" + std::to_string(n) + " k=" + std::to_string(k) +
                 ": levels disagree");
        else if (u.units.front() != truth)
          o.fail(name + " n=" + std::to_string(n) + " k=" + std::to_string(k) +
                 ": unit status differs from gcd(k,n)=1");
      }
    }
  }
  if (o.pass)
    o.detail = std::to_string(cases) + " (G, n, k) cases";
  return o;
}

template <class T>
void require_axioms(Outcome& o, const T& t, std::size_t samples, const std::string& label) {
  static const std::array<const char*, 9> required{
      "res_ring_hom",   "tr_additive",    "nm_multiplicative",     "conj_ring_iso",
      "res_functorial", "tr_functorial",  "nm_functorial",         "frobenius_reciprocity",
      "additive_mackey"};
  AxiomReport r = axiom_report(t, samples, 1);
  for (const char* name : required) {
    bool present = false;
    for (const auto& c : r.checks)
      present = present || c.name == name;
    if (!present)
      o.fail(label + ": check " + name + " missing");
  }
  for (const auto& c : r.checks)
    if (!c.pass || c.cases == 0)
      o.fail(label + ": " + c.name + (c.witness ? " fails at " + *c.witness : " has no cases"));
}

Outcome axioms() {
  Outcome o;
  require_axioms(o, BurnsideInstance(cyclic_group(4)), 100, "burnside C4");
  require_axioms(o, BurnsideInstance(symmetric_group(3)), 100, "burnside S3");
  require_axioms(o, FixedPointInstance(symmetric_group(3), 5), 100, "fixed:n=5 S3");
  return o;
}

Outcome canonical_map() {
  Outcome o;
  std::size_t cases = 0;
  auto run = [&](const PermGroup& g, std::uint32_t n) {
    FixedPointInstance t(g, n);
    BurnsideInstance a(g);
    const auto& lat = t.lattice();
    for (SubgroupId h = 0; h < lat.subgroups().size(); ++h)
      for (SubgroupId k = 0; k < lat.subgroups().size(); ++k) {
        if (!lat.subgroup(h).is_subgroup_of(lat.subgroup(k)))
          continue;
        for (std::uint64_t m = 0; m <= 4; ++m) {
          ++cases;
          auto lhs = burnside_to_T(t, k, apply_nm(a, h, k, a.from_int(h, m)));
          auto rhs = apply_nm(t, h, k, burnside_to_T(t, h, a.from_int(h, m)));
          if (lhs != rhs)
            o.fail(g.name() + " n=" + std::to_string(n) + " k=" + std::to_string(m));
        }
      }
  };
  run(cyclic_group(2), 5);
  run(symmetric_group(3), 7);
  if (o.pass)
    o.detail = std::to_string(cases) + " (H <= K, k) cases";
  return o;
}

Outcome determinism() {
  Outcome o;
  auto capture = [&](int& status) {
    std::string cmd = std::string("\"") + TAMLAB_CLI_PATH + "\" theorem --group S4 --k-max 10 --json";
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
      status = -1;
      return out;
    }
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
      out.append(buf.data(), n);
    status = pclose(pipe);
    return out;
  };
  int s1 = 0, s2 = 0;
  std::string a = capture(s1);
  std::string b = capture(s2);
  if (s1 != 0 || s2 != 0)
    o.fail("tamlab exited nonzero");
  else if (a.empty())
    o.fail("no output");
  else if (a != b)
    o.fail("outputs differ");
  else
    o.detail = std::to_string(a.size()) + " identical bytes";
  return o;
}

} // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double budget_s;
    std::function<Outcome()> body;
  };
  const std::vector<Criterion> criteria{
      {1, "marks tables match the fixed-point recount", 5, marks_tables},
      {2, "marks of nm(k) are k^[G:H] for k <= 5", 60, lemma},
      {3, "mul agrees with the orbit oracle", 30, ring_arithmetic},
      {4, "unit law: is_unit, x*x = 1 and marks +-1 agree", 30, unit_law},
      {5, "k is a unit of A(G)[1/nm(k)] for k <= 20; Z control", 10, main_theorem},
      {6, "fixed-point functor unit levels agree with gcd(k,n) = 1", 60, functor_levels},
      {7, "axiom suite on Burnside C4, S3 and fixed:n=5 over S3", 60, axioms},
      {8, "burnside_to_T commutes with nm on 0..4", 10, canonical_map},
      {9, "theorem --group S4 --k-max 10 --json is byte-stable", 60, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && secs > c.budget_s)
      o.fail("over time budget");
    failures += !o.pass;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " ["
         << secs << " s / " << c.budget_s << " s]";
    if (!o.detail.empty())
      line << " - " << o.detail;
    std::cout << line.str() << std::endl;
  }
  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << std::endl;
  return failures == 0 ? 0 : 1;
}
