#include "tamlab/cli.hpp"

#include <charconv>
#include <functional>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "tamlab/burnside_functor.hpp"
#include "tamlab/catalog.hpp"
#include "tamlab/errors.hpp"
#include "tamlab/fixed_point.hpp"
#include "tamlab/tambara.hpp"

namespace tamlab::cli {

using Json = nlohmann::ordered_json;

namespace {

// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
Json to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Json to_json(std::span<const Integer> values) {
  Json arr = Json::array();
  for (const auto& v : values)
    arr.push_back(to_json(v));
  return arr;
}

Json class_labels(const TableOfMarks& t) {
  Json arr = Json::array();
  for (ClassIndex c = 0; c < t.size(); ++c)
    arr.push_back(t.lattice().label(c));
  return arr;
}

Json header(const TableOfMarks& t) {
  Json j;
  j["group"] = t.group_name();
  j["classes"] = class_labels(t);
  return j;
}

Json prime_json(const TableOfMarks& t, const PrimeDescriptor& p) {
  Json j;
  j["class"] = t.lattice().label(p.class_index);
  j["q"] = to_json(p.q);
  return j;
}

std::string prime_text(const TableOfMarks& t, const PrimeDescriptor& p) {
  return "(" + t.lattice().label(p.class_index) + ", q=" + p.q.str() + ")";
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::uint64_t magnitude(std::int64_t k) {
  return k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
}

PermGroup resolve_group(const Options& opt) {
  if (opt.group.empty())
    throw ParseError("--group is required");
  return parse_group_spec(opt.group, opt.limits);
}

// Maps library errors onto exit codes.
CommandResult guarded(const std::function<CommandResult()>& body) {
  try {
    return body();
  } catch (const CapExceeded& e) {
    return {kCapExceeded, {}, std::string("cap exceeded: ") + e.what() + "\n"};
  } catch (const Error& e) {
    return {kInputError, {}, std::string("input error: ") + e.what() + "\n"};
  } catch (const std::invalid_argument& e) {
    return {kInputError, {}, std::string("input error: ") + e.what() + "\n"};
  }
}

} // namespace

FunctorSpec parse_functor_spec(std::string_view text) {
  FunctorSpec spec;
  if (text == "burnside")
    return spec;
  constexpr std::string_view prefix = "fixed:n=";
  if (text.rfind(prefix, 0) != 0)
    throw ParseError("unknown functor spec: " + std::string(text));
  std::string_view rest = text.substr(prefix.size());
  constexpr std::string_view diag = ",diag";
  if (rest.size() > diag.size() && rest.substr(rest.size() - diag.size()) == diag) {
    spec.diagonal = true;
    rest.remove_suffix(diag.size());
  }
  std::uint32_t n = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
  if (rest.empty() || ec != std::errc{} || ptr != rest.data() + rest.size() || n < 1)
    throw ParseError("malformed modulus in functor spec: " + std::string(text));
  spec.kind = FunctorSpec::Kind::FixedPoint;
  spec.modulus = n;
  return spec;
}

BurnsideElement parse_element(std::string_view text, const MarksTable& table) {
  auto parse_int = [&](std::string_view s) {
    while (!s.empty() && s.front() == ' ')
      s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ')
      s.remove_suffix(1);
    std::string digits(s);
    bool ok = !digits.empty();
    for (std::size_t i = 0; i < digits.size() && ok; ++i)
      ok = std::isdigit(static_cast<unsigned char>(digits[i])) ||
           (i == 0 && digits.size() > 1 && (digits[i] == '-' || digits[i] == '+'));
    if (!ok)
      throw ParseError("malformed integer in element: " + std::string(text));
    if (digits.front() == '+')
      digits.erase(0, 1);
    return Integer(digits);
  };
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']')
      throw ParseError("element list must end with ']': " + std::string(text));
    std::string_view body = text.substr(1, text.size() - 2);
    std::vector<Integer> coeffs;
    std::size_t start = 0;
    while (start <= body.size()) {
      auto comma = body.find(',', start);
      coeffs.push_back(parse_int(body.substr(start, comma == std::string_view::npos
                                                       ? std::string_view::npos
                                                       : comma - start)));
      if (comma == std::string_view::npos)
        break;
      start = comma + 1;
    }
    if (coeffs.size() != table->size())
      throw ParseError("element has " + std::to_string(coeffs.size()) + " coefficients but " +
                       table->group_name() + " has " + std::to_string(table->size()) +
                       " conjugacy classes of subgroups");
    return BurnsideElement(table, std::move(coeffs));
  }
  return BurnsideElement::integer(table, parse_int(text));
}

CommandResult cmd_marks(const Options& opt) {
  return guarded([&] {
    auto table = table_of_marks(resolve_group(opt), opt.limits);
    const auto& t = *table;
    std::ostringstream out;
    if (opt.json) {
      Json j = header(t);
      Json rows = Json::array();
      for (ClassIndex i = 0; i < t.size(); ++i) {
        Json row = Json::array();
        for (ClassIndex k = 0; k < t.size(); ++k)
          row.push_back(t.mark(i, k));
        rows.push_back(row);
      }
      j["matrix"] = rows;
      return CommandResult{kSuccess, dump(j), {}};
    }
    std::size_t width = 2;
    for (ClassIndex i = 0; i < t.size(); ++i) {
      width = std::max(width, t.lattice().label(i).size());
      for (ClassIndex k = 0; k < t.size(); ++k)
        width = std::max(width, std::to_string(t.mark(i, k)).size());
    }
    out << "Table of marks of " << t.group_name() << " (row H_i, column G/H_j)\n";
    out << std::setw(static_cast<int>(width)) << "";
    for (ClassIndex k = 0; k < t.size(); ++k)
      out << ' ' << std::setw(static_cast<int>(width)) << t.lattice().label(k);
    out << '\n';
    for (ClassIndex i = 0; i < t.size(); ++i) {
      out << std::setw(static_cast<int>(width)) << t.lattice().label(i);
      for (ClassIndex k = 0; k < t.size(); ++k)
        out << ' ' << std::setw(static_cast<int>(width)) << t.mark(i, k);
      out << '\n';
    }
    return CommandResult{kSuccess, out.str(), {}};
  });
}

CommandResult cmd_norm(const Options& opt, std::int64_t k) {
  return guarded([&] {
    auto table = table_of_marks(resolve_group(opt), opt.limits);
    const std::uint64_t n = magnitude(k);
    NormResult norm = norm_int_detailed(table, n, opt.limits);
    MarksVector marks = ghost(norm.value);
    if (opt.json) {
      Json j = header(*table);
      j["k"] = n;
      j["coefficients"] = to_json(norm.value.coeffs());
      j["marks"] = to_json(marks.values);
      j["enumerated"] = norm.enumerated;
      return CommandResult{kSuccess, dump(j), {}};
    }
    std::string line = format(norm.value) + "; marks = " + format(marks) + "\n";
    std::string err = k < 0 ? "note: norms are defined on naturals; using |k| = " +
                                  std::to_string(n) + "\n"
                            : std::string{};
    return CommandResult{kSuccess, line, err};
  });
}

CommandResult cmd_lemma(const Options& opt, std::uint64_t k_max) {
  return guarded([&] {
    auto table = table_of_marks(resolve_group(opt), opt.limits);
    const auto& t = *table;
    LemmaReport report = lemma_check(table, k_max, opt.limits);
    const int code = report.ok() ? kSuccess : kCheckFailed;
    if (opt.json) {
      Json j = header(t);
      j["k_max"] = k_max;
      j["cells_checked"] = report.cells_checked;
      j["cells_enumerated"] = report.cells_enumerated;
      Json viol = Json::array();
      for (const auto& v : report.violations) {
        Json e;
        e["k"] = v.k;
        e["class"] = t.lattice().label(v.class_index);
        e["observed"] = to_json(v.observed);
        e["expected"] = to_json(v.expected);
        viol.push_back(e);
      }
      j["violations"] = viol;
      j["path_disagreements"] = report.path_disagreements;
      j["pass"] = report.ok();
      return CommandResult{code, dump(j), {}};
    }
    std::ostringstream out;
    out << "marks of nm(k) against k^[G:H] on " << t.group_name() << ", 0 <= k <= " << k_max
        << '\n';
    out << "cells checked: " << report.cells_checked
        << ", by enumeration: " << report.cells_enumerated << '\n';
    for (const auto& v : report.violations)
      out << "VIOLATION k=" << v.k << " H=" << t.lattice().label(v.class_index)
          << " observed " << v.observed << " expected " << v.expected << '\n';
    for (auto k : report.path_disagreements)
      out << "PATH DISAGREEMENT k=" << k << '\n';
    out << (report.ok() ? "PASS" : "FAIL") << '\n';
    return CommandResult{code, out.str(), {}};
  });
}

CommandResult cmd_primes(const Options& opt, const std::string& element) {
  return guarded([&] {
    auto table = table_of_marks(resolve_group(opt), opt.limits);
    const auto& t = *table;
    BurnsideElement x = parse_element(element, table);
    PrimeSupport support = relevant_primes(x);
    MarksVector marks = ghost(x);
    if (opt.json) {
      Json j = header(t);
      j["element"] = to_json(x.coeffs());
      j["marks"] = to_json(marks.values);
      Json primes = Json::array();
      for (const auto& p : support.primes)
        primes.push_back(prime_json(t, p));
      j["primes"] = primes;
      Json zeros = Json::array();
      for (auto c : support.zero_mark_classes)
        zeros.push_back(t.lattice().label(c));
      j["zero_mark_classes"] = zeros;
      return CommandResult{kSuccess, dump(j), {}};
    }
    std::ostringstream out;
    out << "x = " << format(x) << "; marks = " << format(marks) << '\n';
    if (support.primes.empty() && support.zero_mark_classes.empty())
      out << "no prime ideal contains x\n";
    for (const auto& p : support.primes)
      out << "prime " << prime_text(t, p) << '\n';
    for (auto c : support.zero_mark_classes)
      out << "mark 0 at " << t.lattice().label(c) << ": x lies in (" << t.lattice().label(c)
          << ", q) for every q\n";
    return CommandResult{kSuccess, out.str(), {}};
  });
}

CommandResult cmd_unit(const Options& opt, const std::string& element,
                       const std::optional<std::string>& localize_at) {
  return guarded([&] {
    auto table = table_of_marks(resolve_group(opt), opt.limits);
    const auto& t = *table;
    BurnsideElement x = parse_element(element, table);
    std::optional<BurnsideElement> u;
    if (localize_at)
      u = parse_element(*localize_at, table);
    LocalizationVerdict verdict =
        u ? is_unit_in_localization(x, *u) : LocalizationVerdict{is_unit(x), std::nullopt};
    if (!u && !verdict.unit)
      verdict = is_unit_in_localization(x, BurnsideElement::one(table));
    if (opt.json) {
      Json j = header(t);
      j["element"] = to_json(x.coeffs());
      j["marks"] = to_json(ghost(x).values);
      if (u)
        j["localize_at"] = to_json(u->coeffs());
      j["unit"] = verdict.unit;
      if (verdict.witness)
        j["witness"] = prime_json(t, *verdict.witness);
      return CommandResult{kSuccess, dump(j), {}};
    }
    std::ostringstream out;
    out << "x = " << format(x) << "; marks = " << format(ghost(x)) << '\n';
    if (u)
      out << "in A(" << t.group_name() << ")[1/u], u = " << format(*u) << '\n';
    out << (verdict.unit ? "unit" : "not a unit");
    if (verdict.witness)
      out << " (witness prime " << prime_text(t, *verdict.witness) << ")";
    out << '\n';
    return CommandResult{kSuccess, out.str(), {}};
  });
}

CommandResult cmd_theorem(const Options& opt, std::uint64_t k_max) {
  return guarded([&] {
    auto table = table_of_marks(resolve_group(opt), opt.limits);
    const auto& t = *table;
    TheoremReport report = verify_main_theorem(table, k_max, opt.limits);
    const int code = report.ok() ? kSuccess : kCheckFailed;
    if (opt.json) {
      Json j = header(t);
      j["k_max"] = k_max;
      Json results = Json::array();
      for (const auto& c : report.results) {
        Json e;
        e["k"] = c.k;
        e["pass"] = c.pass;
        if (c.witness)
          e["witness"] = prime_json(t, *c.witness);
        results.push_back(e);
      }
      j["results"] = results;
      j["zero_case_unit"] = report.zero_case_unit;
      return CommandResult{code, dump(j), {}};
    }
    std::ostringstream out;
    for (const auto& c : report.results) {
      out << "k=" << c.k << ": k is " << (c.pass ? "" : "NOT ") << "a unit in A("
          << t.group_name() << ")[1/nm(k)]" << (c.enumerated ? " [norm enumerated]" : "");
      if (c.witness)
        out << " witness " << prime_text(t, *c.witness);
      out << '\n';
    }
    out << "k=0: excluded (informational: 0 is a unit of the zero ring A[1/nm(0)] = "
        << (report.zero_case_unit ? "yes" : "no") << ")\n";
    out << (report.ok() ? "PASS " : "FAIL ") << report.passed() << '/' << report.results.size()
        << '\n';
    return CommandResult{code, out.str(), {}};
  });
}

namespace {

template <TambaraFunctor T>
CommandResult axioms_for(const T& instance, const Options& opt, std::size_t samples,
                         std::uint64_t seed) {
  AxiomReport report = axiom_report(instance, samples, seed);
  const int code = report.ok() ? kSuccess : kCheckFailed;
  const auto table = table_of_marks(instance.lattice());
  if (opt.json) {
    Json j;
    j["instance"] = report.instance;
    j["seed"] = seed;
    j["group"] = table->group_name();
    j["classes"] = class_labels(*table);
    Json checks = Json::array();
    for (const auto& c : report.checks) {
      Json e;
      e["name"] = c.name;
      e["pass"] = c.pass;
      e["cases"] = c.cases;
      if (c.witness)
        e["witness"] = *c.witness;
      checks.push_back(e);
    }
    j["checks"] = checks;
    return CommandResult{code, dump(j), {}};
  }
  std::ostringstream out;
  out << "axioms of " << report.instance << " over " << table->group_name() << " (seed " << seed
      << ")\n";
  for (const auto& c : report.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases)";
    if (c.witness)
      out << ": " << *c.witness;
    out << '\n';
  }
  return CommandResult{code, out.str(), {}};
}

template <TambaraFunctor T>
CommandResult levels_for(const T& instance, const Options& opt, std::uint64_t k_max) {
  const auto table = table_of_marks(instance.lattice());
  const auto& lat = instance.lattice();
  bool all_consistent = true;
  Json results = Json::array();
  std::ostringstream out;
  out << "unit status of k at each level of " << instance.name() << " over "
      << table->group_name() << '\n';
  out << "k";
  for (ClassIndex c = 0; c < lat.class_count(); ++c)
    out << ' ' << lat.label(c);
  out << '\n';
  for (std::uint64_t k = 0; k <= k_max; ++k) {
    UnitLevels levels = unit_levels(instance, Integer(k));
    all_consistent = all_consistent && levels.consistent;
    Json e;
    e["k"] = k;
    Json units = Json::array();
    for (bool u : levels.units)
      units.push_back(u);
    e["units"] = units;
    e["consistent"] = levels.consistent;
    results.push_back(e);
    out << k;
    for (bool u : levels.units)
      out << ' ' << (u ? "unit" : "-");
    out << (levels.consistent ? "" : "  INCONSISTENT") << '\n';
  }
  const int code = all_consistent ? kSuccess : kCheckFailed;
  if (opt.json) {
    Json j;
    j["instance"] = instance.name();
    j["group"] = table->group_name();
    j["classes"] = class_labels(*table);
    j["k_max"] = k_max;
    j["results"] = results;
    j["consistent"] = all_consistent;
    return CommandResult{code, dump(j), {}};
  }
  out << (all_consistent ? "PASS" : "FAIL") << '\n';
  return CommandResult{code, out.str(), {}};
}

} // namespace

CommandResult cmd_axioms(const Options& opt, const std::string& functor, std::size_t samples,
                         std::uint64_t seed) {
  return guarded([&] {
    if (samples == 0)
      throw ParseError("--samples must be at least 1");
    FunctorSpec spec = parse_functor_spec(functor);
    PermGroup g = resolve_group(opt);
    if (spec.kind == FunctorSpec::Kind::Burnside)
      return axioms_for(BurnsideInstance(g, opt.limits), opt, samples, seed);
    return axioms_for(FixedPointInstance(g, spec.modulus, spec.diagonal, opt.limits), opt, samples,
                      seed);
  });
}

CommandResult cmd_levels(const Options& opt, const std::string& functor, std::uint64_t k_max) {
  return guarded([&] {
    FunctorSpec spec = parse_functor_spec(functor);
    PermGroup g = resolve_group(opt);
    if (spec.kind == FunctorSpec::Kind::Burnside)
      return levels_for(BurnsideInstance(g, opt.limits), opt, k_max);
    return levels_for(FixedPointInstance(g, spec.modulus, spec.diagonal, opt.limits), opt, k_max);
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Burnside rings, tables of marks and Tambara functors over small finite groups.\n"
               "Groups: C<n>, D<n> (dihedral of order 2n), S<n>, A<n>, Q8, V4,\n"
               "        perm:<degree>:<cycles;cycles;...> with 1-based cycle notation."};
  app.require_subcommand(1);

  Options opt;
  std::int64_t k = 0;
  std::uint64_t k_max = 10;
  std::string element;
  std::string localize_at;
  std::string functor = "burnside";
  std::size_t samples = 100;
  std::uint64_t seed = 1;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--group,-g", opt.group, "group spec")->required();
    sub->add_flag("--json", opt.json, "emit the stable JSON form");
    sub->add_option("--max-order", opt.limits.max_order, "group order cap")->capture_default_str();
    sub->add_option("--max-points", opt.limits.max_points, "G-set enumeration cap")
        ->envname("TAMLAB_MAX_POINTS")
        ->capture_default_str();
  };

  std::function<CommandResult()> action;

  auto* marks = app.add_subcommand("marks", "print the table of marks");
  common(marks);
  marks->callback([&] { action = [&] { return cmd_marks(opt); }; });

  auto* norm = app.add_subcommand("norm", "decompose nm_e^G(k), the G-set of functions G -> {1..k}");
  common(norm);
  norm->add_option("--k", k, "integer k")->required();
  norm->callback([&] { action = [&] { return cmd_norm(opt, k); }; });

  auto* lemma = app.add_subcommand("lemma", "check marks of nm(k) against k^[G:H]");
  common(lemma);
  lemma->add_option("--k-max", k_max, "largest k")->capture_default_str();
  lemma->callback([&] { action = [&] { return cmd_lemma(opt, k_max); }; });

  auto* primes = app.add_subcommand("primes", "list the prime ideals of A(G) containing an element");
  common(primes);
  primes->add_option("--element,-x", element, "k or [c0,c1,...]")->required();
  primes->callback([&] { action = [&] { return cmd_primes(opt, element); }; });

  auto* unit = app.add_subcommand("unit", "decide whether an element is a unit, optionally in A(G)[1/u]");
  common(unit);
  unit->add_option("--element,-x", element, "k or [c0,c1,...]")->required();
  auto* loc = unit->add_option("--localize-at,-u", localize_at, "element u to invert");
  unit->callback([&] {
    action = [&] {
      return cmd_unit(opt, element,
                      loc->count() ? std::optional<std::string>(localize_at) : std::nullopt);
    };
  });

  auto* theorem = app.add_subcommand("theorem", "check k is a unit of A(G)[1/nm(k)] for 1 <= k <= k-max");
  common(theorem);
  theorem->add_option("--k-max", k_max, "largest k")->capture_default_str();
  theorem->callback([&] { action = [&] { return cmd_theorem(opt, k_max); }; });

  auto* axioms = app.add_subcommand("axioms", "check structure-map laws of a Tambara functor");
  common(axioms);
  axioms->add_option("--functor,-f", functor, "burnside | fixed:n=<m> | fixed:n=<m>,diag")
      ->capture_default_str();
  axioms->add_option("--samples", samples, "samples per level")->capture_default_str();
  axioms->add_option("--seed", seed, "sampling seed")->capture_default_str();
  axioms->callback([&] { action = [&] { return cmd_axioms(opt, functor, samples, seed); }; });

  auto* levels = app.add_subcommand("levels", "unit status of k at every level of a Tambara functor");
  common(levels);
  levels->add_option("--functor,-f", functor, "burnside | fixed:n=<m> | fixed:n=<m>,diag")
      ->capture_default_str();
  levels->add_option("--k-max", k_max, "largest k")->capture_default_str();
  levels->callback([&] { action = [&] { return cmd_levels(opt, functor, k_max); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kInputError;
  }

  CommandResult result = action();
  out << result.out;
  err << result.err;
  return result.exit_code;
}

} // namespace tamlab::cli
