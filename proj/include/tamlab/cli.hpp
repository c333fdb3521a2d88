#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "tamlab/burnside.hpp"
#include "tamlab/limits.hpp"

namespace tamlab::cli {

enum ExitCode : int { kSuccess = 0, kCheckFailed = 1, kInputError = 2, kCapExceeded = 3 };

struct Options {
  std::string group;
  bool json = false;
  Limits limits;
};

struct CommandResult {
  int exit_code = kSuccess;
  std::string out;
  std::string err;
};

/// "burnside", "fixed:n=<modulus>" or "fixed:n=<modulus>,diag".
struct FunctorSpec {
  enum class Kind { Burnside, FixedPoint } kind = Kind::Burnside;
  std::uint32_t modulus = 0;
  bool diagonal = false;
};
FunctorSpec parse_functor_spec(std::string_view text);

/// A bare integer k (k·1) or "[c0,c1,...]" over the canonical class order.
BurnsideElement parse_element(std::string_view text, const MarksTable& table);

CommandResult cmd_marks(const Options& opt);
CommandResult cmd_norm(const Options& opt, std::int64_t k);
CommandResult cmd_lemma(const Options& opt, std::uint64_t k_max);
CommandResult cmd_primes(const Options& opt, const std::string& element);
CommandResult cmd_unit(const Options& opt, const std::string& element,
                       const std::optional<std::string>& localize_at);
CommandResult cmd_theorem(const Options& opt, std::uint64_t k_max);
CommandResult cmd_axioms(const Options& opt, const std::string& functor, std::size_t samples,
                         std::uint64_t seed);
CommandResult cmd_levels(const Options& opt, const std::string& functor, std::uint64_t k_max);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace tamlab::cli
