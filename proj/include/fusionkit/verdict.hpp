#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace fusionkit {

enum class Outcome { pass, fail, not_applicable };

std::string_view to_string(Outcome o);

/// Result of one named check. `residual` is set for numeric checks; `exact`
/// marks checks decided in exact arithmetic.
struct Verdict {
  std::string check;
  Outcome outcome = Outcome::not_applicable;
  std::optional<double> residual;
  bool exact = false;
  std::string details;

  bool passed() const { return outcome == Outcome::pass; }
  bool failed() const { return outcome == Outcome::fail; }
};

inline Verdict make_verdict(std::string check, bool ok, std::string details = {}) {
  return Verdict{std::move(check), ok ? Outcome::pass : Outcome::fail, std::nullopt, true,
                 std::move(details)};
}

inline Verdict not_applicable(std::string check, std::string reason) {
  return Verdict{std::move(check), Outcome::not_applicable, std::nullopt, false,
                 std::move(reason)};
}

}  // namespace fusionkit
