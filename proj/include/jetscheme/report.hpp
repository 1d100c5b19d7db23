#ifndef JETSCHEME_REPORT_HPP
#define JETSCHEME_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace jetscheme {

enum class Outcome { Verified, Refuted, BudgetExhausted };

std::string outcome_name(Outcome o);

/// Result of checking one claim. A refuted report always names a concrete
/// witness in `certificate`. Composite claims carry their sub-checks.
struct VerificationReport {
  std::string claim;
  Outcome outcome = Outcome::Verified;
  std::string certificate;
  std::uint64_t spairs = 0;
  double seconds = 0;
  std::vector<VerificationReport> checks;

  bool verified() const { return outcome == Outcome::Verified; }

  static VerificationReport verified_with(std::string claim, std::string certificate);
  static VerificationReport refuted_with(std::string claim, std::string witness);

  /// Aggregates sub-checks: refuted if any is refuted, otherwise budget
  /// exhausted if any ran out, otherwise verified. Counters are summed.
  static VerificationReport combine(std::string claim, std::vector<VerificationReport> checks,
                                    std::string certificate = {});
};

/// {claim, outcome, certificate, spairs_processed, seconds[, checks]}.
/// With `timings` false the seconds field is written as null so that two
/// runs of the same computation serialize identically.
nlohmann::ordered_json to_json(const VerificationReport& r, bool timings = true);

}  // namespace jetscheme

#endif  // JETSCHEME_REPORT_HPP
