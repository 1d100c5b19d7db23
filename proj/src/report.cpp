#include "jetscheme/report.hpp"

namespace jetscheme {

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Verified: return "verified";
    case Outcome::Refuted: return "refuted";
    case Outcome::BudgetExhausted: return "budget-exhausted";
  }
  return "unknown";
}

VerificationReport VerificationReport::verified_with(std::string claim, std::string certificate) {
  VerificationReport r;
  r.claim = std::move(claim);
  r.certificate = std::move(certificate);
  return r;
}

VerificationReport VerificationReport::refuted_with(std::string claim, std::string witness) {
  VerificationReport r;
  r.claim = std::move(claim);
  r.outcome = Outcome::Refuted;
  r.certificate = std::move(witness);
  return r;
}

VerificationReport VerificationReport::combine(std::string claim,
                                               std::vector<VerificationReport> checks,
                                               std::string certificate) {
  VerificationReport r;
  r.claim = std::move(claim);
  bool exhausted = false;
  const VerificationReport* refuted = nullptr;
  for (const auto& c : checks) {
    r.spairs += c.spairs;
    r.seconds += c.seconds;
    if (c.outcome == Outcome::Refuted && refuted == nullptr) refuted = &c;
    if (c.outcome == Outcome::BudgetExhausted) exhausted = true;
  }
  if (refuted != nullptr) {
    r.outcome = Outcome::Refuted;
    r.certificate = refuted->claim + ": " + refuted->certificate;
  } else if (exhausted) {
    r.outcome = Outcome::BudgetExhausted;
    r.certificate = std::move(certificate);
  } else {
    r.certificate = std::move(certificate);
  }
  r.checks = std::move(checks);
  return r;
}

nlohmann::ordered_json to_json(const VerificationReport& r, bool timings) {
  nlohmann::ordered_json j;
  j["claim"] = r.claim;
  j["outcome"] = outcome_name(r.outcome);
  j["certificate"] = r.certificate;
  j["spairs_processed"] = r.spairs;
  if (timings) {
    j["seconds"] = r.seconds;
  } else {
    j["seconds"] = nullptr;
  }
  if (!r.checks.empty()) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) arr.push_back(to_json(c, timings));
    j["checks"] = std::move(arr);
  }
  return j;
}

}  // namespace jetscheme
