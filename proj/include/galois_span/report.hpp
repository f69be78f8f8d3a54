#pragma once

#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace galois_span {

enum class Verdict { Pass, Fail, TriviallyTrue };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::TriviallyTrue: return "trivially true";
  }
  return "?";
}

// Outcome of one exact identity check. `left` and `right` are the two sides
// after all denominators and negative exponents have been cleared, printed
// as decimal integers (or p/q where a rational is the natural value).
struct VerificationReport {
  std::string claim;
  std::string inputs;
  std::string left;
  std::string right;
  Verdict verdict = Verdict::Fail;
  double millis = 0.0;
  std::vector<std::string> notes;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();

  bool passed() const { return verdict != Verdict::Fail; }
};

inline Verdict verdict_from(bool ok) { return ok ? Verdict::Pass : Verdict::Fail; }

// Timing is opt-in so that identical inputs serialize to identical bytes.
inline nlohmann::ordered_json to_json(const VerificationReport& r, bool with_timing = false) {
  nlohmann::ordered_json j;
  j["claim"] = r.claim;
  j["inputs"] = r.inputs;
  j["left"] = r.left;
  j["right"] = r.right;
  j["pass"] = r.passed();
  j["verdict"] = verdict_name(r.verdict);
  if (with_timing) j["millis"] = r.millis;
  j["notes"] = r.notes;
  if (!r.details.empty()) j["details"] = r.details;
  return j;
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double millis() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace galois_span
