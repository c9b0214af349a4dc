#pragma once

// Pass/fail bookkeeping for the exhaustive law checks on finite truncations.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gcoh {

struct LawReport {
  LawReport() = default;
  explicit LawReport(std::string law) : name(std::move(law)) {}

  std::string name;
  bool passed = true;
  std::size_t checked = 0;                    // instances examined
  std::optional<std::string> counterexample;  // first failure, empty on pass

  // Record one instance; only the first failure is kept.
  void record(bool ok, const std::string& what = {}) {
    ++checked;
    if (!ok && passed) {
      passed = false;
      counterexample = what;
    }
  }
  template <typename Describe>
  void check(bool ok, Describe&& describe) {
    ++checked;
    if (!ok && passed) {
      passed = false;
      counterexample = describe();
    }
  }
};

struct VerificationReport {
  std::vector<LawReport> laws;

  bool passed() const {
    for (const auto& l : laws)
      if (!l.passed) return false;
    return true;
  }
  const LawReport* find(const std::string& name) const {
    for (const auto& l : laws)
      if (l.name == name) return &l;
    return nullptr;
  }
  void append(const VerificationReport& other) { laws.insert(laws.end(), other.laws.begin(), other.laws.end()); }
};

}  // namespace gcoh
