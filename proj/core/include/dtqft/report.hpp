#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace dtqft {

struct CheckResult {
  std::string name;
  std::string inputs;  // human-readable description of what was checked
  bool passed = false;
  std::string witness;  // empty on success
};

/// Ordered list of named pass/fail checks. Order of insertion is the order
/// of reporting, so reports are byte-stable for a fixed input.
class ValidationReport {
 public:
  void add(std::string name, std::string inputs, bool passed, std::string witness = {});
  void append(const ValidationReport& other);

  bool all_passed() const;
  std::size_t size() const { return entries_.size(); }
  const std::vector<CheckResult>& entries() const { return entries_; }
  const CheckResult* find(std::string_view name) const;

  nlohmann::json to_json() const;
  std::string to_text() const;

 private:
  std::vector<CheckResult> entries_;
};

/// 64-bit FNV-1a, rendered as 16 hex digits. Stable across platforms.
std::string digest(std::string_view text);

}  // namespace dtqft
