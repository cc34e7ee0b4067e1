#include "dtqft/report.hpp"

#include <algorithm>
#include <cstdio>

namespace dtqft {

void ValidationReport::add(std::string name, std::string inputs, bool passed, std::string witness) {
  entries_.push_back(CheckResult{std::move(name), std::move(inputs), passed, std::move(witness)});
}

void ValidationReport::append(const ValidationReport& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

bool ValidationReport::all_passed() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* ValidationReport::find(std::string_view name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

nlohmann::json ValidationReport::to_json() const {
  auto checks = nlohmann::json::array();
  for (const auto& e : entries_) {
    nlohmann::json j;
    j["check"] = e.name;
    j["inputs"] = e.inputs;
    j["inputs_digest"] = digest(e.inputs);
    j["pass"] = e.passed;
    j["witness"] = e.witness.empty() ? nlohmann::json(nullptr) : nlohmann::json(e.witness);
    checks.push_back(std::move(j));
  }
  return nlohmann::json{{"passed", all_passed()}, {"checks", std::move(checks)}};
}

std::string ValidationReport::to_text() const {
  std::string out;
  for (const auto& e : entries_) {
    out += e.passed ? "PASS " : "FAIL ";
    out += e.name;
    if (!e.inputs.empty()) out += " [" + e.inputs + "]";
    if (!e.passed && !e.witness.empty()) out += " witness: " + e.witness;
    out += '\n';
  }
  return out;
}

std::string digest(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace dtqft
