#include "graev/report.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace graev {

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::inconclusive: return "inconclusive";
  }
  return "unknown";
}

std::string sha256_hex(const std::string& bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < length; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

void RunReport::add_input(const std::string& label, const std::string& bytes) {
  inputs_[label] = "sha256:" + sha256_hex(bytes);
}

CheckStatus RunReport::overall() const {
  CheckStatus status = CheckStatus::pass;
  for (const auto& c : checks_) {
    if (c.advisory) continue;
    if (c.status == CheckStatus::fail) return CheckStatus::fail;
    if (c.status == CheckStatus::inconclusive) status = CheckStatus::inconclusive;
  }
  return status;
}

int RunReport::exit_code() const {
  switch (overall()) {
    case CheckStatus::pass: return kExitPass;
    case CheckStatus::fail: return kExitFailure;
    case CheckStatus::inconclusive: return kExitInconclusive;
  }
  return kExitFailure;
}

nlohmann::json RunReport::to_json() const {
  nlohmann::json checks = nlohmann::json::array();
  std::size_t passed = 0, failed = 0, inconclusive = 0;
  for (const auto& c : checks_) {
    nlohmann::json entry{{"name", c.name}, {"status", to_string(c.status)}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    if (c.advisory) entry["advisory"] = true;
    checks.push_back(std::move(entry));
    if (c.status == CheckStatus::pass) ++passed;
    if (c.status == CheckStatus::fail) ++failed;
    if (c.status == CheckStatus::inconclusive) ++inconclusive;
  }
  nlohmann::json out{{"command", command_},
                     {"inputs", inputs_},
                     {"checks", checks},
                     {"summary",
                      {{"status", to_string(overall())},
                       {"passed", passed},
                       {"failed", failed},
                       {"inconclusive", inconclusive}}},
                     {"wall_time_ms", wall_time_ms_}};
  if (seed_) out["seed"] = *seed_;
  if (!result_.is_null()) out["result"] = result_;
  return out;
}

std::string RunReport::to_csv() const {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char ch : s) {
      if (ch == '"') q += '"';
      q += ch;
    }
    return q + "\"";
  };
  std::ostringstream out;
  out << "name,status,advisory,detail\n";
  for (const auto& c : checks_) {
    out << quote(c.name) << ',' << to_string(c.status) << ',' << (c.advisory ? "true" : "false") << ','
        << quote(c.detail.empty() ? std::string() : c.detail.dump()) << '\n';
  }
  return out.str();
}

nlohmann::json without_timing(nlohmann::json report) {
  if (report.is_object()) report.erase("wall_time_ms");
  return report;
}

}  // namespace graev
