#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace graev {

enum class CheckStatus { pass, fail, inconclusive };
std::string to_string(CheckStatus status);

/// Outcome of one named check. `detail` carries margins and, on failure, the
/// witness. Advisory checks are reported but never change the exit status.
struct CheckOutcome {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  nlohmann::json detail = nlohmann::json::object();
  bool advisory = false;
};

/// Exit statuses of the command-line tool.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInconclusive = 3;

/// sha256 of a byte string, lowercase hex.
std::string sha256_hex(const std::string& bytes);

class RunReport {
 public:
  explicit RunReport(std::string command) : command_(std::move(command)) {}

  void set_seed(std::uint64_t seed) { seed_ = seed; }
  /// Records the digest of an input under a label such as "space".
  void add_input(const std::string& label, const std::string& bytes);
  void add_check(CheckOutcome outcome) { checks_.push_back(std::move(outcome)); }
  void set_result(nlohmann::json result) { result_ = std::move(result); }
  void set_wall_time_ms(double ms) { wall_time_ms_ = ms; }

  const std::vector<CheckOutcome>& checks() const { return checks_; }
  const nlohmann::json& result() const { return result_; }

  /// fail wins over inconclusive; advisory checks are ignored.
  CheckStatus overall() const;
  int exit_code() const;

  /// Keys are sorted, so equal runs dump to equal bytes apart from wall_time_ms.
  nlohmann::json to_json() const;
  /// One line per check: name,status,advisory,detail.
  std::string to_csv() const;

 private:
  std::string command_;
  std::optional<std::uint64_t> seed_;
  nlohmann::json inputs_ = nlohmann::json::object();
  std::vector<CheckOutcome> checks_;
  nlohmann::json result_;
  double wall_time_ms_ = 0;
};

/// Removes the wall-time field so two reports can be compared.
nlohmann::json without_timing(nlohmann::json report);

}  // namespace graev
