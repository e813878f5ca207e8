#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "jblocks/formal_group.hpp"

namespace jblocks::verify {

struct Options {
  std::uint64_t seed = 20240601;
  /// Extra law checked alongside the built-in ones by the independence suite.
  std::optional<GeneralizedLaw> extra_law;
};

/// Collects checks for one suite.
class Context {
 public:
  explicit Context(const Options& options) : options_(options) {}
  const Options& options() const noexcept { return options_; }

  bool check(bool condition, const std::string& what);
  void note(std::string text) { notes_.push_back(std::move(text)); }

  std::size_t checks() const noexcept { return checks_; }
  const std::vector<std::string>& failures() const noexcept { return failures_; }
  const std::vector<std::string>& notes() const noexcept { return notes_; }

 private:
  const Options& options_;
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

struct Suite {
  unsigned criterion;
  std::string name;
  std::string title;
  double time_limit;  // seconds; 0 means none
  std::function<void(Context&)> body;
};

struct SuiteResult {
  unsigned criterion = 0;
  std::string name, title;
  bool passed = false;
  std::size_t checks = 0;
  double seconds = 0;
  double time_limit = 0;
  std::vector<std::string> failures, notes;
};

const std::vector<Suite>& suites();

/// Suites whose name or criterion number appears in `only`; all if empty.
/// Throws InvalidArgument for a filter matching nothing.
std::vector<const Suite*> select(const std::vector<std::string>& only);

SuiteResult run_suite(const Suite& suite, const Options& options);
std::vector<SuiteResult> run(const std::vector<const Suite*>& chosen, const Options& options);

/// "PASS  criterion 1  fossum-table  (24 checks, 0.31 s / 5 s)".
std::string summary_line(const SuiteResult& result);
nlohmann::json to_json(const SuiteResult& result);

}  // namespace jblocks::verify
