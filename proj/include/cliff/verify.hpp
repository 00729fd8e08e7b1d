#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cliff/render.hpp"

namespace cliff {

struct VerifyOptions {
  std::uint64_t seed = 1;
  int qmax = 24;      // theorem3: sequences listed up to qmax
  int nmax = 9;       // classification: all p+q <= nmax
  int samples = 1000;  // numeric layer
  int block_samples = 100;
  bool parallel = true;
};

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  Json data = Json::object();
  bool ok() const;
  void add(std::string name, bool ok, std::string detail = {});
};

/// classification, radon-hurwitz, theorem3, cycles, chevalley, karoubi,
/// even-iso, phi-psi, block-matrix, reps, quotient, numeric.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws std::invalid_argument for
/// an unknown name.
std::vector<SuiteReport> run_suite(const std::string& name, const VerifyOptions& opts);

std::string to_text(const SuiteReport& report);
Json to_json(const SuiteReport& report);

/// Reference sequence k(0,q) = q - r_q joined with commas.
std::string join_sequence(const std::vector<long long>& xs);

}  // namespace cliff
