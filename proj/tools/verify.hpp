#pragma once

#include <string>
#include <vector>

namespace bordx::cli {

struct VerifyRange {
  int kmax = 0;  // 0 picks the per-lemma default
  int nmax = 0;
  int imax = 0;
};

struct VerifyResult {
  std::string instance;
  bool pass = false;
  std::string detail;
};

const std::vector<std::string>& lemma_names();
// Throws std::invalid_argument for an unknown lemma.
std::vector<VerifyResult> run_verification(const std::string& lemma, const VerifyRange& range, unsigned threads);

}  // namespace bordx::cli
