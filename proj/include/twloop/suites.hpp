#pragma once
// Verification suites run by the command-line tool.  Each suite emits
// records {suite, case, status, detail}, returned in sorted order.

#include <cstdint>
#include <string>
#include <vector>

#include "twloop/matrep.hpp"
#include "twloop/serialize.hpp"

namespace twloop {

struct Record {
  std::string suite;
  std::string name;    // serialized as "case"
  std::string status;  // pass, fail or skip
  std::string detail;
  bool operator<(const Record& o) const;
};

json to_json(const Record& rec);
bool all_passed(const std::vector<Record>& recs);

struct SuiteConfig {
  std::string suite = "all";
  char type = 'A';
  int rank = 2;
  int r = 2;
  int samples = 0;  // 0 selects each suite's default count
  std::uint64_t seed = 1;
  int nmax = 4;
  bool slow = false;
  ModelKind model = ModelKind::Adjoint;
};

// individual suites, without "all"
const std::vector<std::string>& suite_names();
bool supported_case(char type, int rank, int r);
// throws std::invalid_argument on an unknown suite, unsupported case or bad count
void validate(const SuiteConfig& cfg);
std::vector<Record> run_suites(const SuiteConfig& cfg);

}  // namespace twloop
