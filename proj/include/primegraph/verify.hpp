#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "primegraph/io.hpp"

namespace primegraph {

/// Outcome of one exhaustive verification suite over graphs on 1..max_k
/// vertices. `failures` are broken hard assertions; `discrepancies` are
/// measured facts that disagree with a stated formula or reading and are
/// reported only.
struct SuiteResult {
  std::string suite;
  int max_k = 0;
  Json details = Json::object();
  std::vector<std::string> failures;
  std::vector<std::string> discrepancies;

  bool passed() const { return failures.empty(); }
};

std::vector<std::string_view> suite_names();

/// Largest max_k a suite accepts.
int suite_limit(std::string_view suite);

/// Suites: diameter, hamilton, selfcomp, bijection, counting, generation.
/// Throws BAD_PARAMS for an unknown suite or max_k < 1, SIZE_EXCEEDED above
/// the suite limit.
SuiteResult run_suite(std::string_view suite, int max_k, int jobs = 1);

Json suite_json(const SuiteResult& r);

}  // namespace primegraph
