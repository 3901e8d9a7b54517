#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "colligo/io/json.hpp"

namespace colligo::cli {

struct SuiteResult {
  std::size_t instances = 0;
  std::size_t skipped = 0;  // instances outside the hypotheses (singular points, degenerate images)
  std::vector<io::Json> counterexamples;
};

struct Suite {
  std::string name;
  std::string description;
  std::size_t default_count;
  std::function<SuiteResult(std::uint64_t seed, std::size_t count, long p)> run;
};

const std::vector<Suite>& suites();
const Suite* find_suite(const std::string& name);

}  // namespace colligo::cli
