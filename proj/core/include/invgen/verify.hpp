#ifndef INVGEN_VERIFY_HPP
#define INVGEN_VERIFY_HPP

#include <string>
#include <vector>

#include "invgen/config.hpp"

namespace invgen {

struct CheckRow {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckRow> rows;
  bool pass = true;
};

const std::vector<std::string> &suite_names();

/// Runs one of: centraliser, h1, wedderburn, lifting-iff, prop-geq, tower,
/// dichotomy, prop-le. Throws UnknownSuite otherwise.
SuiteReport run_suite(const std::string &name, const RunConfig &cfg);

} // namespace invgen

#endif
