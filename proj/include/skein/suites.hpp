#ifndef SKEIN_SUITES_HPP
#define SKEIN_SUITES_HPP

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "skein/ring.hpp"

namespace skein {

struct UnknownSuite : std::runtime_error {
  explicit UnknownSuite(const std::string& what) : std::runtime_error(what) {}
};

// One independently runnable check. The thunk is pure; thrown errors are
// converted to failing verdicts by run_suite.
struct SuiteCell {
  std::string name;
  std::function<Verdict()> run;
};

struct SuiteResult {
  std::string cell;
  Verdict verdict;
};

// Knobs shared by all suites; zero means the suite default sweep.
struct SuiteOptions {
  int max_weight = 0;  // color / partition weight cap
  int max_n = 0;       // strand count cap (hecke)
  int p = 0;           // restrict to a single prime (alpha, special-lmov)
  long long tau = 0;   // restrict to a single framing (alpha)
  bool has_tau = false;
  int jobs = 1;
};

// registered suite names, in report order
std::vector<std::string> suite_names();

// the cells of one suite at the requested scale; throws UnknownSuite
std::vector<SuiteCell> suite_cells(const std::string& suite,
                                   const SuiteOptions& opt);

// evaluate cells on opt.jobs workers, preserving cell order
std::vector<SuiteResult> run_cells(const std::vector<SuiteCell>& cells,
                                   int jobs);

std::vector<SuiteResult> run_suite(const std::string& suite,
                                   const SuiteOptions& opt);

}  // namespace skein

#endif
