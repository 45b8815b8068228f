#include <cstdlib>
#include <iostream>

#include "bgpc/suites.hpp"

int main(int argc, char** argv) {
  bgpc::SuiteOptions opts;
  if (argc > 1) opts.seed = std::strtoull(argv[1], nullptr, 10);
  int failed = 0;
  for (int id = 1; id <= 10; ++id) {
    const bgpc::CriterionResult r = bgpc::run_criterion(id, opts);
    std::cout << bgpc::format_result(r) << std::endl;
    if (!r.pass) {
      ++failed;
      for (const auto& line : r.lines) std::cout << "  " << line << '\n';
    }
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
