// Runs the thirteen acceptance criteria and prints one line per criterion.
#include "acceptance.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 7;
  int failures = 0;
  double total = 0;
  for (int id = 1; id <= ulab::verify::kCriterionCount; ++id) {
    const auto r = ulab::verify::run_criterion(id, seed);
    std::cout << ulab::verify::format_result(r) << "  [" << r.seconds << " s]" << std::endl;
    failures += r.pass ? 0 : 1;
    total += r.seconds;
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << " in " << total
            << " s" << std::endl;
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
