// Acceptance run: one PASS/FAIL line per item, details indented below it.
// Writes acceptance_report.json (measured kappa, kernel ratios, count tables)
// into the working directory.

#include <fstream>
#include <iostream>

#include "toprec/suite.hpp"

int main() {
  using namespace toprec;
  CheckReport rep = run_suite({}, [](const CheckItem& i) {
    std::cout << "[" << (i.pass ? "PASS" : "FAIL") << "] criterion " << i.id << ": " << i.title << " (" << i.seconds << " s)\n";
    for (const auto& d : i.details) std::cout << "       " << d << "\n";
    std::cout.flush();
  });
  std::ofstream("acceptance_report.json") << to_json(rep).dump(2) << "\n";
  int failed = 0;
  for (const auto& i : rep.items) failed += i.pass ? 0 : 1;
  std::cout << (failed ? std::to_string(failed) + " of " + std::to_string(rep.items.size()) + " criteria failed"
                       : std::string("all criteria passed"))
            << "\n";
  return failed ? 1 : 0;
}
