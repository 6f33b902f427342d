// Acceptance suites AC1..AC10 at full size. Prints one PASS/FAIL line per
// criterion. Optional arguments: --quick, --jobs N, and suite ids.

#include <charconv>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "indcore/sweeps.hpp"

int main(int argc, char** argv) {
  indcore::AcceptanceConfig cfg;
  std::vector<std::string> ids;
  unsigned jobs = 1;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--quick") {
      cfg = indcore::AcceptanceConfig::quick();
    } else if (arg == "--jobs" && i + 1 < argc) {
      const std::string value = argv[++i];
      std::from_chars(value.data(), value.data() + value.size(), jobs);
    } else {
      ids.push_back(arg);
    }
  }
  cfg.jobs = jobs;
  if (ids.empty()) ids = indcore::acceptance_ids();

  bool all = true;
  auto print = [&](const indcore::SweepResult& r) {
    all = all && r.passed();
    std::cout << r.id << (r.id.size() < 4 ? "  " : " ") << (r.passed() ? "PASS" : "FAIL") << "  " << r.title
              << "  [" << r.tolerance << "; cases=" << r.cases << " failures=" << r.failures << "]\n";
    for (const auto& n : r.notes) std::cout << "      " << n << '\n';
    std::cout.flush();
  };
  try {
    indcore::run_acceptance(cfg, ids, print);
  } catch (const std::exception& e) {
    std::cout << "error: " << e.what() << '\n';
    return 2;
  }
  return all ? 0 : 1;
}
