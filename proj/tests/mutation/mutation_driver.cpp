// Usage: mutation_driver <mutant-cli> <check>...
// Passes when the mutant's verify run exits 1 and every named check fails
// with a counterexample.
#include <iostream>

#include <nlohmann/json.hpp>

#include "run_process.hpp"

using gldiff::testing::quote;
using gldiff::testing::run_process;

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: mutation_driver <cli> <check>...\n";
    return 2;
  }
  auto result = run_process(quote(argv[1]) + " verify --samples 60 --format json");
  if (result.exit_code != 1) {
    std::cerr << "expected exit 1, got " << result.exit_code << "\n";
    return 1;
  }
  nlohmann::json report;
  try {
    report = nlohmann::json::parse(result.out);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "unparseable report: " << e.what() << "\n";
    return 1;
  }
  int missed = 0;
  for (int a = 2; a < argc; ++a) {
    std::string name = argv[a];
    bool killed = false;
    for (const auto& c : report["checks"])
      if (c["name"] == name) killed = !c["passed"].get<bool>() && c["counterexample"].is_string();
    std::cout << (killed ? "killed   " : "SURVIVED ") << name << "\n";
    if (!killed) ++missed;
  }
  return missed == 0 ? 0 : 1;
}
