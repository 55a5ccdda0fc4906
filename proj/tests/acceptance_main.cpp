// Acceptance gate: runs every criterion and prints one PASS/FAIL line each.
// Exit code 0 iff all criteria pass.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "abchoose/acceptance.hpp"

int main(int argc, char** argv) {
  abchoose::AcceptanceOptions options;
  options.out = &std::cout;
  const char* env_workers = std::getenv("ABCHOOSE_WORKERS");
  if (env_workers) options.workers = std::max(1, std::atoi(env_workers));

  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    auto value = [&]() -> std::string {
      if (i + 1 >= argc) {
        std::cerr << arg << " needs a value\n";
        std::exit(2);
      }
      return argv[++i];
    };
    if (arg == "--seed") {
      options.seed = std::stoull(value());
    } else if (arg == "--workers") {
      options.workers = std::max(1, std::stoi(value()));
    } else if (arg == "--only") {
      std::string ids = value();
      size_t pos = 0;
      while (pos < ids.size()) {
        size_t next = ids.find(',', pos);
        if (next == std::string::npos) next = ids.size();
        options.only.push_back(std::stoi(ids.substr(pos, next - pos)));
        pos = next + 1;
      }
    } else {
      std::cerr << "usage: acceptance [--seed N] [--workers N] [--only 1,2]\n";
      return 2;
    }
  }

  std::cout << "seed " << options.seed << ", workers " << options.workers
            << "\n";
  auto results = abchoose::run_acceptance(options);
  int passed = 0;
  for (const auto& r : results) passed += r.pass ? 1 : 0;
  std::cout << passed << "/" << results.size() << " criteria passed\n";
  return abchoose::all_passed(results) ? 0 : 1;
}
