// Runs the ten pinned criteria and prints one line per criterion.
// Exit status is 0 only if every criterion passes.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <random>

#include "coverforge/suite/pinned.hpp"

using namespace coverforge;

int main(int argc, char** argv) {
  CLI::App app{"coverforge acceptance criteria"};
  std::uint64_t seed = 0;
  std::vector<int> only;
  bool verbose = false;
  pinned::Options opt;
  app.add_option("--seed", seed, "seed for the randomized property suites (default: random_device)");
  app.add_option("--only", only, "run only these criteria")->check(CLI::Range(1, 10));
  app.add_option("--cases", opt.property_cases, "cases per property suite")->capture_default_str();
  app.add_option("--integrality-bound", opt.integrality_bound, "degree bound D for criterion 2")
      ->capture_default_str();
  app.add_flag("-v,--verbose", verbose, "print every sub-check");
  CLI11_PARSE(app, argc, argv);
  if (app.count("--seed") == 0) seed = (static_cast<std::uint64_t>(std::random_device{}()) << 32) ^ std::random_device{}();
  opt.seed = seed;
  std::printf("seed %llu (replay with --seed %llu)\n", static_cast<unsigned long long>(seed),
              static_cast<unsigned long long>(seed));

  int failed = 0;
  for (const auto& c : pinned::criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    auto r = c.run(opt);
    auto st = r.status();
    const char* tag = st == Status::pass ? "PASS" : st == Status::fail ? "FAIL" : "INCONCLUSIVE";
    std::printf("criterion %2d  %-12s %-58s %8.3f s\n", r.id, tag, r.title.c_str(), r.seconds);
    for (const auto& sc : r.checks)
      if (verbose || sc.status != Status::pass)
        std::printf("    %s %s: %s\n", to_string(sc.status).c_str(), sc.name.c_str(), sc.detail.c_str());
    std::fflush(stdout);
    failed += st != Status::pass;
  }
  std::printf("%d criteria not passing\n", failed);
  return failed == 0 ? 0 : 1;
}
