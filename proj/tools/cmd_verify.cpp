// verify-paper: the pinned reproduction suite, criteria run concurrently.

#include <cstdio>
#include <future>

#include "common.hpp"
#include "coverforge/suite/pinned.hpp"

namespace coverforge::cli {

namespace {

struct VerifyOptions {
  std::vector<int> only;
  pinned::Options suite;
  bool sequential = false;
};

void verify_cmd(const VerifyOptions& o, Report& r) {
  std::vector<pinned::Criterion> chosen;
  for (const auto& c : pinned::criteria())
    if (o.only.empty() || std::find(o.only.begin(), o.only.end(), c.id) != o.only.end()) chosen.push_back(c);

  std::vector<pinned::CriterionResult> results;
  if (o.sequential) {
    for (const auto& c : chosen) results.push_back(c.run(o.suite));
  } else {
    std::vector<std::future<pinned::CriterionResult>> running;
    for (const auto& c : chosen) running.push_back(std::async(std::launch::async, c.run, o.suite));
    for (auto& f : running) results.push_back(f.get());
  }

  r.line("seed " + std::to_string(o.suite.seed) + ", " + std::to_string(o.suite.property_cases) +
         " cases per property suite, integrality bound " + std::to_string(o.suite.integrality_bound));
  r.line("");
  r.line(" id  status        seconds  budget  criterion");
  auto& table = r.data["criteria"] = nlohmann::ordered_json::array();
  for (const auto& c : results) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%3d  %-12s %8.3f %7.0f  %s", c.id, to_string(c.status()).c_str(), c.seconds,
                  c.budget_seconds, c.title.c_str());
    r.line(buf);
    for (const auto& s : c.checks)
      if (s.status != Status::pass) r.line("       " + to_string(s.status) + " " + s.name + ": " + s.detail);

    nlohmann::ordered_json e{{"id", c.id}, {"title", c.title}, {"status", to_string(c.status())},
                             {"budget_seconds", c.budget_seconds}};
    auto& checks = e["checks"] = nlohmann::ordered_json::array();
    for (const auto& s : c.checks) {
      nlohmann::ordered_json cj{{"name", s.name}, {"status", to_string(s.status)}, {"detail", s.detail}};
      if (s.bound) cj["bound"] = *s.bound;
      checks.push_back(std::move(cj));
    }
    table.push_back(std::move(e));

    const std::string id = "criterion-" + std::to_string(c.id);
    switch (c.status()) {
      case Status::pass: r.pass(id, c.title); break;
      case Status::fail: r.fail(id, c.title, c.witness()); break;
      case Status::inconclusive: r.inconclusive(id, c.title + ": " + c.witness(), c.bound().value_or(0)); break;
    }
  }
}

}  // namespace

void add_verify_command(CLI::App& app, Action& action) {
  auto o = slot<VerifyOptions>();
  auto* v = app.add_subcommand("verify-paper", "run the pinned reproduction suite and print a table");
  v->add_option("--only", o->only, "run only these criteria (1-10), comma-separated")
      ->delimiter(',')
      ->check(CLI::Range(1, 10));
  v->add_option("--seed", o->suite.seed, "seed of the randomized property suites")->capture_default_str();
  v->add_option("--cases", o->suite.property_cases, "cases per property suite")->capture_default_str();
  v->add_option("--integrality-bound", o->suite.integrality_bound, "largest degree bound D of the integrality search")
      ->capture_default_str();
  v->add_flag("--sequential", o->sequential, "run the criteria one after another");
  v->callback([&action, o] { action = [o](Report& r) { verify_cmd(*o, r); }; });
}

}  // namespace coverforge::cli
