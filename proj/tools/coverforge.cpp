// coverforge: command-line front end.

#include <chrono>
#include <iostream>

#include "common.hpp"

using namespace coverforge;
using namespace coverforge::cli;

namespace {

std::string quote(const std::string& arg) {
  if (!arg.empty() && arg.find_first_of(" \t'\"$\\;|&()[]{}*?<>") == std::string::npos) return arg;
  std::string q = "'";
  for (char ch : arg) q += ch == '\'' ? std::string("'\\''") : std::string(1, ch);
  return q + "'";
}

int usage_error(const std::string& what) {
  std::cerr << "error: " << what << '\n';
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Building data, universal monoids and Hopf checks for diagonalizable covers"};
  app.name("coverforge");
  app.require_subcommand(1);
  std::string format = "text";
  bool strict = false;
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_flag("--strict", strict, "treat inconclusive verdicts as failures");

  Action action;
  add_monoid_commands(app, action);
  add_universal_commands(app, action);
  add_cocycle_commands(app, action);
  add_cover_commands(app, action);
  add_hopf_commands(app, action);
  add_kahler_commands(app, action);
  add_verify_command(app, action);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const Error& e) {
    return usage_error(e.what());
  }

  Report report;
  report.command = "coverforge";
  for (int k = 1; k < argc; ++k) report.command += " " + quote(argv[k]);
  const auto start = std::chrono::steady_clock::now();
  try {
    if (!action) return usage_error("no command selected");
    action(report);
  } catch (const ParseError& e) {
    return usage_error(e.what());
  } catch (const InvalidInput& e) {
    return usage_error(std::string("invalid input: ") + e.what());
  } catch (const CapabilityError& e) {
    return usage_error(e.what());
  } catch (const RingMismatch& e) {
    return usage_error(e.what());
  } catch (const NotFree& e) {
    report.fail("free", "the extension is not free", e.what());
  } catch (const BoundExceeded& e) {
    return usage_error(std::string(e.what()) + " (raise the corresponding bound)");
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  write_report(report, format == "json" ? Format::json : Format::text, std::cout);
  return exit_code(report, strict);
}
