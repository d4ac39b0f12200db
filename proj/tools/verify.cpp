#include <CLI11.hpp>

#include <iostream>

#include "tanscroll/report.hpp"

int main(int argc, char** argv) {
  using namespace tanscroll;
  CLI::App app{"Exact verification of singular points on tangent scrolls in prime Fano threefolds"};
  std::string genus = "all";
  std::string format = "text";
  RunConfig config;
  long long trials = static_cast<long long>(config.trials);
  app.add_option("--genus", genus, "3..9 or all")->required();
  app.add_option("--trials", trials, "random draws per generic check")->capture_default_str();
  app.add_option("--seed", config.seed, "seed for every random stream")->capture_default_str();
  app.add_option("--series-order", config.series_order, "truncation order of power series")->capture_default_str();
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--out", config.out, "output file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    config.genus = parse_genus(genus);
    if (trials < 1) throw ConfigError("trials must be at least 1");
    config.trials = static_cast<std::size_t>(trials);
    config.format = format == "json" ? Format::json : Format::text;
    validate(config);
  } catch (const ConfigError& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return 2;
  }

  const RunReport report = run_suite(config, Execution::parallel);
  try {
    emit_report(report, config.format, config.out);
  } catch (const IoError& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return 3;
  }
  return report.overall() ? 0 : 1;
}
