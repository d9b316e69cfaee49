#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "inerton/cli/config.hpp"
#include "inerton/cli/scenarios.hpp"

int main(int argc, char** argv) {
  using namespace inerton::cli;

  CLI::App app{"Particle and inerton cloud dynamics: sampling, integration, verification"};
  std::string scenario;
  std::string config_path;
  std::string out_dir;
  std::string format;
  app.add_option("scenario", scenario, "analytic | integrate | verify | figures | quantize")
      ->required()
      ->check(CLI::IsMember(scenario_names()));
  app.add_option("--config", config_path, "key = value configuration file")->required();
  app.add_option("--out", out_dir, "output directory (overrides output.dir)");
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  RunConfig cfg;
  try {
    cfg = load_config(config_path);
    if (!format.empty()) cfg.format = parse_format(format);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
  if (!out_dir.empty()) cfg.output_dir = out_dir;
  if (cfg.output_dir.empty()) {
    std::cerr << "config error: no output directory; pass --out or set output.dir\n";
    return kExitConfig;
  }
  return run_scenario(scenario, cfg, cfg.output_dir, std::cout, std::cerr);
}
