#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "starlift/commands.hpp"

namespace {

struct CommandArgs {
  std::string config_path;
  std::string out_dir;
  std::int64_t precision = -1;
  std::int64_t seed = -1;
};

int run(const std::string& name, const CommandArgs& args) {
  std::ifstream f(args.config_path);
  if (!f) {
    std::cerr << "cannot open config file: " << args.config_path << "\n";
    return 2;
  }
  starlift::Json config;
  try {
    config = starlift::Json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "config is not valid JSON: " << e.what() << "\n";
    return 2;
  }
  if (args.precision >= 0) config["precision"] = args.precision;
  if (args.seed >= 0) config["seed"] = static_cast<std::uint64_t>(args.seed);
  std::string out_dir = args.out_dir;
  if (out_dir.empty()) {
    const char* env = std::getenv("STARLIFT_OUT_DIR");
    out_dir = env && *env ? env : ".";
  }
  try {
    return starlift::run_command(name, config, std::cout, out_dir);
  } catch (const starlift::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const starlift::PreconditionViolation& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Star products on truncated h-adic series: tables, validation, inversion, "
               "idempotent lifting and K0 experiments"};
  app.require_subcommand(1);

  const std::vector<std::string> names = {"moyal-table", "assoc-check", "invert",
                                          "lift-idempotent", "k0-experiment"};
  const std::vector<std::string> descriptions = {
      "print f*g for monomial pairs with a Poisson cross-check",
      "validate associativity of the configured star product on sample triples",
      "invert a truncated series, certifying a*b = b*a = 1",
      "lift a classical idempotent to a star-idempotent with certificate",
      "run the idempotent lifting and conjugacy experiment over a matrix corpus"};
  std::vector<CommandArgs> args(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    auto* sub = app.add_subcommand(names[i], descriptions[i]);
    sub->add_option("config", args[i].config_path, "JSON config file")->required();
    sub->add_option("--precision", args[i].precision, "override configured precision");
    sub->add_option("--seed", args[i].seed, "override configured seed");
    sub->add_option("--out", args[i].out_dir,
                    "report directory (default: $STARLIFT_OUT_DIR or '.')");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  for (std::size_t i = 0; i < names.size(); ++i)
    if (app.get_subcommand(names[i])->parsed()) return run(names[i], args[i]);
  return 2;
}
