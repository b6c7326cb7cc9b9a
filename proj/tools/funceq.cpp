#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "funceq/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Coefficient asymptotics for Phi(z) = P(z) + Phi(Q(z))"};

  funceq::RunConfig config;
  std::string command = "analyze";
  std::string y = "2";
  std::string out;
  app.add_option("--spec", config.spec_path, "Spec file (P = ..., Q = ..., optional bracket = lo,hi)")
      ->required()
      ->check(CLI::ExistingFile);
  app.add_option("--command", command, "analyze | spectrum | kfuncs | exact | compare")
      ->check(CLI::IsMember({"analyze", "spectrum", "kfuncs", "exact", "compare"}));
  app.add_option("--y", y, "Line shift for the Fourier grid, or 'auto' to scan")->capture_default_str();
  app.add_option("--grid-n", config.grid_N, "Grid size (power of two)")->capture_default_str();
  app.add_option("--modes", config.modes_M, "Retained Fourier modes")->capture_default_str();
  app.add_option("--terms", config.terms_R, "Asymptotic terms K_1..K_R")->capture_default_str();
  app.add_option("--n-max", config.n_max, "Largest n for exact/compare")->capture_default_str();
  app.add_option("--samples", config.samples, "Samples per period for kfuncs")->capture_default_str();
  app.add_option("--out", out, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : funceq::kValidationFailure;
  }

  config.command = *funceq::parse_command(command);
  config.out_path = out;
  if (y == "auto") {
    config.y.reset();
  } else {
    try {
      config.y = std::stod(y);
    } catch (const std::exception&) {
      std::cerr << "error: --y expects a number or 'auto'\n";
      return funceq::kValidationFailure;
    }
  }
  return funceq::run(config, std::cout, std::cerr);
}
