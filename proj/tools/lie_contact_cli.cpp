// lie-contact <subcommand> --config path.json [--out dir]

#include "lie_contact/cli_io.hpp"
#include "lie_contact/errors.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using namespace lie_contact;

  CLI::App app{"Contact characteristics on Lie groups: integrate, classify, draw."};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  for (const std::string& name : subcommands()) {
    CLI::App* sub = app.add_subcommand(name);
    auto* opt = sub->add_option("--config,-c", config_path, "problem config (JSON)");
    if (name != "verify") opt->required()->check(CLI::ExistingFile);
    sub->add_option("--out,-o", out_dir, "output directory (default: $LIE_CONTACT_OUT or .)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  ProblemConfig cfg;
  try {
    if (!config_path.empty()) cfg = load_config(config_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return run(name, cfg, resolve_output_dir(out_dir), std::cout);
}
