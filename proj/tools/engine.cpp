#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pearl/commands.hpp"
#include "pearl/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Pearl complex and circle-bundle sequence engine"};
  app.require_subcommand(1);

  std::string file;
  std::string window;
  pearl::CommandOptions options;

  const std::pair<const char*, const char*> commands[] = {
      {"check", "structural checks and expectations"},
      {"les", "long exact sequence of the bundle"},
      {"euler", "Floer-Euler class and its comparisons"},
      {"product", "quantum product checks"},
      {"classical", "classical Gysin sequence (t = 0)"},
      {"periodicity", "2-periodicity and non-narrowness criteria"},
      {"fmt", "print the dataset in canonical form"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "dataset file (also looked up in $ENGINE_CORPUS_DIR)")->required();
    sub->add_flag("--json", options.json, "machine-readable output");
    if (std::string(name) == "les" || std::string(name) == "classical")
      sub->add_option("--window", window, "degree window a..b");
    if (std::string(name) == "les") sub->add_flag("--ambient", options.ambient, "ambient variant over Z2[q^-1, q]");
    if (std::string(name) == "fmt") sub->add_flag("--write", options.write, "rewrite the file in place");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : pearl::kExitInput;
  }

  if (!window.empty()) {
    try {
      options.window = pearl::parse_window(window);
    } catch (const pearl::SchemaError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return pearl::kExitInput;
    }
  }
  const auto* sub = app.get_subcommands().front();
  return pearl::run_command(sub->get_name(), file, options, std::cout, std::cerr);
}
