// cubix: command-line front end for the cube complex library.

#include <iostream>
#include <map>
#include <utility>
#include <string>

#include <CLI11.hpp>

#include "cubix/cli/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Cube complexes, wallspaces and their duals"};
  app.set_version_flag("--version", std::string("cubix ") + CUBIX_VERSION_STRING);

  cubix::cli::Manifest m;
  std::string verb_help = "one of:";
  for (const auto& v : cubix::cli::verbs()) verb_help += " " + v;
  app.add_option("verb", m.command, verb_help)->required();

  std::string complex, wallspace, action, partition, output;
  app.add_option("--complex", complex, "complex file (may carry an interior: line)");
  app.add_option("--wallspace", wallspace, "wallspace file");
  app.add_option("--action", action, "action file, read against --complex");
  app.add_option("--partition", partition, "wall partition file for decompose");
  app.add_option("--out", output, "directory for payloads, report.txt and report.json");
  app.add_flag("--dot", m.dot, "also emit DOT graphs");

  const std::pair<const char*, const char*> verb_options[] = {
      {"subset", "comma-separated point or vertex names (restrict, embed)"},
      {"walls", "comma-separated wall ids (quotient)"},
      {"from", "source vertex (distance)"},
      {"to", "target vertex (distance)"},
      {"generator", "generator name (axis)"},
      {"kind", "grid, torus, star, staircase, ladder, random-wallspace or tree (fixture)"},
      {"params", "comma-separated integers (fixture)"},
      {"seed", "seed for the random fixtures"},
      {"max-length", "word length bound for inversion search (subdivide)"}};
  std::map<std::string, std::string> values;
  for (const auto& [name, help] : verb_options) app.add_option(std::string("--") + name, values[name], help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(cubix::cli::ExitCode::Usage);
  }

  if (!complex.empty()) m.inputs["complex"] = complex;
  if (!wallspace.empty()) m.inputs["wallspace"] = wallspace;
  if (!action.empty()) m.inputs["action"] = action;
  if (!partition.empty()) m.inputs["partition"] = partition;
  if (!output.empty()) m.output = output;
  for (const auto& [name, value] : values) {
    if (app.count("--" + name) > 0) m.options[name] = value;
  }
  return cubix::cli::run(m, std::cout, std::cerr);
}
