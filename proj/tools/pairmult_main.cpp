// Batch runner for session files.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pairmult/error.hpp"
#include "session/runner.hpp"

using namespace pairmult;
using namespace pairmult::session;

int main(int argc, char** argv) {
  CLI::App app{"pairmult: multiplicities of pairs of modules, batch session runner"};
  std::string input = "-";
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> n_max;
  std::optional<std::string> field;
  std::optional<std::uint64_t> max_colength;
  bool json = false;
  bool canonical = false;
  unsigned jobs = 1;
  app.add_option("session", input, "Session file, or - for stdin");
  app.add_option("--seed", seed, "Seed of the generic-scalar streams");
  app.add_option("--nmax", n_max, "Largest power used for multiplicities");
  app.add_option("--field", field, "Coefficient field, QQ or FP:<p>");
  app.add_flag("--json", json, "One JSON object per task");
  app.add_option("--max-colength", max_colength, "Abort staircases larger than this");
  app.add_option("--jobs", jobs, "Tasks run concurrently")->check(CLI::PositiveNumber);
  app.add_flag("--canonical", canonical, "Print the canonical session text instead of running it");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParse;
  }

  std::stringstream buf;
  if (input == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(input);
    if (!in) {
      std::cerr << "cannot open " << input << "\n";
      return kExitParse;
    }
    buf << in.rdbuf();
  }

  Overrides ov;
  ov.seed = seed;
  ov.n_max = n_max;
  if (json) ov.json = true;
  Session s;
  try {
    if (field) ov.field = parse_field(*field);
    s = parse_session(buf.str(), ov);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  }
  if (canonical) {
    std::cout << serialize_session(s);
    return kExitOk;
  }
  if (max_colength) {
    auto limits = kernel_limits();
    limits.max_colength = *max_colength;
    set_kernel_limits(limits);
  }
  const auto results = run_session(s, jobs);
  std::cout << render(s, results);
  return exit_code(results);
}
