// Command-line front end: one query per invocation, JSON in and JSON out.
//
//   pospart gordan <<< '{"points":[[1,0],[-1,0]]}'
//   pospart facets --file arrangement.json
//
// Exit status: 0 success, 1 domain error, 2 malformed input.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "pospart/interchange.hpp"

int main(int argc, char **argv) {
  namespace ix = pospart::interchange;

  CLI::App app{"Exact queries on positive parts of Z^d"};
  std::string command;
  std::string file;
  bool canon = false;
  bool list = false;
  app.add_option("command", command, "query to run (see --list)");
  app.add_option("--file", file, "read the JSON input from this file");
  app.add_flag("--canon", canon,
               "also emit the input with positive parts canonicalised");
  app.add_flag("--list", list, "print the available commands");
  CLI11_PARSE(app, argc, argv);

  if (list) {
    for (const auto &name : ix::commands())
      std::cout << name << '\n';
    return ix::kSuccess;
  }
  if (command.empty()) {
    std::cerr << app.help();
    return ix::kMalformed;
  }

  std::string text;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) {
      std::cerr << "cannot open " << file << '\n';
      return ix::kMalformed;
    }
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else if (command != "rank1-enum") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  }
  return ix::run_text(command, text, canon, std::cout);
}
