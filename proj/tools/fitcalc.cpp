#include "fitshift/session.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using fitshift::Session;
using fitshift::SessionOptions;
using fitshift::Status;

namespace {

std::optional<std::pair<unsigned, unsigned>> parse_precision(const std::string& s) {
  if (s.empty()) return std::nullopt;
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw CLI::ValidationError("--precision", "expected k,N");
  try {
    return std::make_pair(static_cast<unsigned>(std::stoul(s.substr(0, comma))),
                          static_cast<unsigned>(std::stoul(s.substr(comma + 1))));
  } catch (const std::logic_error&) {
    throw CLI::ValidationError("--precision", "expected k,N");
  }
}

int run_lines(const SessionOptions& opts, std::istream& in, const std::filesystem::path& base) {
  Session s(opts, base);
  return static_cast<int>(s.run_stream(in, std::cout, std::cerr));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fitting ideals and shifted Fitting invariants over truncated group rings"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string precision;
  SessionOptions opts;
  app.add_option("--precision", precision, "override (k, N) as k,N");
  app.add_flag("--json", opts.json, "one JSON document per command");
  app.add_flag("--assume-nzd", opts.assume_nzd, "accept denominators that are not certified non-zero-divisors");
  app.add_option("--jobs", opts.jobs, "worker threads for minor enumeration")->check(CLI::PositiveNumber);

  std::string file;
  auto* run = app.add_subcommand("run", "run a session file ('-' for stdin)");
  run->add_option("file", file)->required();

  app.add_subcommand("verify-paper", "run the built-in regression suite");

  std::string data;
  auto* euler = app.add_subcommand("euler", "compare the two Euler-factor routes for a JSON data file");
  euler->add_option("file", data)->required()->check(CLI::ExistingFile);

  std::vector<std::string> commands;
  auto* exec = app.add_subcommand("exec", "run session commands given on the command line");
  exec->add_option("-c,--command", commands, "a session command (repeatable)")->required();

  try {
    app.parse(argc, argv);
    opts.precision = parse_precision(precision);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::Error& e) {
    app.exit(e);
    return 2;
  }

  if (run->parsed()) {
    if (file == "-") return run_lines(opts, std::cin, ".");
    std::ifstream in(file);
    if (!in) {
      std::cerr << "cannot open " << file << "\n";
      return 2;
    }
    return run_lines(opts, in, std::filesystem::path(file).parent_path());
  }
  std::stringstream script;
  if (exec->parsed()) {
    for (const auto& c : commands) script << c << "\n";
  } else if (euler->parsed()) {
    script << "euler " << data << "\n";
  } else {
    script << "verify-paper\n";
  }
  return run_lines(opts, script, ".");
}
