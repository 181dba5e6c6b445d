#include "flood/cli.hpp"

#include <csignal>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "flood/atfree.hpp"
#include "flood/contraction.hpp"
#include "flood/error.hpp"
#include "flood/generators.hpp"
#include "flood/io.hpp"
#include "flood/oracle.hpp"
#include "flood/service.hpp"
#include "flood/solver.hpp"

namespace flood {

namespace {

struct InputArgs {
  std::string path;
  std::string format;

  InstanceFile load() const {
    return read_instance(path, format.empty() ? std::nullopt : std::optional(parse_format(format)));
  }
};

void add_input(CLI::App* cmd, InputArgs& in) {
  cmd->add_option("-i,--input", in.path, "Instance file")->required();
  cmd->add_option("--format", in.format, "json or grid (default: from extension)")
      ->check(CLI::IsMember({"json", "grid"}));
}

void print_witness(std::ostream& out, const AsteroidalTriple& t) { out << "witness " << t.to_string() << "\n"; }

int cmd_check(const InputArgs& in, std::ostream& out) {
  const InstanceFile inst = in.load();
  const auto at = find_asteroidal_triple(inst.graph);
  out << "atfree " << (at ? "false" : "true") << "\n";
  if (at) print_witness(out, *at);
  return kExitOk;
}

int cmd_solve(const InputArgs& in, std::optional<Vertex> source_opt, const std::string& method, bool emit,
              const std::string& rule, std::ostream& out, std::ostream& err) {
  const InstanceFile inst = in.load();
  const Vertex source = source_opt.value_or(inst.source.value_or(0));
  if (source >= inst.graph.n()) throw InvalidInput("source " + std::to_string(source) + " out of range");
  if (!is_connected(inst.graph)) throw InvalidInput("graph is not connected");

  SolveOptions opts;
  if (!rule.empty()) opts.rule = parse_delta_rule(rule);

  std::size_t optimum = 0;
  Strategy strategy;
  auto run_oracle = [&] {
    const OracleResult r = oracle_min_moves(inst.graph, source);
    optimum = *r.optimum;
    strategy = r.strategy;
  };

  if (method == "oracle") {
    run_oracle();
  } else {
    try {
      const SolveResult r = solve(inst.graph, source, opts);
      optimum = r.optimum;
      strategy = r.strategy;
      for (const auto& d : r.diagnostics) err << "note: " << d << "\n";
    } catch (const NotAtFree& e) {
      if (method == "poly") {
        err << "not AT-free\n";
        print_witness(out, e.witness());
        return kExitNotAtFree;
      }
      err << "note: not AT-free (" << e.witness().to_string() << "), using exhaustive search\n";
      run_oracle();
    }
  }
  out << optimum << "\n";
  if (emit) out << strategy.to_string() << "\n";
  return kExitOk;
}

int cmd_contract(const InputArgs& in, const std::string& output, std::ostream& out) {
  const InstanceFile inst = in.load();
  const Vertex source = inst.source.value_or(0);
  const Contraction c = contract_monochromatic(inst.graph, source);
  const std::string text = emit_json(c.graph, c.source);
  if (output.empty() || output == "-")
    out << text;
  else
    write_text_file(output, text);
  return kExitOk;
}

int cmd_gen(const GenSpec& spec, const std::string& output, std::ostream& out) {
  const Instance inst = restrict_to_component(generate(spec), 0);
  const std::string text = emit_json(inst.graph, inst.source);
  if (output.empty() || output == "-")
    out << text;
  else
    write_text_file(output, text);
  return kExitOk;
}

ServiceHost* active_host = nullptr;

void on_signal(int) {
  if (active_host) active_host->stop();
}

int cmd_serve(const std::string& host, int port, const std::string& state_file, std::ostream& out) {
  ServiceOptions opts;
  if (!state_file.empty()) opts.state_file = state_file;
  GameService service(opts);
  ServiceHost server(service);
  const int bound = server.bind(host, port);
  out << "listening on " << host << ":" << bound << std::endl;
  active_host = &server;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  server.listen();
  active_host = nullptr;
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Flood-It solver for AT-free graphs"};
  app.require_subcommand(1);

  InputArgs in;
  auto* check = app.add_subcommand("check", "Report whether the graph is AT-free");
  add_input(check, in);

  auto* solve_cmd = app.add_subcommand("solve", "Minimum number of moves");
  add_input(solve_cmd, in);
  std::optional<Vertex> source;
  std::string method = "auto";
  std::string rule;
  bool emit = false;
  solve_cmd->add_option("--source", source, "Source vertex (default: file's, else 0)");
  solve_cmd->add_option("--method", method, "auto, poly or oracle")->check(CLI::IsMember({"auto", "poly", "oracle"}));
  solve_cmd->add_option("--delta-rule", rule, "coverage, as-printed or transposed")
      ->check(CLI::IsMember({"coverage", "as-printed", "transposed"}));
  solve_cmd->add_flag("--emit-strategy", emit, "Print the strategy on a second line");

  auto* contract = app.add_subcommand("contract", "Collapse monochromatic components");
  add_input(contract, in);
  std::string output;
  contract->add_option("-o,--output", output, "Output file (default: stdout)");

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  GenSpec spec;
  std::string family;
  gen->add_option("--family", family, "interval, permutation, rejection or grid")
      ->required()
      ->check(CLI::IsMember({"interval", "permutation", "rejection", "grid"}));
  gen->add_option("--n", spec.n, "Vertices");
  gen->add_option("--rows", spec.rows, "Grid rows");
  gen->add_option("--cols", spec.cols, "Grid columns");
  gen->add_option("--colors", spec.colors, "Number of colours")->required();
  gen->add_option("--seed", spec.seed, "Seed")->required();
  gen->add_flag("--proper", spec.proper, "Proper colouring");
  gen->add_option("-o,--output", output, "Output file (default: stdout)");

  auto* serve = app.add_subcommand("serve", "Run the game server");
  int port = 8080;
  std::string host = "127.0.0.1";
  std::string state_file;
  serve->add_option("--port", port, "Port (0 picks one)");
  serve->add_option("--host", host, "Bind address");
  serve->add_option("--state-file", state_file, "Snapshot file for sessions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(in, out);
    if (solve_cmd->parsed()) return cmd_solve(in, source, method, emit, rule, out, err);
    if (contract->parsed()) return cmd_contract(in, output, out);
    if (gen->parsed()) {
      spec.family = parse_family(family);
      return cmd_gen(spec, output, out);
    }
    if (serve->parsed()) return cmd_serve(host, port, state_file, out);
  } catch (const OracleLimitExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitOracleLimit;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const InfeasibleSpec& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitUsage;
}

}  // namespace flood
