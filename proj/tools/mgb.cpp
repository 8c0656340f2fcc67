// mgb: brackets of weighted marked graphs, Jones polynomials of Euler codes,
// composition evaluation, verification and benchmarks.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli.hpp"

namespace {

std::string join_args(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    s += argv[i];
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace mgb;
  using namespace mgb::cli;

  CLI::App app{"Weighted marked-graph bracket toolkit"};
  app.require_subcommand(1);

  std::string engine_name = "auto";
  std::string format_name = "text";
  CommonOptions common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--engine", engine_name, "statesum, recursive or auto")
        ->check(CLI::IsMember({"statesum", "recursive", "auto"}));
    sub->add_option("--out", format_name, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", common.seed, "random seed");
    sub->add_option("--limit", common.limit, "largest graph the state sum may enumerate");
  };

  std::string graph_path;
  auto* bracket_cmd = app.add_subcommand("bracket", "bracket polynomial of a graph file");
  bracket_cmd->add_option("graph", graph_path, "graph file")->required();
  add_common(bracket_cmd);

  std::string code_path;
  auto* jones_cmd = app.add_subcommand("jones", "bracket, f polynomial and Jones polynomial");
  jones_cmd->add_option("code", code_path, "Euler code file")->required();
  add_common(jones_cmd);

  std::string f_path, h_path, cut = "a";
  auto* compose_cmd = app.add_subcommand("compose", "evaluate [F*H] through the weight triple");
  compose_cmd->add_option("f_graph", f_path, "graph file of F")->required();
  compose_cmd->add_option("h_graph", h_path, "graph file of H (no marked neighbors of the cut vertex)")->required();
  compose_cmd->add_option("--cut", cut, "label of the shared cut vertex");
  add_common(compose_cmd);

  VerifyOptions verify_opts;
  auto* verify_cmd = app.add_subcommand("verify", "run the property suite against the oracle");
  verify_cmd->add_option("--max-n", verify_opts.max_n, "exhaustive size bound");
  verify_cmd->add_option("--trials", verify_opts.trials, "random instances per property");
  verify_cmd->add_flag("--inject-fault", verify_opts.inject_fault,
                       "use a deliberately broken marked pivot (harness self-test)");
  add_common(verify_cmd);

  BenchOptions bench_opts;
  auto* bench_cmd = app.add_subcommand("bench", "time an engine on random graphs");
  bench_cmd->add_option("--n", bench_opts.n, "vertices per graph");
  bench_cmd->add_option("--trials", bench_opts.trials, "number of graphs");
  add_common(bench_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  common.engine = parse_engine(engine_name);
  common.format = format_name == "json" ? OutputFormat::json : OutputFormat::text;
  common.command_line = join_args(argc, argv);

  if (*bracket_cmd) return cmd_bracket(graph_path, common, std::cout, std::cerr);
  if (*jones_cmd) return cmd_jones(code_path, common, std::cout, std::cerr);
  if (*compose_cmd) return cmd_compose(f_path, h_path, cut, common, std::cout, std::cerr);
  if (*verify_cmd) return cmd_verify(verify_opts, common, std::cout, std::cerr);
  if (*bench_cmd) return cmd_bench(bench_opts, common, std::cout, std::cerr);
  return kInputError;
}
