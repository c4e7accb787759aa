#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "freediv/cli/request.hpp"
#include "freediv/cli/runner.hpp"
#include "freediv/error.hpp"

namespace fs = std::filesystem;
using namespace freediv;
using namespace freediv::cli;

namespace {

struct Flags {
  std::string config;
  std::vector<std::string> vars;
  std::string f;
  std::vector<std::string> basis;
  std::vector<std::string> ops;
  std::string checks;
  std::string order;
  std::string product_f;
  std::vector<std::string> product_vars;
  std::vector<long> weights;
};

void add_request_flags(CLI::App* cmd, Flags& fl) {
  cmd->add_option("config", fl.config, "key = value request file");
  cmd->add_option("--vars", fl.vars, "variable names, comma separated")->delimiter(',');
  cmd->add_option("--f", fl.f, "defining polynomial");
  cmd->add_option("--basis", fl.basis, "candidate basis field (repeatable)");
  cmd->add_option("--op", fl.ops, "operator to test against Ann f^s (repeatable, may use s)");
  cmd->add_option("--checks", fl.checks, "comma separated check names, or all");
  cmd->add_option("--order", fl.order, "term order for printed bases")->check(CLI::IsMember({"degrevlex", "lex"}));
  cmd->add_option("--product-f", fl.product_f, "second factor for the product check");
  cmd->add_option("--product-vars", fl.product_vars, "its variables")->delimiter(',');
  cmd->add_option("--weights", fl.weights, "weights of the variables")->delimiter(',');
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw Error("cannot read " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AnalysisRequest make_request(const Flags& fl) {
  AnalysisRequest req;
  if (!fl.config.empty()) req = parse_config(read_file(fl.config));
  if (!fl.vars.empty()) req.vars = fl.vars;
  if (!fl.f.empty()) req.f = fl.f;
  if (!fl.basis.empty()) req.basis = fl.basis;
  if (!fl.ops.empty()) req.operators = fl.ops;
  if (!fl.checks.empty()) req.checks = parse_checks(fl.checks);
  if (!fl.order.empty()) req.order = fl.order;
  if (!fl.product_f.empty()) req.product_f = fl.product_f;
  if (!fl.product_vars.empty()) req.product_vars = fl.product_vars;
  if (!fl.weights.empty()) req.weights = fl.weights;
  return req;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"freediv: logarithmic vector fields, Koszul freeness and Spencer complexes of divisors"};
  app.require_subcommand(1);
  bool json_out = false, timings = false;
  Flags fl;

  auto* analyze = app.add_subcommand("analyze", "run checks on one divisor");
  add_request_flags(analyze, fl);
  analyze->add_flag("--json", json_out, "JSON report on stdout");
  analyze->add_flag("--timings", timings, "include per-check timings");

  std::string dir = FREEDIV_CORPUS_DIR;
  auto* corpus = app.add_subcommand("corpus", "run every request file of the bundled corpus");
  corpus->add_option("--dir", dir, "corpus directory");
  corpus->add_flag("--json", json_out, "JSON array of reports");

  std::string kind = "spencer_xi";
  auto* exp = app.add_subcommand("export-complex", "print a complex as JSON");
  add_request_flags(exp, fl);
  exp->add_option("--kind", kind, "koszul, koszul_xi, spencer_theta or spencer_xi");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (analyze->parsed()) {
      auto report = run(make_request(fl), RunOptions{timings});
      std::cout << (json_out ? report.dump(2) + "\n" : render_text(report));
    } else if (corpus->parsed()) {
      std::vector<fs::path> files;
      for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".toml") files.push_back(e.path());
      std::sort(files.begin(), files.end());
      nlohmann::json all = nlohmann::json::array();
      for (const auto& p : files) {
        auto report = run(parse_config(read_file(p)));
        report["input"]["file"] = p.filename().string();
        if (json_out) all.push_back(report);
        else std::cout << render_text(report) << "\n";
      }
      if (json_out) std::cout << all.dump(2) << "\n";
    } else if (exp->parsed()) {
      std::cout << export_complex(make_request(fl), kind).dump(2) << "\n";
    }
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const SquarefreeError& e) {
    std::cerr << "squarefree error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
