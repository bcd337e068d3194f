// skt-lab: Hermitian-geometric invariants on almost abelian Lie algebras.
//
//   skt-lab check    --notation "(f16, p*f26, p*f36, p*f46, p*f56, 0)" --param p=1
//   skt-lab classify --notation "..." [--param k=v ...] [--J J.json]
//   skt-lab catalog-verify --table 2
//   skt-lab sweep    --notation "..." --range "p=-1:1:1/8"
//
// Structure equations list (df^1, ..., df^n); f16 means f^1 ^ f^6 (use
// f[i,j] for dimensions above 9). J defaults to the canonical complex
// structure (J f_1 = f_2n, J f_2 = f_3, ...), the metric to the identity.

#include <iostream>

#include "CLI11.hpp"
#include "skt/commands.hpp"

namespace {

skt::Bindings parse_params(const std::vector<std::string>& kvs) {
  skt::Bindings b;
  for (const auto& kv : kvs) {
    auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--param expects name=value, got '" + kv + "'");
    b[kv.substr(0, eq)] = skt::parse_rat(kv.substr(eq + 1));
  }
  return b;
}

std::vector<skt::SweepRange> parse_ranges(const std::vector<std::string>& specs) {
  std::vector<skt::SweepRange> out;
  for (const auto& spec : specs) {
    auto eq = spec.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--range expects name=from:to:step, got '" + spec + "'");
    std::string rest = spec.substr(eq + 1);
    auto c1 = rest.find(':');
    auto c2 = rest.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw CLI::ValidationError("--range expects name=from:to:step, got '" + spec + "'");
    skt::SweepRange r;
    r.param = spec.substr(0, eq);
    r.from = skt::parse_rat(rest.substr(0, c1));
    r.to = skt::parse_rat(rest.substr(c1 + 1, c2 - c1 - 1));
    r.step = skt::parse_rat(rest.substr(c2 + 1));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hermitian invariants and twisted SKT decision procedures on Lie algebras"};
  app.require_subcommand(1);

  skt::Config config;
  std::vector<std::string> params, ranges;
  skt::CheckArgs args;
  int table = 2;
  std::string catalog_path;

  auto add_common = [&](CLI::App* cmd, bool with_input) {
    cmd->add_option("--tol", config.tol, "absolute tolerance for float spectra");
    cmd->add_option("--seed", config.seed, "seed for randomized sampling");
    cmd->add_option("--samples", config.samples, "generic samples per parameter");
    cmd->add_flag("--json", config.json, "emit JSON");
    cmd->add_flag("--md", config.markdown, "emit markdown");
    cmd->add_option("--threads", config.threads, "worker pool size (or SKT_LAB_THREADS)");
    if (with_input) {
      cmd->add_option("--notation", args.notation, "structure equations, e.g. (f16, 0, ..., 0)");
      cmd->add_option("--input", args.input_path, "file containing the structure equations");
      cmd->add_option("--param", params, "parameter binding name=value (repeatable)");
      cmd->add_option("--J", args.j_path, "JSON matrix file with the complex structure");
      cmd->add_option("--metric", args.metric_path, "JSON matrix file with the metric");
      cmd->add_option("--name", args.name, "label used in reports");
    }
  };

  CLI::App* check = app.add_subcommand("check", "metric-fixed verdict for one structure");
  add_common(check, true);
  CLI::App* classify = app.add_subcommand("classify", "metric-free existence classification");
  add_common(classify, true);
  CLI::App* verify = app.add_subcommand("catalog-verify", "reverify the bundled classification");
  add_common(verify, false);
  verify->add_option("--table", table, "1 (alpha families), 2 or 3")->check(CLI::Range(1, 3));
  verify->add_option("--catalog", catalog_path, "catalog JSON file (default: bundled)");
  CLI::App* sweep = app.add_subcommand("sweep", "flag grid over a parameter lattice");
  add_common(sweep, true);
  sweep->add_option("--range", ranges, "lattice spec name=from:to:step (repeatable)");

  CLI11_PARSE(app, argc, argv);

  try {
    args.params = parse_params(params);
    skt::CommandResult res;
    if (check->parsed()) res = skt::cmd_check(args, config);
    if (classify->parsed()) res = skt::cmd_classify(args, config);
    if (verify->parsed()) res = skt::cmd_catalog_verify(table, config, catalog_path);
    if (sweep->parsed()) res = skt::cmd_sweep(args, parse_ranges(ranges), config);
    std::cout << res.output;
    return res.exit_code;
  } catch (const skt::ParseError& ex) {
    std::cerr << "parse error: " << ex.what() << "\n";
    return 3;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
}
