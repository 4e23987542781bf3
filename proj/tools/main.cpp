// horoclif command line tool: spinor -> horosphere / flag / lambda pipelines
// plus seeded property verification, all with reproducible 17-digit output.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "horoclif/errors.hpp"
#include "horoclif/hyperbolic.hpp"
#include "horoclif/json_io.hpp"
#include "horoclif/lambda.hpp"
#include "horoclif/matrix.hpp"
#include "horoclif/minkowski.hpp"
#include "horoclif/multivector.hpp"
#include "horoclif/rng.hpp"
#include "horoclif/spinor.hpp"
#include "horoclif/verify.hpp"

namespace {

using namespace horoclif;

struct Options {
  int n = 2;
  std::uint64_t seed = 1;
  int samples = 100;
  double tol = 0.0;
  std::string format = "json";
  std::string input = "-";
  std::string kind = "spinor";
};

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--n", opt.n, "Number of Clifford generators");
  cmd->add_option("--seed", opt.seed, "PRNG seed");
  cmd->add_option("--samples", opt.samples, "Sample count");
  cmd->add_option("--tol", opt.tol, "Residual tolerance override");
  cmd->add_option("--format", opt.format, "Output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--input", opt.input, "Input file, or - for stdin");
}

std::string read_input(const Options& opt) {
  if (opt.input == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(opt.input);
  if (!f) throw DomainError("cannot open input file", 0.0);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void emit(const Options& opt, const std::string& json) {
  if (opt.format == "csv")
    std::cout << json_to_csv(json);
  else
    std::cout << json << "\n";
}

int run_horosphere(const Options& opt) {
  const Spinor k = parse_spinor(read_input(opt));
  emit(opt, json_horosphere(horosphere(k)));
  return 0;
}

int run_flags(const Options& opt) {
  const Spinor k = parse_spinor(read_input(opt));
  emit(opt, json_multiflag(multiflag(k)));
  return 0;
}

int run_lambda(const Options& opt) {
  const std::vector<Spinor> ks = parse_spinors(read_input(opt));
  if (ks.empty()) throw DomainError("need at least one spinor", 0.0);
  emit(opt, json_lambda_matrix(lambda_matrix(ks)));
  return 0;
}

int run_ptolemy(const Options& opt) {
  const std::vector<Spinor> ks = parse_spinors(read_input(opt));
  if (ks.size() != 4)
    throw DomainError("ptolemy needs exactly four spinors", static_cast<double>(ks.size()));
  const double threshold = opt.tol > 0.0 ? opt.tol : 1e-8;
  const double resid = ptolemy_residual(ks[0], ks[1], ks[2], ks[3]);
  const double cond = pair_conditioning(ks);
  emit(opt, json_relation_report("ptolemy", resid, cond, resid < threshold));
  return resid < threshold ? 0 : 1;
}

int run_random(const Options& opt) {
  if (opt.n < 0 || opt.n > dim_cap())
    throw DomainError("dimension out of range", opt.n);
  if (opt.samples < 1) throw DomainError("samples must be positive", opt.samples);
  Rng rng(opt.seed);
  if (opt.kind == "matrix") {
    if (opt.samples == 1) {
      emit(opt, json_matrix(random_sl2(opt.n, rng)));
      return 0;
    }
    std::string out = "{\"matrices\":[";
    for (int i = 0; i < opt.samples; ++i) {
      if (i) out += ",";
      out += json_matrix(random_sl2(opt.n, rng));
    }
    out += "]}";
    emit(opt, out);
    return 0;
  }
  if (opt.samples == 1) {
    emit(opt, json_spinor(random_spinor(opt.n, rng)));
    return 0;
  }
  std::string out = "{\"spinors\":[";
  for (int i = 0; i < opt.samples; ++i) {
    if (i) out += ",";
    out += json_spinor(random_spinor(opt.n, rng));
  }
  out += "]}";
  emit(opt, out);
  return 0;
}

int run_verify(const Options& opt) {
  if (opt.n < 0 || opt.n > dim_cap())
    throw DomainError("dimension out of range", opt.n);
  if (opt.samples < 1) throw DomainError("samples must be positive", opt.samples);
  VerifyConfig cfg;
  cfg.n = opt.n;
  cfg.seed = opt.seed;
  cfg.samples = opt.samples;
  cfg.tol = opt.tol;
  const std::vector<SuiteResult> results = ::horoclif::run_verify(cfg);
  bool all_pass = true;
  std::string out = "{\"n\":" + std::to_string(cfg.n) +
                    ",\"seed\":" + std::to_string(cfg.seed) +
                    ",\"samples\":" + std::to_string(cfg.samples) + ",\"suites\":[";
  for (std::size_t i = 0; i < results.size(); ++i) {
    const SuiteResult& r = results[i];
    if (!r.pass) all_pass = false;
    if (i) out += ",";
    out += "{\"module\":\"" + r.module + "\",\"name\":\"" + r.name +
           "\",\"samples\":" + std::to_string(r.samples) +
           ",\"max_residual\":" + format_double(r.max_residual) +
           ",\"threshold\":" + format_double(r.threshold) +
           ",\"pass\":" + (r.pass ? "true" : "false");
    if (!r.detail.empty()) {
      std::string esc;
      for (char c : r.detail) {
        if (c == '"' || c == '\\') esc += '\\';
        esc += c;
      }
      out += ",\"detail\":\"" + esc + "\"";
    }
    out += "}";
  }
  out += "],\"pass\":";
  out += all_pass ? "true" : "false";
  out += "}";
  emit(opt, out);
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clifford spinor / horosphere correspondence toolkit"};
  app.require_subcommand(1);

  Options opt;
  CLI::App* c_horo = app.add_subcommand("horosphere", "Decorated horosphere of a spinor");
  CLI::App* c_lambda = app.add_subcommand("lambda", "Pairwise lambda length matrix");
  CLI::App* c_ptolemy = app.add_subcommand("ptolemy", "Ptolemy relation report for four spinors");
  CLI::App* c_flags = app.add_subcommand("flags", "Null multiflag of a spinor");
  CLI::App* c_verify = app.add_subcommand("verify", "Run the seeded property suites");
  CLI::App* c_random = app.add_subcommand("random", "Emit seeded random spinors or matrices");
  for (CLI::App* c : {c_horo, c_lambda, c_ptolemy, c_flags, c_verify, c_random})
    add_common(c, opt);
  c_random->add_option("--kind", opt.kind, "What to generate: spinor or matrix")
      ->check(CLI::IsMember({"spinor", "matrix"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (c_horo->parsed()) return run_horosphere(opt);
    if (c_lambda->parsed()) return run_lambda(opt);
    if (c_ptolemy->parsed()) return run_ptolemy(opt);
    if (c_flags->parsed()) return run_flags(opt);
    if (c_verify->parsed()) return run_verify(opt);
    if (c_random->parsed()) return run_random(opt);
  } catch (const Degenerate& e) {
    std::cerr << json_error(e) << "\n";
    return 3;
  } catch (const SharedCenter& e) {
    std::cerr << json_error(e) << "\n";
    return 3;
  } catch (const NonInvertible& e) {
    std::cerr << json_error(e) << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << json_error(e) << "\n";
    return 2;
  }
  return 0;
}
