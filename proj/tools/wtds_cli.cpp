// wtds: kernelize, solve, verify and generate weighted tree deletion set
// instances.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wtds/wtds.hpp"

namespace {

using namespace wtds;

constexpr int kParseError = 2;

Instance load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_instance(in);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int cmd_kernelize(const std::string& input, const std::string& output, const std::string& report_path, bool quiet) {
  Instance inst;
  try {
    inst = load(input);
  } catch (const ParseError& e) {
    std::cerr << input << ": " << e.what() << '\n';
    return kParseError;
  }

  const auto start = std::chrono::steady_clock::now();
  KernelReport rep;
  try {
    rep = kernelize(inst);
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (!report_path.empty()) write_text(report_path, to_json(rep, Timings{ms}).dump(2) + "\n");
  if (rep.decided) {
    if (!quiet) std::cout << "decided " << to_string(*rep.decided) << " (" << rep.decided_by << ")\n";
    return 1;
  }
  const std::string text = serialize_instance(rep.kernel);
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    write_text(output, text);
    if (!quiet)
      std::cout << "kernel: " << rep.kernel.graph.vertex_count() << " vertices, " << rep.kernel.graph.edge_count()
                << " edges, k=" << rep.kernel.k << " (input " << inst.graph.vertex_count() << " vertices)\n";
  }
  return 0;
}

int cmd_solve(const std::string& input, int limit) {
  Instance inst;
  try {
    inst = load(input);
  } catch (const ParseError& e) {
    std::cerr << input << ": " << e.what() << '\n';
    return kParseError;
  }
  OracleAnswer ans;
  try {
    ans = exact_tds(inst, limit);
  } catch (const OracleLimitExceeded& e) {
    std::cerr << e.what() << '\n';
    return 3;
  }
  std::cout << to_string(ans.decision);
  if (ans.witness) {
    std::cout << " weight " << *ans.optimum_weight << " delete {";
    const char* sep = "";
    for (VertexId v : ans.witness->deleted) {
      std::cout << sep << v.value;
      sep = " ";
    }
    std::cout << '}';
  }
  std::cout << '\n';
  return ans.decision == Decision::Yes ? 0 : 1;
}

int cmd_verify(const VerifyConfig& config, const std::string& report_path, bool quiet) {
  if (std::string err = config_error(config); !err.empty()) {
    std::cerr << "configuration error: " << err << '\n';
    return kParseError;
  }
  const VerifyResult result = run_verify(config);
  const Json report = to_json(result);
  if (!report_path.empty()) write_text(report_path, report.dump(2) + "\n");
  if (!quiet) {
    const Json& s = report["summary"];
    std::cout << s["instances"] << " instances, " << s["disagreements"] << " disagreements, " << s["kernels"]
              << " kernels, " << s["early_decisions"] << " early decisions, " << s["bound_checks"]
              << " bound checks\n";
    for (const Json& f : report["failures"])
      std::cout << "FAIL #" << f["index"] << " (" << f["family"].get<std::string>() << ")\n"
                << f["instance"].get<std::string>();
  }
  return result.disagreements() == 0 ? 0 : 1;
}

int cmd_gen(const GenSpec& spec, std::uint64_t count, std::uint64_t first, const std::string& dir) {
  for (std::uint64_t i = first; i < first + count; ++i) {
    const Generated g = generate_one(spec, i);
    std::ostringstream text;
    text << "c family " << to_string(g.family) << " seed " << spec.seed << " index " << i << '\n';
    if (g.planted_weight) text << "c planted weight " << *g.planted_weight << '\n';
    text << serialize_instance(g.instance);
    if (dir.empty()) {
      std::cout << text.str();
    } else {
      std::filesystem::create_directories(dir);
      write_text((std::filesystem::path(dir) / ("inst_" + std::to_string(i) + ".wtds")).string(), text.str());
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted tree deletion set kernelization"};
  app.require_subcommand(1);

  std::string input, output, report;
  bool quiet = false;
  auto* kern = app.add_subcommand("kernelize", "Reduce an instance to an equivalent kernel");
  kern->add_option("input", input, "Instance file")->required();
  kern->add_option("-o,--output", output, "Kernel file (default: standard output)");
  kern->add_option("--report", report, "JSON report path");
  kern->add_flag("--quiet", quiet, "No summary on standard output");

  int limit = 15;
  auto* solve = app.add_subcommand("solve", "Solve exactly by exhaustive search");
  solve->add_option("input", input, "Instance file")->required();
  solve->add_option("--oracle-limit", limit, "Largest vertex count to attempt");

  VerifyConfig vc;
  auto* verify = app.add_subcommand("verify", "Compare kernelize against the exact solver on generated instances");
  verify->add_option("--seed", vc.seed, "Campaign seed");
  verify->add_option("--samples", vc.samples, "Number of instances");
  verify->add_option("--max-n", vc.max_n, "Largest instance size");
  verify->add_option("--max-k", vc.max_k, "Largest budget");
  verify->add_option("--max-w", vc.max_w, "Largest vertex weight");
  verify->add_option("--oracle-limit", vc.oracle_limit, "Largest instance the exact solver accepts");
  verify->add_option("--threads", vc.threads, "Worker threads (0: all cores)");
  verify->add_option("--report", report, "JSON report path");
  verify->add_flag("--quiet", quiet, "No summary on standard output");

  GenSpec gs;
  std::string family = "mixed", dir;
  std::uint64_t count = 1, first = 0;
  auto* gen = app.add_subcommand("gen", "Write generated instances");
  gen->add_option("--family", family, "random, planted, theta, double-edge or mixed");
  gen->add_option("--seed", gs.seed, "Stream seed");
  gen->add_option("--count", count, "Number of instances");
  gen->add_option("--first", first, "Index of the first instance");
  gen->add_option("--min-n", gs.n_min, "Smallest vertex count");
  gen->add_option("--max-n", gs.n_max, "Largest vertex count");
  gen->add_option("--edge-prob", gs.edge_prob, "Edge probability");
  gen->add_option("--max-w", gs.w_max, "Largest weight");
  gen->add_option("--max-k", gs.k_max, "Largest budget");
  gen->add_option("--out-dir", dir, "Directory for inst_<index>.wtds files (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kParseError;
  }

  try {
    if (*kern) return cmd_kernelize(input, output, report, quiet);
    if (*solve) return cmd_solve(input, limit);
    if (*verify) return cmd_verify(vc, report, quiet);
    if (*gen) {
      gs.family = parse_family(family);
      return cmd_gen(gs, count, first, dir);
    }
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParseError;
  }
  return 0;
}
