// Command-line front end: recognize, decompose, color, verify, chi,
// generate, membership.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "isk4col/coloring.hpp"
#include "isk4col/errors.hpp"
#include "isk4col/generators.hpp"
#include "isk4col/io.hpp"
#include "isk4col/patterns.hpp"
#include "isk4col/pipeline.hpp"
#include "isk4col/recognition.hpp"

using namespace isk4col;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kNegative = 1, kMalformed = 2, kBudget = 3, kClassification = 4 };

std::size_t default_budget() {
  if (const char* env = std::getenv("ISK4COL_BUDGET")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    std::cerr << "warning: ignoring ISK4COL_BUDGET='" << env << "'\n";
  }
  return 22;
}

struct Common {
  std::string format;
  Graph load(const std::string& path) const {
    std::optional<GraphFormat> f;
    if (!format.empty()) {
      f = format_from_string(format);
      if (!f) throw MalformedInput("unknown format '" + format + "'");
    }
    return read_graph_file(path, f);
  }
};

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

Isk4Options oracle_options(std::size_t budget, std::uint64_t seed = 0) {
  Isk4Options o;
  o.budget = budget;
  o.seed = seed;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decomposition and 3-coloring of {ISK4, diamond, bowtie}-free graphs"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--format", common.format, "input format: dimacs or json (default: by extension)");

  std::string file;
  std::string cert_file;
  int jobs = 1;
  bool check_membership = false;
  std::size_t budget = default_budget();
  int chi_budget = 20;
  std::string kind;
  std::uint64_t seed = 0;
  int size = 10;
  std::string out_format = "dimacs";

  auto* recognize = app.add_subcommand("recognize", "classify a basic graph");
  recognize->add_option("file", file)->required();
  auto* decompose = app.add_subcommand("decompose", "clique cutset decomposition tree");
  decompose->add_option("file", file)->required();
  decompose->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  auto* color = app.add_subcommand("color", "3-color a class member and print the certificate");
  color->add_option("file", file)->required();
  color->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  color->add_flag("--verify-membership", check_membership, "run the membership oracle first");
  color->add_option("--budget", budget, "exact oracle vertex budget");
  auto* verify = app.add_subcommand("verify", "check a certificate against a graph");
  verify->add_option("graph", file)->required();
  verify->add_option("cert", cert_file)->required();
  auto* chi = app.add_subcommand("chi", "exact chromatic number");
  chi->add_option("file", file)->required();
  chi->add_option("--budget", chi_budget, "largest vertex count attempted");
  auto* generate = app.add_subcommand("generate", "emit a generated graph");
  generate->add_option("--kind", kind, "sp, line-cubic, line-cubic-twice, glue-vertex, glue-edge, diamond, bowtie, isk4")
      ->required();
  generate->add_option("--seed", seed);
  generate->add_option("--size", size);
  generate->add_option("--out-format", out_format, "dimacs or json");
  auto* membership = app.add_subcommand("membership", "decide membership in the class");
  membership->add_option("file", file)->required();
  membership->add_option("--budget", budget, "exact oracle vertex budget");
  membership->add_option("--seed", seed, "seed of the bounded search");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kMalformed;
  }

  try {
    if (*recognize) {
      Graph g = common.load(file);
      auto v = classify_basic(g);
      print(to_json(v));
      return v.branch == Branch::unclassified ? kNegative : kOk;
    }
    if (*decompose) {
      print(to_json(build_clique_tree(common.load(file), jobs)));
      return kOk;
    }
    if (*color) {
      Graph g = common.load(file);
      if (check_membership) {
        auto report = verify_membership(g, oracle_options(budget));
        if (report.verdict == Verdict::nonmember) {
          std::cerr << "input is not a class member\n";
          print(to_json(report));
          return kNegative;
        }
        if (report.verdict == Verdict::unknown) {
          std::cerr << "membership undecided within budget\n";
          return kBudget;
        }
      }
      PipelineOptions opts;
      opts.jobs = jobs;
      auto cert = color_class_member(g, opts);
      std::cerr << "colored " << g.order() << " vertices with " << cert.palette << " colors\n";
      print(to_json(cert));
      return kOk;
    }
    if (*verify) {
      Graph g = common.load(file);
      std::ifstream in(cert_file);
      if (!in) throw MalformedInput("cannot open " + cert_file);
      json j;
      try {
        in >> j;
      } catch (const json::exception& e) {
        throw MalformedInput(cert_file + ": " + e.what());
      }
      bool ok = verify_certificate(g, certificate_from_json(j));
      print(json{{"valid", ok}});
      return ok ? kOk : kNegative;
    }
    if (*chi) {
      auto r = chi_exact(common.load(file), chi_budget);
      std::cout << r.chi << '\n';
      return kOk;
    }
    if (*generate) {
      Graph g;
      if (kind == "sp") {
        g = gen_series_parallel(seed, size);
      } else if (kind == "line-cubic" || kind == "line-cubic-twice") {
        LineOfCubicOptions o;
        o.one_edge_twice = kind == "line-cubic-twice";
        o.oracle_budget = budget;
        g = gen_line_of_subdivided_cubic(seed, random_cubic(seed, size), o);
      } else if (kind == "glue-vertex" || kind == "glue-edge") {
        std::vector<Graph> parts{prism_graph(), cycle_graph(5), gen_series_parallel(seed, std::max(size, 2))};
        g = gen_glue(seed, parts, kind == "glue-vertex" ? GlueMode::vertex : GlueMode::edge, 64, budget);
      } else if (auto p = pattern_from_string(kind)) {
        g = gen_nonmember(seed, *p, size);
      } else {
        throw MalformedInput("unknown generator kind '" + kind + "'");
      }
      if (out_format == "json") {
        print(graph_to_json(g));
      } else {
        write_dimacs(std::cout, g);
      }
      return kOk;
    }
    if (*membership) {
      auto report = verify_membership(common.load(file), oracle_options(budget, seed));
      print(to_json(report));
      if (report.verdict == Verdict::unknown) return kBudget;
      return report.verdict == Verdict::member ? kOk : kNegative;
    }
  } catch (const MalformedInput& e) {
    std::cerr << "malformed input: " << e.what() << '\n';
    return kMalformed;
  } catch (const ContractViolation& e) {
    std::cerr << "precondition failed: " << e.what() << '\n';
    return kMalformed;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const ClassificationFailure& e) {
    std::cerr << json{{"error", e.what()}, {"subgraph", json::parse(e.subgraph())}}.dump() << '\n';
    return kClassification;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kClassification;
  }
  return kOk;
}
