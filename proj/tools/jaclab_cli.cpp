// jaclab: command-line front-end. Reports go to stdout (or --out), diagnostics to stderr.
// Exit codes: 0 ok, 1 internal or correctness failure, 2 parse/usage error,
// 3 degenerate input, 4 resource limit.

#include "jaclab/errors.hpp"
#include "jaclab/report/report.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using namespace jaclab;

namespace {

struct Options {
  RunConfig config;
  std::optional<int> order, decimals;
  std::string out, format = "json";
  std::string h, p, q, components, param;
  std::string from = "0", to = "1";
  int count = 11;
  std::vector<std::string> at;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty() || o.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + o.out + " for writing");
  f << text;
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

Rational rational_arg(const std::string& s) {
  try {
    return rational_from_string(s);
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed rational \"" + s + "\"", 0);
  }
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--order", o.order, "Truncation order (default 2*deg^2)")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o.config.seed, "Seed for randomized checks");
  cmd->add_option("--tower-depth", o.config.tower_depth, "Maximum number-field tower depth")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--out", o.out, "Output path (default stdout)");
  cmd->add_option("--decimals", o.decimals, "Add decimal renderings with N digits")->check(CLI::NonNegativeNumber);
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
}

int run(CLI::App& app, Options& o) {
  o.config.order = o.order;
  o.config.decimals = o.decimals;
  auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front();
  if (!sub) throw CLI::CallForHelp();
  std::string name = sub->get_name();
  if (name != "sample-curve" && o.format != "json")
    throw CLI::ValidationError("--format", "csv output is only available for sample-curve");
  if (name == "analyze-poly") emit(o, json_text(analyze_poly(o.h, o.config)));
  if (name == "analyze-map") emit(o, json_text(analyze_map(o.p, o.q, o.config)));
  if (name == "theorem2") emit(o, json_text(theorem2(o.components, o.config)));
  if (name == "sample-curve") {
    std::vector<Rational> ts;
    if (!o.at.empty()) {
      for (const auto& s : o.at) ts.push_back(rational_arg(s));
    } else {
      ts = parameter_grid(rational_arg(o.from), rational_arg(o.to), o.count);
    }
    auto rows = sample_curve(o.param, ts);
    emit(o, o.format == "csv" ? samples_csv(rows) : json_text(samples_json(rows)));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of polynomials and polynomial maps of the plane"};
  app.require_subcommand(1);
  Options o;

  auto* poly = app.add_subcommand("analyze-poly", "Fibration of a polynomial h(x, y)");
  poly->add_option("polynomial", o.h, "Polynomial in x, y")->required();
  add_common(poly, o);

  auto* map = app.add_subcommand("analyze-map", "Map (P, Q): C^2 -> C^2");
  map->add_option("P", o.p, "First coordinate")->required();
  map->add_option("Q", o.q, "Second coordinate")->required();
  add_common(map, o);

  auto* t2 = app.add_subcommand("theorem2", "Form check of curve components \"p(t)|q(t);...\"");
  t2->add_option("components", o.components, "Semicolon-separated parametrizations")->required();
  add_common(t2, o);

  auto* sc = app.add_subcommand("sample-curve", "Exact samples of a parametrization \"p(t)|q(t)\"");
  sc->add_option("curve", o.param, "Parametrization")->required();
  sc->add_option("--from", o.from, "First parameter value");
  sc->add_option("--to", o.to, "Last parameter value");
  sc->add_option("--count", o.count, "Number of samples")->check(CLI::PositiveNumber);
  sc->add_option("--at", o.at, "Explicit parameter values (overrides the grid)")->delimiter(',');
  add_common(sc, o);
  sc->callback([&] {
    if (sc->count("--format") == 0) o.format = "csv";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    return run(app, o);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DegenerateInput& e) {
    std::cerr << "degenerate input: " << e.what() << "\n";
    return 3;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 4;
  } catch (const CorrectnessAlarm& e) {
    std::cerr << "correctness alarm: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
