// graphcoh: batch front end for the graph complex, SU(2) multiplicities and
// decorated-graph evaluation. Exit status: 0 ok, 1 validation failure, 2 usage.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "graphcoh/checks.hpp"
#include "graphcoh/complex.hpp"
#include "graphcoh/decorated.hpp"
#include "graphcoh/graph.hpp"
#include "graphcoh/spin.hpp"
#include "graphcoh/tensor.hpp"

using namespace graphcoh;
using nlohmann::json;

namespace {

struct RunConfig {
  std::string mode_name = "literal";
  bool connected = true;
  std::size_t cap = default_basis_cap();
  double tolerance = 1e-12;
  std::string out;
  std::string json_out;

  int order = 1;
  int degree = 0;
  std::string in;
  std::vector<std::string> tensors;
  std::string decorations;
  std::string spins;
  int power = 0;
  std::string suite = "all";
  int max_order = 3;

  SymmetryMode mode() const { return parse_symmetry_mode(mode_name); }
  ComplexOptions complex() const { return {connected, mode(), 3, cap}; }
  Grading grading() const { return {order, degree}; }
};

/// Validation failures: bad inputs or failed checks. Maps to exit status 1.
struct ValidationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string header(const std::string& command, const RunConfig& cfg) {
  std::ostringstream os;
  os << "# graphcoh " << command << " mode " << to_string(cfg.mode());
  return os.str();
}

std::vector<GraphSkeleton> read_input_graphs(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationFailure("cannot read " + path);
  }
  return read_graphs(in);
}

json graph_json(const GraphSkeleton& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({e.tail, e.head});
  }
  return {{"vertices", g.vertex_count()}, {"edges", edges}};
}

json cochain_json(const Cochain& c, const std::vector<GraphSkeleton>& basis) {
  json terms = json::array();
  for (const auto& [g, coef] : c.terms()) {
    const auto it = std::find(basis.begin(), basis.end(), g);
    terms.push_back({{"coefficient", to_fraction_string(coef)}, {"graph", it - basis.begin() + 1}});
  }
  return terms;
}

void write_blocks(std::ostream& os, const std::string& tag, const std::vector<GraphSkeleton>& graphs) {
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    os << "# " << tag << ' ' << k + 1 << '\n';
    write_graph(os, graphs[k]);
  }
}

std::vector<GraphSkeleton> canonicals(const std::vector<GraphClass>& classes) {
  std::vector<GraphSkeleton> out;
  for (const auto& c : classes) {
    out.push_back(c.canonical);
  }
  return out;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& os, json& js) {
  const auto classes = enumerate_graded(cfg.grading(), cfg.complex().enumeration());
  os << header("enumerate", cfg) << " order " << cfg.order << " degree " << cfg.degree << " connected "
     << (cfg.connected ? 1 : 0) << " count " << classes.size() << '\n';
  write_blocks(os, "class", canonicals(classes));
  json list = json::array();
  for (const auto& c : classes) {
    list.push_back(graph_json(c.canonical));
  }
  js["classes"] = list;
  return 0;
}

int cmd_delta(const RunConfig& cfg, std::ostream& os, json& js) {
  if (!cfg.in.empty()) {
    // delta of each input graph as written.
    os << header("delta", cfg) << " input " << cfg.in << '\n';
    json results = json::array();
    const auto graphs = read_input_graphs(cfg.in);
    for (std::size_t k = 0; k < graphs.size(); ++k) {
      const Cochain d = delta_of_skeleton(graphs[k], cfg.mode());
      std::vector<GraphSkeleton> images;
      for (const auto& [g, coef] : d.terms()) {
        images.push_back(g);
      }
      os << "# graph " << k + 1 << " terms " << d.size() << '\n';
      write_cochain(os, d, images);
      write_blocks(os, "term", images);
      json r = {{"graph", k + 1}, {"terms", cochain_json(d, images)}};
      r["images"] = json::array();
      for (const auto& g : images) {
        r["images"].push_back(graph_json(g));
      }
      results.push_back(r);
    }
    js["results"] = results;
    return 0;
  }
  const DeltaMatrix m = delta_matrix(cfg.grading(), cfg.complex());
  os << header("delta", cfg) << " order " << cfg.order << " degree " << cfg.degree << " connected "
     << (cfg.connected ? 1 : 0) << " rows " << m.codomain.size() << " cols " << m.domain.size() << " rank "
     << rank(m.entries) << '\n';
  write_triplets(os, m.entries);
  write_blocks(os, "domain", m.domain);
  write_blocks(os, "codomain", m.codomain);
  json triplets = json::array();
  for (const Triplet& t : m.entries.triplets()) {
    triplets.push_back({t.row + 1, t.col + 1, to_fraction_string(t.value)});
  }
  js["rows"] = m.codomain.size();
  js["cols"] = m.domain.size();
  js["rank"] = rank(m.entries);
  js["entries"] = triplets;
  return 0;
}

int cmd_cocycles(const RunConfig& cfg, std::ostream& os, json& js) {
  const auto domain = canonicals(enumerate_graded(cfg.grading(), cfg.complex().enumeration()));
  const auto basis = cocycle_basis(cfg.grading(), cfg.complex());
  os << header("cocycles", cfg) << " order " << cfg.order << " degree " << cfg.degree << " connected "
     << (cfg.connected ? 1 : 0) << " dimension " << basis.size() << '\n';
  json list = json::array();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    os << "# cocycle " << k + 1 << '\n';
    write_cochain(os, basis[k], domain);
    list.push_back(cochain_json(basis[k], domain));
  }
  write_blocks(os, "basis", domain);
  js["dimension"] = basis.size();
  js["cocycles"] = list;
  return 0;
}

int cmd_mult(const RunConfig& cfg, std::ostream& os, json& js) {
  const auto spins = parse_spin_list(cfg.spins);
  const Multiplicities m = cfg.power > 0 ? power_decompose(SpinRep(spins), cfg.power) : tensor_decompose(spins);
  os << format_multiplicities(m) << '\n';
  js["multiplicities"] = format_multiplicities(m);
  js["dimension"] = dimension(m);
  return 0;
}

int cmd_pairing(const RunConfig& cfg, std::ostream& os, json& js) {
  if (cfg.tensors.size() != 2) {
    throw CLI::ValidationError("--tensor", "pairing needs exactly two tensors");
  }
  const Value v = pairing(load_tensor(cfg.tensors[0]), load_tensor(cfg.tensors[1]));
  os << to_string(v) << '\n';
  js["value"] = to_string(v);
  return 0;
}

int cmd_eval(const RunConfig& cfg, std::ostream& os, json& js) {
  if (cfg.tensors.size() == 1 && !cfg.decorations.empty()) {
    throw CLI::ValidationError("--decorations", "give either one --tensor or --decorations");
  }
  if (cfg.tensors.size() != 1 && cfg.decorations.empty()) {
    throw CLI::ValidationError("--tensor", "eval needs one --tensor or --decorations");
  }
  const auto graphs = read_input_graphs(cfg.in);
  os << header("eval", cfg) << '\n';
  json rows = json::array();
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    std::optional<DecoratedGraph> dg;
    if (cfg.decorations.empty()) {
      dg.emplace(decorate_uniformly(graphs[k], load_tensor(cfg.tensors.front())));
    } else {
      std::ifstream in(cfg.decorations);
      if (!in) {
        throw ValidationFailure("cannot read " + cfg.decorations);
      }
      const auto base = std::filesystem::path(cfg.decorations).parent_path().string();
      dg.emplace(graphs[k], read_decorations(in, graphs[k].vertex_count(), base));
    }
    const Value v = evaluate(*dg);
    os << k + 1 << '\t' << to_string(v) << '\n';
    rows.push_back({{"graph", k + 1}, {"value", to_string(v)}});
  }
  js["values"] = rows;
  return 0;
}

int cmd_check(const RunConfig& cfg, std::ostream& os, json& js) {
  SuiteOptions opts;
  opts.max_order = cfg.max_order;
  opts.tolerance = cfg.tolerance;
  opts.cap = cfg.cap;
  std::vector<std::string> names = cfg.suite == "all" ? suite_names() : std::vector<std::string>{cfg.suite};
  os << "# graphcoh check modes literal,edge-renumbering max-order " << cfg.max_order << '\n';
  bool ok = true;
  json results = json::array();
  for (const auto& name : names) {
    const SuiteResult r = run_suite(name, opts);
    os << "suite " << r.name << ' ' << (r.passed ? "PASS" : "FAIL") << " checked " << r.checked << '\n';
    if (!r.passed) {
      os << "witness:\n" << r.witness << '\n';
      ok = false;
    }
    results.push_back({{"suite", r.name}, {"passed", r.passed}, {"checked", r.checked}, {"witness", r.witness}});
  }
  js["suites"] = results;
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph complex and decoration workbench"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;

  app.add_option("--mode", cfg.mode_name, "symmetry mode")
      ->check(CLI::IsMember({"literal", "edge-renumbering"}))
      ->capture_default_str();
  app.add_option("--cap", cfg.cap, "basis size cap (env GRAPHCOH_CAP)")->check(CLI::PositiveNumber);
  app.add_option("--tol", cfg.tolerance, "floating-point tolerance")->check(CLI::NonNegativeNumber);
  app.add_option("--out", cfg.out, "write the report here instead of stdout");
  app.add_option("--json", cfg.json_out, "also write a JSON mirror of the report");

  auto graded = [&](CLI::App* sub) {
    sub->add_option("--order", cfg.order, "ord = E - V")->required();
    sub->add_option("--degree", cfg.degree, "deg = 2E - 3V")->capture_default_str();
    sub->add_flag("--connected,!--disconnected", cfg.connected, "restrict to connected graphs")
        ->capture_default_str();
  };

  auto* enumerate = app.add_subcommand("enumerate", "nonzero graph classes in one bidegree");
  graded(enumerate);

  auto* delta = app.add_subcommand("delta", "coboundary matrix, or delta of the graphs in --in");
  delta->add_option("--order", cfg.order, "ord = E - V");
  delta->add_option("--degree", cfg.degree, "deg = 2E - 3V");
  delta->add_flag("--connected,!--disconnected", cfg.connected, "restrict to connected graphs");
  delta->add_option("--in", cfg.in, "graph file")->check(CLI::ExistingFile);

  auto* cocycles = app.add_subcommand("cocycles", "basis of the cocycle space");
  graded(cocycles);

  auto* mult = app.add_subcommand("mult", "Clebsch-Gordan multiplicities");
  mult->add_option("--spins", cfg.spins, "comma-separated spins, e.g. 1/2,1")->required();
  mult->add_option("--power", cfg.power, "decompose (sum of spins)^power instead")->check(CLI::PositiveNumber);

  auto* pair = app.add_subcommand("pairing", "full contraction of two tensors");
  pair->add_option("--tensor", cfg.tensors, "catalogue name or tensor file (twice)")->required();

  auto* eval = app.add_subcommand("eval", "contract decorated graphs");
  eval->add_option("--in", cfg.in, "graph file")->required()->check(CLI::ExistingFile);
  eval->add_option("--tensor", cfg.tensors, "tensor placed at every vertex");
  eval->add_option("--decorations", cfg.decorations, "decoration file")->check(CLI::ExistingFile);

  auto* check = app.add_subcommand("check", "run named validation suites");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  check->add_option("--suite", cfg.suite, "suite name")->check(CLI::IsMember(suites))->capture_default_str();
  check->add_option("--max-order", cfg.max_order, "bound on E - V")->check(CLI::PositiveNumber)->capture_default_str();

  try {
    app.parse(argc, argv);
    if (delta->parsed() && cfg.in.empty() && delta->count("--order") == 0) {
      throw CLI::RequiredError("--order or --in");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::ostringstream report;
  json js;
  js["command"] = app.get_subcommands().front()->get_name();
  js["mode"] = cfg.mode_name;
  int status = 0;
  try {
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "enumerate") status = cmd_enumerate(cfg, report, js);
    else if (name == "delta") status = cmd_delta(cfg, report, js);
    else if (name == "cocycles") status = cmd_cocycles(cfg, report, js);
    else if (name == "mult") status = cmd_mult(cfg, report, js);
    else if (name == "pairing") status = cmd_pairing(cfg, report, js);
    else if (name == "eval") status = cmd_eval(cfg, report, js);
    else if (name == "check") status = cmd_check(cfg, report, js);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  if (cfg.out.empty()) {
    std::cout << report.str();
  } else {
    std::ofstream(cfg.out) << report.str();
  }
  if (!cfg.json_out.empty()) {
    js["status"] = status;
    std::ofstream(cfg.json_out) << js.dump(2) << '\n';
  }
  return status;
}
