// dbal: distance-balance analysis of graphs and graph products.
//
//   dbal analyze  --g6 Bw | --edges FILE | --family path --n 4 | --g SOURCE
//   dbal product  cartesian|lexicographic|corona G H [--out FILE]
//   dbal verify   --check ID[,ID...] (--sweep SPEC | --g SOURCE [--h SOURCE]) [--l L]
//
// Exit codes: 0 ok, 1 counterexample, 2 input error, 3 not applicable
// (disconnected input to analyze, or a single instance whose hypothesis
// fails).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "dbal/dbal.hpp"
#include "dbal/graph_spec.hpp"
#include "dbal/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitInput = 2;
constexpr int kExitNotApplicable = 3;

using dbal::Graph;
using dbal::GraphError;
using json = nlohmann::ordered_json;

std::string pair_text(const std::optional<std::pair<dbal::Vertex, dbal::Vertex>>& p) {
  if (!p) return "-";
  return "(" + std::to_string(p->first) + "," + std::to_string(p->second) + ")";
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw GraphError("cannot write '" + out_path + "'");
  out << text;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("DBAL_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

// ---------------------------------------------------------------------------

struct AnalyzeArgs {
  std::string g6, edges, family, source, format = "text";
  std::vector<std::size_t> n;
};

Graph analyze_input(const AnalyzeArgs& a) {
  const int given = !a.g6.empty() + !a.edges.empty() + !a.family.empty() + !a.source.empty();
  if (given != 1) throw GraphError("analyze needs exactly one of --g6, --edges, --family, --g");
  if (!a.g6.empty()) return dbal::parse_graph6(a.g6);
  if (!a.edges.empty()) {
    std::ifstream in(a.edges);
    if (!in) throw GraphError("cannot open '" + a.edges + "'");
    return dbal::parse_edge_list(in);
  }
  if (!a.source.empty()) return dbal::load_single_graph(a.source);
  if (!a.n.empty()) return dbal::generate(a.family, a.n);
  return dbal::parse_family_spec(a.family);
}

int cmd_analyze(const AnalyzeArgs& a) {
  const Graph g = analyze_input(a);
  const auto d = dbal::all_pairs_distances(g);
  if (!d.connected()) {
    std::cerr << "dbal: input graph is disconnected\n";
    return kExitNotApplicable;
  }
  const auto degs = g.degrees();
  const auto [dmin, dmax] = std::minmax_element(degs.begin(), degs.end());
  const auto profile = dbal::balance_profile(d);
  const auto lr = dbal::is_locally_regular(g);
  const bool diam2 = profile.diameter == 2;
  const auto cls = dbal::classify_join_of_regulars(g);

  if (a.format == "json") {
    json j;
    j["tool_version"] = dbal::kToolVersion;
    j["command"] = "analyze";
    j["graph6"] = dbal::serialize_graph6(g);
    j["n"] = g.order();
    j["m"] = g.size();
    j["diameter"] = profile.diameter;
    j["degree"] = {{"min", *dmin}, {"max", *dmax}, {"regular", *dmin == *dmax}};
    j["locally_regular"] = lr.locally_regular;
    if (lr.witness) j["locally_regular_witness"] = {lr.witness->first, lr.witness->second};
    auto prof = json::array();
    for (std::size_t l = 1; l <= profile.diameter; ++l) {
      const auto& v = profile.at(l);
      json e = {{"l", l}, {"balanced", v.balanced()}};
      if (v.witness)
        e["witness"] = {{"u", v.witness->first}, {"v", v.witness->second},
                        {"w_uv", v.witness_closer_u}, {"w_vu", v.witness_closer_v}};
      prof.push_back(std::move(e));
    }
    j["profile"] = std::move(prof);
    j["highly_distance_balanced"] = profile.highly_balanced();
    if (diam2) {
      j["equal_degrees_at_distance_2"] = dbal::equal_degrees_at_distance(g, d, 2);
      j["join_classification"] = dbal::to_string(cls.kind);
    }
    std::cout << j.dump(2) << '\n';
    return kExitOk;
  }

  std::cout << "graph6: " << dbal::serialize_graph6(g) << '\n'
            << "n = " << g.order() << ", m = " << g.size() << ", diameter = " << profile.diameter
            << '\n'
            << "degrees: min " << *dmin << ", max " << *dmax
            << (*dmin == *dmax ? " (regular)" : " (not regular)") << '\n'
            << "locally regular: " << (lr.locally_regular ? "yes" : "no");
  if (lr.witness)
    std::cout << " (witness " << pair_text(lr.witness) << ", degrees " << g.degree(lr.witness->first)
              << " vs " << g.degree(lr.witness->second) << ")";
  std::cout << '\n';
  for (std::size_t l = 1; l <= profile.diameter; ++l) {
    const auto& v = profile.at(l);
    std::cout << "  l=" << l << ": " << (v.balanced() ? "yes" : "no");
    if (v.witness)
      std::cout << "  witness " << pair_text(v.witness) << " |W_uv|=" << v.witness_closer_u
                << " |W_vu|=" << v.witness_closer_v;
    std::cout << '\n';
  }
  std::cout << "highly distance-balanced: " << (profile.highly_balanced() ? "yes" : "no") << '\n';
  if (diam2)
    std::cout << "diameter-2 classification: " << dbal::to_string(cls.kind)
              << " (equal degrees at distance 2: "
              << (dbal::equal_degrees_at_distance(g, d, 2) ? "yes" : "no") << ")\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct ProductArgs {
  std::string kind, g, h, out, format = "text";
  std::size_t budget = 60;
};

int cmd_product(const ProductArgs& a) {
  const Graph g = dbal::load_single_graph(a.g);
  const Graph h = dbal::load_single_graph(a.h);
  dbal::ProductKind kind;
  std::size_t order = g.order() * h.order();
  if (a.kind == "cartesian") {
    kind = dbal::ProductKind::cartesian;
  } else if (a.kind == "lexicographic") {
    kind = dbal::ProductKind::lexicographic;
  } else if (a.kind == "corona") {
    kind = dbal::ProductKind::corona;
    order = g.order() * (h.order() + 1);
  } else {
    throw GraphError("unknown product kind '" + a.kind + "'");
  }
  if (order > a.budget)
    throw GraphError("product has " + std::to_string(order) + " vertices, over the budget of " +
                     std::to_string(a.budget));
  if (order > dbal::kGraph6MaxOrder)
    throw GraphError("product has " + std::to_string(order) +
                     " vertices; graph6 output is limited to 62");

  const auto p = kind == dbal::ProductKind::cartesian       ? dbal::cartesian(g, h)
                 : kind == dbal::ProductKind::lexicographic ? dbal::lexicographic(g, h)
                                                            : dbal::corona(g, h);
  const auto dp = dbal::all_pairs_distances(p.graph());
  const bool formula_applies = !(kind == dbal::ProductKind::lexicographic && g.order() < 2);
  dbal::FormulaCheck fc;
  if (formula_applies) fc = dbal::validate_distance_formula(p, dp);
  const std::string g6 = dbal::serialize_graph6(p.graph());

  if (!a.out.empty()) emit(g6 + "\n", a.out);
  if (a.format == "json") {
    json j;
    j["tool_version"] = dbal::kToolVersion;
    j["command"] = "product " + a.kind;
    j["graph6"] = g6;
    j["n"] = p.graph().order();
    j["m"] = p.graph().size();
    j["diameter"] = dp.connected() ? json(dp.diameter()) : json();
    if (formula_applies)
      j["distance_formula"] = {{"pairs", fc.pairs_checked}, {"mismatches", fc.mismatches}};
    std::cout << j.dump(2) << '\n';
  } else {
    if (a.out.empty()) std::cout << g6 << '\n';
    std::cout << a.kind << " product: n = " << p.graph().order() << ", m = " << p.graph().size()
              << ", diameter = "
              << (dp.connected() ? std::to_string(dp.diameter()) : std::string("inf")) << '\n';
    if (formula_applies)
      std::cout << "distance formula: " << (fc.mismatches == 0 ? "pass" : "FAIL") << " ("
                << fc.pairs_checked << " pairs, " << fc.mismatches << " mismatches)\n";
    else
      std::cout << "distance formula: not applicable (first factor is K1)\n";
  }
  return fc.mismatches == 0 ? kExitOk : kExitCounterexample;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::vector<std::string> checks;
  std::string sweep, g, h, format = "text", out;
  std::optional<std::size_t> l, vertex;
  unsigned jobs = 0;
  std::size_t budget = 60;
  double time_limit = 0;
  bool all_instances = false;
};

int cmd_verify(const VerifyArgs& a) {
  dbal::RunOptions opt;
  opt.checks = {};
  std::string check_list;
  for (const auto& group : a.checks) {
    std::string_view rest = group;
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const auto id = rest.substr(0, comma);
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
      if (id == "all") {
        opt.checks = dbal::CheckSet::all();
      } else if (auto c = dbal::parse_check(id)) {
        opt.checks.insert(*c);
      } else {
        throw GraphError("unknown check id '" + std::string(id) + "'");
      }
      check_list += (check_list.empty() ? "" : ",") + std::string(id);
    }
  }
  if (opt.checks.empty()) throw GraphError("no checks selected");
  if (a.sweep.empty() == a.g.empty()) throw GraphError("verify needs exactly one of --sweep or --g");

  opt.jobs = a.jobs > 0 ? a.jobs : default_jobs();
  opt.budget.max_vertices = a.budget;
  if (a.time_limit > 0)
    opt.budget.time_limit = std::chrono::milliseconds(static_cast<long long>(a.time_limit * 1000));
  opt.fixed_l = a.l;
  opt.fixed_vertex = a.vertex;

  std::string command = "verify --check " + check_list;
  dbal::CorpusSource src;
  const bool single_mode = a.sweep.empty();
  if (!single_mode) {
    src = dbal::CorpusSource::from_sweep(dbal::parse_sweep(a.sweep));
    command += " --sweep " + a.sweep;
    opt.keep_all_instances = a.all_instances;
  } else {
    src.firsts = dbal::load_graph_source(a.g);
    if (!a.h.empty()) src.seconds = dbal::load_graph_source(a.h);
    command += " --g " + a.g + (a.h.empty() ? "" : " --h " + a.h);
    opt.keep_all_instances = true;
    const bool cart = opt.checks.any_of({dbal::Check::thm_5_2, dbal::Check::prop_5_3,
                                         dbal::Check::cor_5_4, dbal::Check::lemma_5_1,
                                         dbal::Check::eq_1});
    if (cart) {
      for (const auto& g : src.firsts) {
        if (g.size() != g.order() * (g.order() - 1) / 2) {
          std::cerr << "dbal: cartesian checks need --g to be a complete graph K_n\n";
          return kExitNotApplicable;
        }
        src.complete_orders.push_back(g.order());
      }
      if (src.seconds.empty()) throw GraphError("cartesian checks need --h");
    }
  }
  if (a.l) command += " --l " + std::to_string(*a.l);
  if (a.vertex) command += " --vertex " + std::to_string(*a.vertex);

  const auto rep = dbal::run_corpus(src, opt);
  if (a.format == "json") {
    emit(dbal::report_to_json(rep, command).dump(2) + "\n", a.out);
  } else {
    std::ostringstream text;
    dbal::write_report_text(text, rep);
    emit(text.str(), a.out);
  }
  if (rep.failed > 0) return kExitCounterexample;
  if (single_mode && rep.checked == 0) return kExitNotApplicable;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance-balance analysis of graphs and graph products"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(dbal::kToolVersion));

  AnalyzeArgs an;
  auto* analyze = app.add_subcommand("analyze", "Report the balance profile of one graph");
  analyze->add_option("--g6", an.g6, "graph6 string");
  analyze->add_option("--edges", an.edges, "edge-list file ('n m' then m lines 'u v')");
  analyze->add_option("--family", an.family, "family name or spec (e.g. cycle:7, C7)");
  analyze->add_option("--n", an.n, "family parameters")->delimiter(',');
  analyze->add_option("--g", an.source, "graph source: file, shorthand, family spec or graph6");
  analyze->add_option("--format", an.format)->check(CLI::IsMember({"text", "json"}));

  ProductArgs pr;
  auto* product = app.add_subcommand("product", "Build a product graph and print it as graph6");
  product->add_option("kind", pr.kind, "cartesian | lexicographic | corona")->required();
  product->add_option("G", pr.g, "first factor")->required();
  product->add_option("H", pr.h, "second factor")->required();
  product->add_option("--out", pr.out, "write the graph6 line here");
  product->add_option("--budget", pr.budget, "maximum product order")->check(CLI::PositiveNumber);
  product->add_option("--format", pr.format)->check(CLI::IsMember({"text", "json"}));

  VerifyArgs ve;
  auto* verify = app.add_subcommand("verify", "Check theorem instances against brute force");
  verify->set_help_flag("--help", "Print this help message and exit");
  verify->add_option("--check", ve.checks, "check ids, comma separated or repeated")->required();
  verify->add_option("--sweep", ve.sweep, "sweep spec, e.g. connected:n<=6 or G:2<=n<=5,H:n<=3");
  verify->add_option("--g", ve.g, "first graph (file, shorthand, family spec or graph6)");
  verify->add_option("--h", ve.h, "second graph");
  verify->add_option("--l", ve.l, "distance l");
  verify->add_option("--vertex", ve.vertex, "vertex for cor-4.2");
  verify->add_option("--jobs", ve.jobs, "worker threads (default: $DBAL_JOBS or all cores)");
  verify->add_option("--budget", ve.budget, "maximum product order")->check(CLI::PositiveNumber);
  verify->add_option("--time-limit", ve.time_limit, "stop starting new work after this many seconds");
  verify->add_option("--format", ve.format)->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", ve.out, "write the report here instead of stdout");
  verify->add_flag("--all-instances", ve.all_instances, "list every instance, not just failures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*analyze) return cmd_analyze(an);
    if (*product) return cmd_product(pr);
    if (*verify) return cmd_verify(ve);
  } catch (const GraphError& e) {
    std::cerr << "dbal: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "dbal: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
