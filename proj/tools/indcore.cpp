// indcore: decide contractibility and sphericity of independence complexes
// of chordal graphs, with certificates and oracle cross-checks.
//
// Exit status: 0 success, 1 property violation, 2 usage or input error.

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "indcore/indcore.hpp"

namespace {

using namespace indcore;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool json = false;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  bool unsafe = false;
};

struct Input {
  std::string path;
  std::string fixture;
  std::string format;  // edges | facets | tree; empty: by extension

  void attach(CLI::App* cmd, bool facets_allowed = false) {
    cmd->add_option("input", path, "Input file ('-' for stdin)");
    cmd->add_option("--fixture", fixture, "Built-in graph by name (see 'gen fixture --list')");
    cmd->add_option("--format", format, "Input format, overriding the file extension")
        ->check(CLI::IsMember(facets_allowed ? std::vector<std::string>{"edges", "facets"}
                                             : std::vector<std::string>{"edges"}));
  }

  std::string resolved_format() const {
    if (!format.empty()) return format;
    const auto ext = std::filesystem::path(path).extension().string();
    if (ext == ".facets") return "facets";
    if (ext == ".tree") return "tree";
    return "edges";
  }

  bool is_complex() const { return fixture.empty() && resolved_format() == "facets"; }

  template <class F>
  auto with_stream(F&& f) const {
    if (path == "-") return f(std::cin);
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read '" + path + "'");
    return f(in);
  }

  Graph graph() const {
    if (!fixture.empty() && !path.empty()) throw UsageError("give either an input file or --fixture, not both");
    if (!fixture.empty()) return indcore::fixture(fixture);
    if (path.empty()) throw UsageError("missing input file or --fixture");
    const auto fmt = resolved_format();
    if (fmt != "edges") throw UsageError("expected a graph (.edges) but the input is in '" + fmt + "' format");
    return with_stream([](std::istream& in) { return read_edge_list(in); });
  }

  SimplicialComplex complex() const {
    return with_stream([](std::istream& in) { return read_facet_list(in); });
  }
};

DismantlePolicy parse_policy(const std::string& text) {
  if (text == "lex") return DismantlePolicy::lexicographic();
  if (text.starts_with("seed:")) {
    std::uint64_t s = 0;
    const auto digits = text.substr(5);
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), s);
    if (ec == std::errc() && end == digits.data() + digits.size() && !digits.empty()) return DismantlePolicy::seeded(s);
  }
  throw UsageError("policy must be 'lex' or 'seed:<n>'");
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

int run_check(const Globals& g, const Input& in) {
  const auto graph = in.graph();
  const bool chordal = is_chordal(graph);
  if (g.json) {
    Json j{{"chordal", chordal}, {"n", graph.order()}, {"m", graph.size()}};
    if (chordal) {
      auto order = mcs_order(graph);
      j["elimination_order"] = std::vector<Vertex>(order.rbegin(), order.rend());
    }
    print(j);
  } else {
    std::cout << (chordal ? "chordal" : "not chordal") << '\n';
  }
  return chordal ? kOk : kViolation;
}

int run_decide(const Globals& g, const Input& in, const std::string& policy, bool oracle, bool timing,
               unsigned prime) {
  DecideOptions opts;
  opts.policy = parse_policy(policy);
  opts.unsafe = g.unsafe;
  opts.oracle = oracle;
  opts.homology.prime = prime;
  const auto report = decide(in.graph(), opts);
  print(to_json(report, timing));
  return kOk;
}

int run_core(const Globals&, const Input& in, const std::string& policy) {
  print(certificate_json(compute_core(in.graph(), parse_policy(policy))));
  return kOk;
}

int run_certify(const Globals& g, const Input& in, const std::string& cert_path) {
  const auto graph = in.graph();
  std::ifstream file(cert_path);
  if (!file) throw UsageError("cannot read '" + cert_path + "'");
  Json doc;
  try {
    doc = Json::parse(file);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("certificate is not JSON: ") + e.what());
  }
  const auto check = verify_certificate(graph, certificate_from_json(doc));
  if (g.json) {
    Json j{{"valid", check.ok}};
    if (!check.ok) {
      j["failed_step"] = *check.failed_step;
      j["reason"] = check.reason;
    }
    print(j);
  } else if (check.ok) {
    std::cout << "valid\n";
  } else {
    std::cout << "invalid at step " << *check.failed_step << ": " << check.reason << '\n';
  }
  return check.ok ? kOk : kViolation;
}

int run_betti(const Globals&, const Input& in, unsigned prime) {
  HomologyOptions opts;
  opts.prime = prime;
  const auto complex = in.is_complex() ? in.complex() : independence_complex(in.graph());
  print(to_json(reduced_betti(complex, opts)));
  return kOk;
}

int run_wedge(const Globals&, const Input& in, std::optional<Vertex> vertex) {
  const auto graph = in.graph();
  const auto peeled = wedge_decomposition(graph);
  Json j{{"peeling", to_json(peeled)}};
  bool agree = true;
  Json simplicial = Json::array();
  std::vector<Vertex> targets;
  if (vertex) {
    targets.push_back(*vertex);
  } else {
    for (Vertex v : simplicial_vertices(graph))
      if (graph.degree(v) > 0) targets.push_back(v);
  }
  for (Vertex v : targets) {
    const auto sig = wedge_via_simplicial(graph, v);
    agree = agree && sig == peeled;
    simplicial.push_back({{"vertex", v}, {"signature", to_json(sig)}});
  }
  j["simplicial"] = std::move(simplicial);
  j["agree"] = agree;
  print(j);
  return agree ? kOk : kViolation;
}

int run_treemodel(const Globals& g, const Input& in) {
  const auto graph = in.graph();
  const auto tree = clique_tree(graph);
  if (g.json) {
    print(to_json(tree));
  } else {
    write_tree_model(std::cout, tree);
  }
  return kOk;
}

int run_trgood(const Globals& g, const Input& in, const std::string& tree_path, NodeId root) {
  const auto graph = in.graph();
  TreeModel tree;
  if (tree_path.empty()) {
    tree = clique_tree(graph);
  } else {
    std::ifstream file(tree_path);
    if (!file) throw UsageError("cannot read '" + tree_path + "'");
    tree = read_tree_model(file);
    if (auto check = validate_tree_model(tree, graph); !check)
      throw PreconditionFailed("tree model is invalid: " + check.diagnostic);
  }
  const RootedTreeModel rooted{tree, root};
  const auto pair = find_tr_good_pair(graph, rooted);
  const bool ok = is_tr_good(rooted, graph, pair.x, pair.y);
  if (g.json) {
    print(Json{{"x", pair.x}, {"y", pair.y}, {"root", root}, {"root_bag", tree.bags[root]}, {"tr_good", ok}});
  } else {
    std::cout << "x=" << pair.x << " y=" << pair.y << " root=" << root << (ok ? " tr-good" : " NOT tr-good") << '\n';
  }
  return ok ? kOk : kViolation;
}

struct GenOptions {
  std::string kind;
  std::size_t n = 10;
  double fill = 0.5;
  std::size_t k = 2;
  std::string name;
  std::string tree_out;
  bool list = false;
};

int run_gen(const Globals& g, const GenOptions& o) {
  Graph graph;
  std::optional<TreeModel> model;
  if (o.kind == "chordal") {
    auto s = random_chordal(o.n, o.fill, g.seed);
    graph = std::move(s.graph);
    model = std::move(s.model);
  } else if (o.kind == "forest") {
    graph = random_forest(o.n, o.fill, g.seed);
  } else if (o.kind == "matching") {
    graph = matching_graph(o.k);
  } else {  // fixture
    if (o.list) {
      for (const auto& f : builtin_fixtures()) std::cout << f.name << '\n';
      return kOk;
    }
    if (o.name.empty()) throw UsageError("gen fixture needs --name");
    graph = fixture(o.name);
  }
  if (!o.tree_out.empty()) {
    if (!model) model = clique_tree(graph);
    std::ofstream out(o.tree_out);
    if (!out) throw UsageError("cannot write '" + o.tree_out + "'");
    write_tree_model(out, *model);
  }
  if (g.json) {
    print(to_json(graph));
  } else {
    write_edge_list(std::cout, graph);
  }
  return kOk;
}

int run_explore(const Globals& g, std::size_t n_max, bool s0, std::size_t forests, std::size_t forest_n) {
  if (forests > 0) {
    auto report = forest_core_check(forests, forest_n, g.seed);
    print(to_json(report));
    return report.violations.empty() ? kOk : kViolation;
  }
  const auto cat = taut_catalog(n_max, g.jobs);
  if (s0) {
    print(to_json(s0_wedge_check(cat)));
    return kOk;
  }
  if (g.json) {
    print(to_json(cat));
    return kOk;
  }
  std::cout << "taut chordal graphs with at most " << n_max << " vertices\n";
  for (const auto& e : cat.entries)
    std::cout << "  " << describe(e.signature) << ": " << e.labeled_count << " labeled, " << e.classes.size()
              << " up to isomorphism\n";
  return kOk;
}

int run_sweep(const Globals& g, std::vector<std::string> suites, bool quick) {
  auto cfg = quick ? AcceptanceConfig::quick() : AcceptanceConfig{};
  cfg.jobs = g.jobs;
  cfg.seed = g.seed;
  if (suites.empty() || (suites.size() == 1 && suites[0] == "all")) suites = acceptance_ids();
  Json results = Json::array();
  bool all = true;
  run_acceptance(cfg, suites, [&](const SweepResult& r) {
    all = all && r.passed();
    if (g.json) {
      results.push_back({{"id", r.id},
                         {"title", r.title},
                         {"passed", r.passed()},
                         {"tolerance", r.tolerance},
                         {"cases", r.cases},
                         {"failures", r.failures},
                         {"notes", r.notes}});
    } else {
      std::cout << r.id << ' ' << (r.passed() ? "PASS" : "FAIL") << "  " << r.title << "  [" << r.tolerance
                << "; cases=" << r.cases << " failures=" << r.failures << "]\n";
      for (const auto& n : r.notes) std::cout << "    " << n << '\n';
      std::cout.flush();
    }
  });
  if (g.json) print(results);
  return all ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dismantling decisions for independence complexes of chordal graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_flag("--json", globals.json, "Emit JSON where the default is plain text");
  app.add_option("--seed", globals.seed, "Seed for every random choice")->capture_default_str();
  app.add_option("--jobs", globals.jobs, "Worker threads for exhaustive sweeps")->capture_default_str();
  app.add_flag("--unsafe", globals.unsafe, "Dismantle non-chordal inputs too (never classified)");

  int status = kOk;
  std::function<int()> action;

  Input in;
  std::string policy = "lex";
  bool oracle = false, timing = false;
  unsigned prime = 2;

  auto* check = app.add_subcommand("check", "Test chordality");
  in.attach(check);
  check->callback([&] { action = [&] { return run_check(globals, in); }; });

  auto* dec = app.add_subcommand("decide", "Full decision report as JSON");
  in.attach(dec);
  dec->add_option("--policy", policy, "lex or seed:<n>")->capture_default_str();
  dec->add_flag("--oracle", oracle, "Attach reduced Betti numbers of Ind(G)");
  dec->add_flag("--timing", timing, "Include elapsed_ms");
  dec->add_option("--prime", prime, "Field characteristic for the oracle")->capture_default_str();
  dec->callback([&] { action = [&] { return run_decide(globals, in, policy, oracle, timing, prime); }; });

  auto* core = app.add_subcommand("core", "Dismantling certificate and core as JSON");
  in.attach(core);
  core->add_option("--policy", policy, "lex or seed:<n>")->capture_default_str();
  core->callback([&] { action = [&] { return run_core(globals, in, policy); }; });

  std::string cert_path;
  auto* certify = app.add_subcommand("certify", "Verify a certificate against a graph");
  in.attach(certify);
  certify->add_option("--certificate", cert_path, "Certificate JSON as written by 'core'")->required();
  certify->callback([&] { action = [&] { return run_certify(globals, in, cert_path); }; });

  auto* betti = app.add_subcommand("betti", "Reduced Betti numbers of Ind(G) or of a facet list");
  in.attach(betti, true);
  betti->add_option("--prime", prime, "Field characteristic")->capture_default_str();
  betti->callback([&] { action = [&] { return run_betti(globals, in, prime); }; });

  std::optional<Vertex> wedge_vertex;
  auto* wedge_cmd = app.add_subcommand("wedge", "Signatures from the peeling and simplicial wedge formulas");
  in.attach(wedge_cmd);
  wedge_cmd->add_option("--vertex", wedge_vertex, "Simplicial vertex (default: all of positive degree)");
  wedge_cmd->callback([&] { action = [&] { return run_wedge(globals, in, wedge_vertex); }; });

  auto* tm = app.add_subcommand("treemodel", "Emit the clique tree");
  in.attach(tm);
  tm->callback([&] { action = [&] { return run_treemodel(globals, in); }; });

  std::string tree_path;
  NodeId root = 0;
  auto* trgood = app.add_subcommand("trgood", "Find a rooted good pair");
  in.attach(trgood);
  trgood->add_option("--tree", tree_path, "Tree model file (default: the clique tree)");
  trgood->add_option("--root", root, "Root node")->capture_default_str();
  trgood->callback([&] { action = [&] { return run_trgood(globals, in, tree_path, root); }; });

  GenOptions gen_opts;
  auto* gen = app.add_subcommand("gen", "Generate a graph as an edge list");
  gen->add_option("kind", gen_opts.kind, "chordal, forest, matching or fixture")
      ->required()
      ->check(CLI::IsMember({"chordal", "forest", "matching", "fixture"}));
  gen->add_option("--n", gen_opts.n, "Vertex count")->capture_default_str();
  gen->add_option("--fill", gen_opts.fill, "Bag growth (chordal) or edge probability (forest)")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  gen->add_option("--k", gen_opts.k, "Matching size")->capture_default_str();
  gen->add_option("--name", gen_opts.name, "Fixture name");
  gen->add_flag("--list", gen_opts.list, "List fixture names");
  gen->add_option("--tree-out", gen_opts.tree_out, "Also write a tree model of the graph");
  gen->callback([&] { action = [&] { return run_gen(globals, gen_opts); }; });

  std::size_t n_max = 7, forests = 0, forest_n = 50;
  bool s0 = false;
  auto* explore = app.add_subcommand("explore", "Catalog taut chordal graphs by homotopy type");
  explore->add_option("--n-max", n_max, "Largest vertex count (at most 8)")->capture_default_str();
  explore->add_flag("--s0", s0, "Only signatures concentrated in dimension 0");
  explore->add_option("--forests", forests, "Run this many random forests instead");
  explore->add_option("--forest-n", forest_n, "Largest forest size")->capture_default_str();
  explore->callback([&] { action = [&] { return run_explore(globals, n_max, s0, forests, forest_n); }; });

  std::vector<std::string> suites;
  bool quick = false;
  auto* sweep = app.add_subcommand("sweep", "Run acceptance suites AC1..AC10");
  sweep->add_option("suites", suites, "Suite ids (default: all)");
  sweep->add_flag("--quick", quick, "Reduced sizes");
  sweep->callback([&] { action = [&] { return run_sweep(globals, suites, quick); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    status = action();
  } catch (const NotChordal& e) {
    std::cerr << "indcore: " << e.what() << '\n';
    status = kViolation;
  } catch (const ParseError& e) {
    std::cerr << "indcore: parse error";
    if (e.line()) std::cerr << " at line " << e.line();
    std::cerr << ": " << e.what() << '\n';
    status = kUsage;
  } catch (const UsageError& e) {
    std::cerr << "indcore: " << e.what() << '\n';
    status = kUsage;
  } catch (const Error& e) {
    std::cerr << "indcore: " << e.what() << '\n';
    status = kUsage;
  }
  return status;
}
