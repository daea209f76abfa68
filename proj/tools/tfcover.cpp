// tfcover: command-line front end for the double-cover toolkit.
//
// Subcommands
//   cdc          canonical double cover of a graph, printed as graph6
//   adc          alternating double cover, printed as an arc list
//   tf-test      relate two graphs: COUSINS, ISOMORPHIC,
//                TF-EQUIVALENT-ISOMORPHIC, or UNRELATED, with an
//                (alpha, beta) witness in disjoint-cycle notation
//   unstable     instability report: automorphism orders, index, trivial
//                reasons, and a nontrivial two-sided automorphism if any
//   fold-census  every base graph obtained by folding the double cover of
//                the input along a class-switching involution
//   claw         circuit-with-claws graph and its two-circuit companion
//   seed         circuit seed pair, optionally grown by entangled edges,
//                split-image edges, and pins
//   substitute   expand an odd-degree twin pair into circuits
//   census       group the graphs of a graph6 file by the certificate of
//                their double cover and report the non-isomorphic groups
//
// Graph arguments accept a graph6 string, a graph name (bare or through
// --named: petersen, desargues, cycle(6), gp(10,3), hypercube5, c5, k4,
// p6, q4, cg(3), cg'(3), ...), or --file FILE (first graph6 line).
//
// Exit codes: 0 success, 1 usage or parse error, 2 capacity exceeded,
// 3 internal inconsistency.

#include <algorithm>
#include <cctype>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "tfcover/canonical.hpp"
#include "tfcover/census.hpp"
#include "tfcover/constructions.hpp"
#include "tfcover/cover.hpp"
#include "tfcover/graph.hpp"
#include "tfcover/graph6.hpp"
#include "tfcover/liftfold.hpp"
#include "tfcover/tfiso.hpp"

namespace {

using namespace tfcover;

struct SharedConfig {
  long long element_bound = kDefaultElementBound;
  int workers = 0;
  bool lenient = false;
  bool one_based = false;

  int base() const { return one_based ? 1 : 0; }
};

std::string to_lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

// "(3)" or "(3,5)" -> {3, 5}; nullopt when the text is not of that shape.
std::optional<std::vector<int>> parse_int_args(const std::string& text) {
  if (text.size() < 3 || text.front() != '(' || text.back() != ')') return std::nullopt;
  std::vector<int> out;
  std::string inner = text.substr(1, text.size() - 2);
  size_t pos = 0;
  while (pos <= inner.size()) {
    size_t comma = inner.find(',', pos);
    std::string tok = inner.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    size_t a = tok.find_first_not_of(" \t");
    if (a == std::string::npos) return std::nullopt;
    size_t b = tok.find_last_not_of(" \t");
    tok = tok.substr(a, b - a + 1);
    if (!all_digits(tok) || tok.size() > 7) return std::nullopt;
    out.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

// Named-graph lookup, extended over the library's list with the claw
// families cg(n[,k]) / cg'(n[,k]) (alias cgc) and a trailing-digit
// shorthand: c5 -> cycle(5), k4 -> complete(4), p6 -> path(6),
// q4 / hypercube4 -> hypercube(4), cg3 -> cg(3), cgc3 -> cg'(3).
Graph resolve_named(const std::string& raw) {
  std::string name = to_lower(raw);
  for (const std::string prefix : {"cg'", "cgc", "cg"}) {
    if (name.rfind(prefix, 0) != 0) continue;
    std::string rest = name.substr(prefix.size());
    std::optional<std::vector<int>> args;
    if (all_digits(rest) && rest.size() <= 7)
      args = std::vector<int>{std::stoi(rest)};
    else
      args = parse_int_args(rest);
    if (!args || args->empty() || args->size() > 2) continue;
    ClawParams p{(*args)[0], args->size() == 2 ? (*args)[1] : 3};
    return prefix == "cg" ? claw_graph(p) : claw_companion(p);
  }
  if (name.find('(') == std::string::npos) {
    size_t d = name.size();
    while (d > 0 && std::isdigit(static_cast<unsigned char>(name[d - 1]))) --d;
    if (d > 0 && d < name.size() && name.size() - d <= 7) {
      static const std::map<std::string, std::string> kShorthand = {
          {"c", "cycle"},        {"cycle", "cycle"},
          {"k", "complete"},     {"complete", "complete"},
          {"p", "path"},         {"path", "path"},
          {"q", "hypercube"},    {"hypercube", "hypercube"},
          {"gp", ""},  // gp needs two arguments; reject the shorthand
      };
      auto it = kShorthand.find(name.substr(0, d));
      if (it != kShorthand.end() && !it->second.empty())
        return named_graph(it->second + "(" + name.substr(d) + ")");
    }
  }
  return named_graph(name);
}

// A bare graph argument: graph6 if it decodes, otherwise a graph name.
Graph resolve_spec(const std::string& spec) {
  std::string g6_error;
  try {
    return from_graph6(spec);
  } catch (const std::exception& e) {
    g6_error = e.what();
  }
  try {
    return resolve_named(spec);
  } catch (const std::exception& e) {
    throw parse_error("'" + spec + "' is neither graph6 (" + g6_error +
                      ") nor a known graph name (" + e.what() + ")");
  }
}

struct GraphSource {
  std::string spec;
  std::string named;
  std::string file;
};

void add_graph_source(CLI::App* cmd, GraphSource& src) {
  cmd->add_option("graph", src.spec, "graph6 string or graph name");
  cmd->add_option("--named", src.named,
                  "graph name (petersen, cycle(6), hypercube5, cg(1), ...)");
  cmd->add_option("--file", src.file, "read the first graph6 line of this file");
}

Graph load_graph(const GraphSource& src, const SharedConfig& cfg,
                 const std::string& cmd) {
  int provided = (src.spec.empty() ? 0 : 1) + (src.named.empty() ? 0 : 1) +
                 (src.file.empty() ? 0 : 1);
  require(provided == 1,
          cmd + ": provide exactly one graph (positional, --named, or --file)");
  if (!src.named.empty()) return resolve_named(src.named);
  if (!src.file.empty()) {
    GraphStream stream(src.file, /*strict=*/!cfg.lenient);
    std::optional<IngestRecord> rec = stream.next();
    for (const std::string& w : stream.warnings())
      std::cerr << "warning: " << w << "\n";
    require(rec.has_value(), cmd + ": no graph found in " + src.file);
    return rec->graph;
  }
  return resolve_spec(src.spec);
}

void print_pair(const TfPair& p, const SharedConfig& cfg) {
  std::cout << "alpha: " << p.alpha.cycle_string(cfg.base()) << "\n";
  std::cout << "beta: " << p.beta.cycle_string(cfg.base()) << "\n";
}

// Shared verdict for tf-test and the --tf-test flags.  ISOMORPHIC covers
// isomorphic inputs whose only two-sided relations come from isomorphisms
// (including the trivially unstable); TF-EQUIVALENT-ISOMORPHIC flags
// isomorphic inputs that are nontrivially unstable, so a genuinely
// two-sided relation exists on top of the isomorphisms.
void run_tf_verdict(const Graph& g, const Graph& h, const SharedConfig& cfg) {
  std::optional<TfPair> found = find_tf_isomorphism(g, h);
  if (!found) {
    std::cout << "verdict: UNRELATED\n";
    return;
  }
  if (certificate(g) != certificate(h)) {
    std::cout << "verdict: COUSINS\n";
    print_pair(*found, cfg);
    return;
  }
  InstabilityReport rep = instability_report(g);
  bool genuinely = rep.unstable && rep.trivial_reason == TrivialReason::None;
  std::cout << "verdict: " << (genuinely ? "TF-EQUIVALENT-ISOMORPHIC" : "ISOMORPHIC")
            << "\n";
  std::optional<Permutation> rho = find_isomorphism(g, h);
  check_internal(rho.has_value(), "equal certificates but no isomorphism found");
  TfPair witness{*rho, *rho};
  if (genuinely) {
    std::optional<TfPair> nt = find_nontrivial_tf_automorphism(g);
    if (nt) witness = TfPair{nt->alpha * *rho, nt->beta * *rho};
  }
  check_internal(verify_tf(g, h, witness), "derived witness fails verification");
  print_pair(witness, cfg);
}

void run_cdc(const GraphSource& src, const SharedConfig& cfg, bool canonical) {
  Cover c = cdc(load_graph(src, cfg, "cdc"));
  std::cout << (canonical ? certificate(c.graph) : to_graph6(c.graph)) << "\n";
}

void run_adc(const GraphSource& src, const SharedConfig& cfg) {
  AltCover a = adc(load_graph(src, cfg, "adc"));
  std::vector<std::pair<int, int>> arcs(a.digraph.arcs().begin(),
                                        a.digraph.arcs().end());
  std::sort(arcs.begin(), arcs.end());
  for (auto [u, v] : arcs)
    std::cout << u + cfg.base() << " -> " << v + cfg.base() << "\n";
  std::cerr << "arcs: " << arcs.size() << "\n";
}

void run_unstable(const GraphSource& src, const SharedConfig& cfg) {
  Graph g = load_graph(src, cfg, "unstable");
  InstabilityReport r = instability_report(g);
  std::cout << "vertices: " << g.vertex_count() << "\n"
            << "edges: " << g.edge_count() << "\n"
            << "connected: " << (r.connected_input ? "yes" : "no") << "\n"
            << "aut-base: " << r.aut_g_order << "\n"
            << "aut-cover: " << r.aut_cdc_order << "\n"
            << "index: " << r.index << "\n";
  std::string status = "stable";
  if (r.unstable)
    status = r.trivial_reason == TrivialReason::None
                 ? "unstable"
                 : std::string("trivially unstable (") + to_string(r.trivial_reason) +
                       ")";
  std::cout << "status: " << status << "\n";
  std::cout << "asymmetric: " << (r.aut_g_order == 1 ? "yes" : "no") << "\n";
  std::optional<TfPair> w = find_nontrivial_tf_automorphism(g);
  if (w) {
    std::cout << "tf-automorphism:\n";
    print_pair(*w, cfg);
  } else {
    std::cout << "tf-automorphism: none\n";
  }
}

void run_fold_census(const GraphSource& src, const SharedConfig& cfg,
                     bool two_copies) {
  Graph g = load_graph(src, cfg, "fold-census");
  if (two_copies)
    require(is_bipartite(g),
            "fold-census: --as-cover-of-two-copies needs a bipartite input "
            "(only then is the double cover two disjoint copies)");
  BaseCensus bc = base_graph_census(cdc(g), cfg.element_bound);
  for (const CensusClass& c : bc.classes)
    std::cout << "fold: " << c.certificate
              << "  guide: " << c.witness.involution.cycle_string(cfg.base())
              << "\n";
  std::cout << "loopless-classes: " << bc.classes.size() << "\n"
            << "guides: " << bc.guide_count
            << " strongly-switching: " << bc.strongly_switching_count << "\n"
            << "loop-classes: " << bc.loop_fold_certificates.size() << "\n";
}

void run_claw(int n, int k, bool companion, bool tf_test, bool canonical,
              const SharedConfig& cfg) {
  ClawParams params{n, k};
  Graph g = claw_graph(params);
  std::cout << "claw-graph: " << (canonical ? certificate(g) : to_graph6(g)) << "\n";
  if (!companion && !tf_test) return;
  Graph c = claw_companion(params);
  std::cout << "claw-companion: " << (canonical ? certificate(c) : to_graph6(c))
            << "\n";
  if (!tf_test) return;
  std::optional<TfPair> found = find_tf_isomorphism(g, c);
  if (found && certificate(g) != certificate(c)) {
    std::cout << "tf-test: COUSINS\n";
    print_pair(*found, cfg);
  } else if (found) {
    std::cout << "tf-test: ISOMORPHIC\n";
  } else {
    std::cout << (n % 2 == 0 ? "tf-test: not cousins (even n)\n"
                             : "tf-test: UNRELATED\n");
  }
}

// Deterministic order for the complementary split-image edge classes of the
// seed on circuits of length k: class (d, a) with 1 <= d < k, 0 <= a < k
// stands for the left edge {a, (a+d)%k + k} and its complement
// {a + k, (a+d)%k}; the complement is class (k-d, (a+d)%k), so each
// unordered class is listed once, under its lexicographically first (d, a).
std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>
split_edge_classes(int k) {
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> out;
  for (int d = 1; d < k; ++d)
    for (int a = 0; a < k; ++a) {
      int b = (a + d) % k;
      if (std::pair(d, a) < std::pair(k - d, b))
        out.push_back({{a, b + k}, {a + k, b}});
    }
  return out;
}

void print_mixed_right(const MixedGraph& h) {
  std::vector<int> loops = h.loop_vertices();
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : h.arcs())
    if (u < v) edges.emplace_back(u, v);
  std::sort(edges.begin(), edges.end());
  std::cout << "right: " << h.vertex_count() << " vertices, loops at";
  for (int v : loops) std::cout << " " << v;
  std::cout << ", edges";
  for (auto [u, v] : edges) std::cout << " " << u << "-" << v;
  std::cout << "\n";
}

void run_seed(int k, int entangled, int split,
              const std::vector<std::string>& pin_specs, bool tf_test,
              bool canonical, const SharedConfig& cfg) {
  SeedState s = seed_pair(k);
  require(entangled >= 0 && entangled <= k,
          "seed: --entangled-edges must be between 0 and k");
  for (int i = 0; i < entangled; ++i) s = add_entangled_edge(s, i, i + k);
  auto classes = split_edge_classes(k);
  require(split >= 0 && split <= static_cast<int>(classes.size()),
          "seed: --split-pairs must be between 0 and k(k-1)/2");
  for (int i = 0; i < split; ++i)
    s = add_split_image_edges(s, classes[i].first, classes[i].second);
  for (const std::string& spec : pin_specs) {
    std::optional<std::vector<int>> nums = parse_int_args("(" + spec + ")");
    require(nums && !nums->empty() && nums->size() % 2 == 0,
            "seed: --pin wants an even comma-separated vertex list, e.g. 0,3");
    std::vector<std::pair<int, int>> attach;
    for (size_t i = 0; i + 1 < nums->size(); i += 2)
      attach.emplace_back((*nums)[i], (*nums)[i + 1]);
    s = add_pin(s, attach);
  }
  std::cout << "left: " << (canonical ? certificate(s.g) : to_graph6(s.g)) << "\n";
  if (s.h.has_loops()) {
    print_mixed_right(s.h);
  } else {
    Graph h = s.h_graph();
    std::cout << "right: " << (canonical ? certificate(h) : to_graph6(h)) << "\n";
  }
  print_pair(s.pair, cfg);
  if (!tf_test) return;
  if (s.h.has_loops()) {
    std::cout << (are_tf_cousins(s.g, s.h) ? "tf-test: COUSINS\n"
                                           : "tf-test: UNRELATED\n");
  } else {
    run_tf_verdict(s.g, s.h_graph(), cfg);
  }
}

void run_substitute(const GraphSource& src, const std::string& at, bool tf_test,
                    bool canonical, const SharedConfig& cfg) {
  Graph g = load_graph(src, cfg, "substitute");
  int n = g.vertex_count();
  int u = -1, v = -1;
  if (!at.empty()) {
    std::optional<std::vector<int>> nums = parse_int_args("(" + at + ")");
    require(nums && nums->size() == 2, "substitute: --at wants two vertices, e.g. 0,1");
    u = (*nums)[0] - cfg.base();
    v = (*nums)[1] - cfg.base();
  } else {
    // Smallest non-adjacent pair with identical neighbourhoods and odd degree.
    std::vector<std::vector<int>> nbr(n);
    for (auto [a, b] : g.edges()) {
      nbr[a].push_back(b);
      nbr[b].push_back(a);
    }
    for (auto& row : nbr) std::sort(row.begin(), row.end());
    for (int a = 0; a < n && u < 0; ++a)
      for (int b = a + 1; b < n; ++b)
        if (!g.has_edge(a, b) && nbr[a].size() % 2 == 1 && nbr[a] == nbr[b]) {
          u = a;
          v = b;
          break;
        }
    require(u >= 0, "substitute: no odd-degree twin pair found; give --at U,V");
  }
  require(u >= 0 && u < n && v >= 0 && v < n && u != v,
          "substitute: vertices out of range");
  std::vector<int> swapped(n);
  for (int i = 0; i < n; ++i) swapped[i] = i;
  std::swap(swapped[u], swapped[v]);
  TfPair p{Permutation::identity(n), Permutation(std::move(swapped))};
  require(verify_tf(g, g, p),
          "substitute: the chosen vertices are not twins (their swap is not a "
          "two-sided automorphism)");
  SubstitutionResult r = substitute(g, g, p, u, v);
  std::cout << "at: " << u + cfg.base() << " " << v + cfg.base() << "\n";
  std::cout << "left: " << (canonical ? certificate(r.g) : to_graph6(r.g)) << "\n";
  std::cout << "right: " << (canonical ? certificate(r.h) : to_graph6(r.h)) << "\n";
  print_pair(r.pair, cfg);
  if (tf_test) run_tf_verdict(r.g, r.h, cfg);
}

void run_census(const std::string& input, const std::string& output,
                bool include_disconnected, const std::string& format,
                const SharedConfig& cfg) {
  GraphStream stream(input, /*strict=*/!cfg.lenient);
  std::vector<Graph> graphs = stream.all();
  for (const std::string& w : stream.warnings())
    std::cerr << "warning: " << w << "\n";
  CensusOptions opts;
  opts.connected_only = !include_disconnected;
  opts.workers = cfg.workers;
  std::vector<CousinRecord> records = census_cousins(graphs, opts);
  std::vector<CatalogEntry> entries;
  entries.reserve(records.size());
  for (CousinRecord& r : records) {
    ConjectureVerdict verdict = verify_conjecture(r);
    entries.push_back(CatalogEntry{std::move(r), verdict});
  }
  if (!output.empty()) write_catalog(entries, output);
  if (format == "catalog-lines")
    std::cout << catalog_lines(entries);
  else
    std::cout << report(entries);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "double-cover toolkit: two-sided isomorphism tests, instability "
      "reports, fold censuses, constructions, and a cousin census"};
  app.require_subcommand(1);
  SharedConfig cfg;
  app.add_option("--element-bound", cfg.element_bound,
                 "largest automorphism group walked element by element")
      ->envname("TFCOVER_ELEMENT_BOUND")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--workers", cfg.workers,
                 "parallel workers for the census (0 = all cores)")
      ->envname("TFCOVER_WORKERS")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_flag("--lenient", cfg.lenient,
               "skip unreadable graph6 lines with a warning instead of aborting");
  app.add_flag("--one-based", cfg.one_based, "display vertex labels from 1");

  {
    auto* cmd = app.add_subcommand("cdc", "canonical double cover as graph6");
    cmd->fallthrough();
    auto src = std::make_shared<GraphSource>();
    auto canonical = std::make_shared<bool>(false);
    add_graph_source(cmd, *src);
    cmd->add_flag("--canonical", *canonical, "print the canonical graph6 form");
    cmd->callback([&cfg, src, canonical] { run_cdc(*src, cfg, *canonical); });
  }
  {
    auto* cmd = app.add_subcommand("adc", "alternating double cover as an arc list");
    cmd->fallthrough();
    auto src = std::make_shared<GraphSource>();
    add_graph_source(cmd, *src);
    cmd->callback([&cfg, src] { run_adc(*src, cfg); });
  }
  {
    auto* cmd = app.add_subcommand(
        "tf-test", "relate two graphs through their double covers");
    cmd->fallthrough();
    auto specs = std::make_shared<std::vector<std::string>>();
    cmd->add_option("graphs", *specs, "two graphs (graph6 or names)")
        ->expected(2)
        ->required();
    cmd->callback([&cfg, specs] {
      run_tf_verdict(resolve_spec((*specs)[0]), resolve_spec((*specs)[1]), cfg);
    });
  }
  {
    auto* cmd = app.add_subcommand("unstable", "instability report for a graph");
    cmd->fallthrough();
    auto src = std::make_shared<GraphSource>();
    add_graph_source(cmd, *src);
    cmd->callback([&cfg, src] { run_unstable(*src, cfg); });
  }
  {
    auto* cmd = app.add_subcommand(
        "fold-census", "all base graphs folded out of the input's double cover");
    cmd->fallthrough();
    auto src = std::make_shared<GraphSource>();
    auto two_copies = std::make_shared<bool>(false);
    add_graph_source(cmd, *src);
    cmd->add_flag("--as-cover-of-two-copies", *two_copies,
                  "read the input as one copy; its double cover is then two "
                  "disjoint copies (bipartite inputs only)");
    cmd->callback([&cfg, src, two_copies] { run_fold_census(*src, cfg, *two_copies); });
  }
  {
    auto* cmd = app.add_subcommand("claw", "circuit-with-claws graph and companion");
    cmd->fallthrough();
    auto n = std::make_shared<int>(1);
    auto k = std::make_shared<int>(3);
    auto companion = std::make_shared<bool>(false);
    auto tf_test = std::make_shared<bool>(false);
    auto canonical = std::make_shared<bool>(false);
    cmd->add_option("--n", *n, "number of claws")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--k", *k, "leaves per claw")->check(CLI::Range(2, 1000))
        ->capture_default_str();
    cmd->add_flag("--companion", *companion, "also print the two-circuit companion");
    cmd->add_flag("--tf-test", *tf_test, "relate the graph and its companion");
    cmd->add_flag("--canonical", *canonical, "print canonical graph6 forms");
    cmd->callback([&cfg, n, k, companion, tf_test, canonical] {
      run_claw(*n, *k, *companion, *tf_test, *canonical, cfg);
    });
  }
  {
    auto* cmd = app.add_subcommand(
        "seed", "circuit seed pair with optional growth operations");
    cmd->fallthrough();
    auto k = std::make_shared<int>(3);
    auto entangled = std::make_shared<int>(0);
    auto split = std::make_shared<int>(0);
    auto pins = std::make_shared<std::vector<std::string>>();
    auto tf_test = std::make_shared<bool>(false);
    auto canonical = std::make_shared<bool>(false);
    cmd->add_option("--k", *k, "circuit length (odd, >= 3)")->capture_default_str();
    cmd->add_option("--entangled-edges", *entangled,
                    "add edges on the first E entangled pairs (loops appear on "
                    "the right side)")
        ->capture_default_str();
    cmd->add_option("--split-pairs", *split,
                    "add the first S complementary split-image edge pairs")
        ->capture_default_str();
    cmd->add_option("--pin", *pins,
                    "attach a pin vertex to entangled pairs, e.g. --pin 0,3 "
                    "(repeatable)");
    cmd->add_flag("--tf-test", *tf_test, "relate the two sides");
    cmd->add_flag("--canonical", *canonical, "print canonical graph6 forms");
    cmd->callback([&cfg, k, entangled, split, pins, tf_test, canonical] {
      run_seed(*k, *entangled, *split, *pins, *tf_test, *canonical, cfg);
    });
  }
  {
    auto* cmd = app.add_subcommand(
        "substitute", "expand an odd-degree twin pair into circuits");
    cmd->fallthrough();
    auto src = std::make_shared<GraphSource>();
    auto at = std::make_shared<std::string>();
    auto tf_test = std::make_shared<bool>(false);
    auto canonical = std::make_shared<bool>(false);
    add_graph_source(cmd, *src);
    cmd->add_option("--at", *at, "the twin pair to expand, e.g. --at 0,1");
    cmd->add_flag("--tf-test", *tf_test, "relate the two resulting graphs");
    cmd->add_flag("--canonical", *canonical, "print canonical graph6 forms");
    cmd->callback([&cfg, src, at, tf_test, canonical] {
      run_substitute(*src, *at, *tf_test, *canonical, cfg);
    });
  }
  {
    auto* cmd = app.add_subcommand(
        "census", "group a graph6 file by double-cover certificate");
    cmd->fallthrough();
    auto input = std::make_shared<std::string>();
    auto output = std::make_shared<std::string>();
    auto include_disconnected = std::make_shared<bool>(false);
    auto format = std::make_shared<std::string>("text");
    cmd->add_option("input", *input, "graph6 file, one graph per line")->required();
    cmd->add_option("-o,--output", *output, "also write the catalog to this file");
    cmd->add_flag("--include-disconnected", *include_disconnected,
                  "admit disconnected graphs into the census");
    cmd->add_option("--format", *format, "stdout format")
        ->check(CLI::IsMember({"text", "catalog-lines"}))
        ->capture_default_str();
    cmd->callback([&cfg, input, output, include_disconnected, format] {
      run_census(*input, *output, *include_disconnected, *format, cfg);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const capacity_error& e) {
    std::cerr << "error (capacity): " << e.what() << "\n";
    return 2;
  } catch (const internal_error& e) {
    std::cerr << "error (internal): " << e.what() << "\n";
    return 3;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "error (internal): " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error (internal): " << e.what() << "\n";
    return 3;
  }
  return 0;
}
