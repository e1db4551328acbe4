#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "broadcast/algorithms.hpp"
#include "broadcast/bounds.hpp"
#include "broadcast/families.hpp"
#include "broadcast/game.hpp"
#include "broadcast/solver.hpp"
#include "broadcast/strategies.hpp"
#include "broadcast/symmetry.hpp"
#include "broadcast/verify.hpp"

using namespace broadcast;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;
constexpr int kExitVerify = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

Vertex parse_vertex(const std::string& text, const Graph& g) {
  std::size_t used = 0;
  int v = -1;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || v < 0 || v >= g.vertex_count()) throw UsageError("bad vertex '" + text + "'");
  return v;
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << j.dump(2) << '\n';
}

std::shared_ptr<AdversaryStrategy> optimal_for(const Graph& g, int k, const SolverOptions& so) {
  return std::make_shared<OptimalAdversary>(std::make_shared<const AttractorTable>(agents_attractor(g, k, so)));
}

// Cycle strategy when the graph is a cycle and k=2, otherwise solver play.
std::shared_ptr<AdversaryStrategy> block_strategy(const Graph& g, int k, const SolverOptions& so) {
  if (k == 2 && is_cycle_graph(g)) return std::make_shared<CycleAdversary>(g);
  return optimal_for(g, k, so);
}

std::shared_ptr<AdversaryStrategy> make_adversary(const std::string& name, const Graph& g,
                                                  const FamilySpec& spec, int k, const SolverOptions& so) {
  if (name == "cycle") {
    if (!is_cycle_graph(g)) throw UsageError("strategy 'cycle' needs a cycle graph");
    return std::make_shared<CycleAdversary>(g);
  }
  if (name == "grid-alt") {
    const auto* grid = std::get_if<family::Grid>(&spec);
    if (grid == nullptr) throw UsageError("strategy 'grid-alt' needs a grid:RxC graph");
    return std::make_shared<GridAlternatingAdversary>(grid->rows, grid->cols);
  }
  if (name == "sts") {
    auto w = has_k_sts(g, k, so.max_trees);
    if (!w) throw UsageError("graph has no spanning-tree symmetry witness for k=" + std::to_string(k));
    return std::make_shared<StsAdversary>(std::make_shared<const StsWitness>(std::move(*w)));
  }
  if (name == "optimal") return optimal_for(g, k, so);
  if (starts_with(name, "restrict:")) {
    Graph sub = read_edge_list_file(name.substr(9));
    if (sub.vertex_count() != g.vertex_count() || !g.contains_edges_of(sub) || !is_connected(sub)) {
      throw UsageError("restrict: file must hold a connected spanning subgraph of the board");
    }
    return std::make_shared<RestrictToSubgraph>(block_strategy(sub, k, so), g);
  }
  if (starts_with(name, "cutlift:")) {
    Vertex v = parse_vertex(name.substr(8), g);
    if (!mask_has(cut_vertices(g), v)) throw UsageError("cutlift: vertex is not a cut vertex");
    for (VertexMask comp : components_without(g, bit(v))) {
      std::vector<Vertex> block = mask_to_vertices(comp | bit(v));
      Graph b = induced_subgraph(g, block);
      if (k > b.vertex_count()) continue;
      if (classify(b, k, PlacementRule::AdversaryPlaces, so).winner != Winner::Adversary) continue;
      return std::make_shared<CutVertexLift>(block_strategy(b, k, so), g, block, v);
    }
    throw UsageError("cutlift: no piece at that vertex is an Adversary win");
  }
  throw UsageError("unknown adversary strategy '" + name + "'");
}

std::shared_ptr<AgentsStrategy> make_agents(const std::string& name, const Graph& g, int k,
                                            const SolverOptions& so) {
  if (name == "greedy-source") return std::make_shared<GreedyToSourceAgents>();
  if (starts_with(name, "rendezvous:")) return std::make_shared<RendezvousAgents>(parse_vertex(name.substr(11), g));
  if (name == "optimal") {
    return std::make_shared<OptimalAgents>(std::make_shared<const AttractorTable>(agents_attractor(g, k, so)));
  }
  throw UsageError("unknown agents strategy '" + name + "'");
}

PlacementRule parse_rule(const std::string& s) {
  if (s == "adversary") return PlacementRule::AdversaryPlaces;
  if (s == "agents") return PlacementRule::AgentsPlace;
  throw UsageError("placement must be adversary or agents");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solver and strategy toolkit for the dynamic-graph broadcast game"};
  app.require_subcommand(1);

  unsigned threads = 1;
  std::size_t max_states = SolverOptions{}.max_states;
  std::size_t max_trees = SolverOptions{}.max_trees;
  app.add_option("--threads", threads, "Solver worker threads")->check(CLI::Range(1U, 256U));
  app.add_option("--max-states", max_states, "Solver state budget");
  app.add_option("--max-trees", max_trees, "Spanning tree budget");

  std::string graph_spec;
  int agents = 2;
  std::string placement = "adversary";
  auto* classify_cmd = app.add_subcommand("classify", "Decide the winner and optimal time");
  classify_cmd->add_option("--graph", graph_spec, "Graph spec, e.g. cycle:5")->required();
  classify_cmd->add_option("--agents", agents, "Number of agents k")->required();
  classify_cmd->add_option("--placement", placement, "adversary|agents");

  int ignorant = 1;
  int knowledgeable = 1;
  auto* config_cmd = app.add_subcommand("config", "Times for x ignorant and y knowledgeable agents");
  config_cmd->add_option("--graph", graph_spec)->required();
  config_cmd->add_option("--ignorant", ignorant)->required();
  config_cmd->add_option("--knowledgeable", knowledgeable)->required();

  std::string adversary_name;
  std::string agents_name;
  int rounds = 1000;
  std::string trace_path;
  std::optional<int> play_agents;
  auto* play_cmd = app.add_subcommand("play", "Play two strategies against each other");
  play_cmd->add_option("--graph", graph_spec)->required();
  play_cmd->add_option("--adversary", adversary_name)->required();
  play_cmd->add_option("--agents-strategy", agents_name)->required();
  play_cmd->add_option("--agents", play_agents, "Number of agents (grid-alt defaults to its pattern)");
  play_cmd->add_option("--rounds", rounds, "Round cap")->check(CLI::PositiveNumber);
  play_cmd->add_option("--trace", trace_path, "Write the round trace as JSON");

  std::string witness_path;
  auto* sts_cmd = app.add_subcommand("check-sts", "Search a spanning-tree symmetry witness");
  sts_cmd->add_option("--graph", graph_spec)->required();
  sts_cmd->add_option("--k", agents)->required();
  sts_cmd->add_option("--witness", witness_path, "Write the witness as JSON");

  int bx = 1;
  int by = 1;
  auto* bounds_cmd = app.add_subcommand("bounds", "Set-diameter and time lower bounds");
  bounds_cmd->add_option("--graph", graph_spec)->required();
  bounds_cmd->add_option("--x", bx)->required();
  bounds_cmd->add_option("--y", by)->required();

  std::string out_path;
  auto* generate_cmd = app.add_subcommand("generate", "Write a graph as an edge list");
  generate_cmd->add_option("--graph", graph_spec)->required();
  generate_cmd->add_option("--out", out_path);

  std::string suite = "all";
  std::string criterion;
  std::uint64_t seed = VerifyOptions{}.seed;
  auto* verify_cmd = app.add_subcommand("verify", "Run the reproduction checklist");
  verify_cmd->add_option("--suite", suite)->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--criterion", criterion, "Run one criterion by id");
  verify_cmd->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  SolverOptions so;
  so.threads = threads;
  so.max_states = max_states;
  so.max_trees = max_trees;

  try {
    if (verify_cmd->parsed()) {
      VerifyOptions vo;
      vo.threads = threads;
      vo.seed = seed;
      std::vector<CriterionResult> results;
      if (!criterion.empty()) {
        results.push_back(run_criterion(criterion, vo));
      } else {
        results = run_suite(suite, vo);
      }
      bool ok = true;
      for (const auto& r : results) {
        ok = ok && r.passed;
        std::printf("%-4s %-5s %-62s %7.2fs  %s\n", r.passed ? "PASS" : "FAIL", r.id.c_str(), r.title.c_str(),
                    r.seconds, r.detail.c_str());
      }
      return ok ? kExitOk : kExitVerify;
    }

    FamilySpec spec = parse_family_spec(graph_spec);
    Graph g = generate(spec);
    nlohmann::json out;

    if (classify_cmd->parsed()) {
      out = to_json(classify(g, agents, parse_rule(placement), so));
    } else if (config_cmd->parsed()) {
      out = to_json(classify_config(g, ignorant, knowledgeable, so));
    } else if (play_cmd->parsed()) {
      int k = play_agents.value_or(2);
      if (!play_agents && adversary_name == "grid-alt") {
        const auto* grid = std::get_if<family::Grid>(&spec);
        if (grid != nullptr) k = grid_pattern_placement(grid->rows, grid->cols).agent_count();
      }
      auto adv = make_adversary(adversary_name, g, spec, k, so);
      auto ag = make_agents(agents_name, g, k, so);
      std::optional<GameState> start = adv->designated_placement(k);
      if (!start) start = optimal_for(g, k, so)->designated_placement(k);
      if (!start) throw UsageError("no starting placement for k=" + std::to_string(k));
      PlayResult result = play(g, *start, *adv, *ag, rounds);
      out = {{"adversary", adv->name()},
             {"agents", ag->name()},
             {"start", to_json(*start)},
             {"outcome", to_json(result.outcome)}};
      if (!trace_path.empty()) write_json_file(trace_path, trace_to_json(result.trace));
    } else if (sts_cmd->parsed()) {
      auto w = has_k_sts(g, agents, so.max_trees);
      out = {{"found", w.has_value()}, {"k", agents}};
      if (w) {
        out["entries"] = w->entries.size();
        if (!witness_path.empty()) write_json_file(witness_path, to_json(*w));
      }
    } else if (bounds_cmd->parsed()) {
      GameState s = placement_for_bound(g, bx, by);
      int ysd = y_set_diameter(g, by);
      out = {{"y_set_diameter", ysd},
             {"placement", to_json(s)},
             {"separation", initial_separation(g, s)},
             {"time_lower_bound", to_json(time_lower_bound(g, s))}};
      if (is_tree(g) && g.vertex_count() >= 2) out["tree_two_agent_time"] = tree_two_agent_bound(g);
      if (const auto* p = std::get_if<family::Path>(&spec)) {
        PathTimes pt = path_time_bounds(p->n, bx, by);
        out["path_first_spread"] = pt.first_spread;
        out["path_all_knowledgeable"] = pt.all_knowledgeable;
      }
    } else if (generate_cmd->parsed()) {
      std::string text = format_edge_list(g);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream f(out_path);
        if (!f) throw UsageError("cannot write " + out_path);
        f << text;
      }
      return kExitOk;
    }
    std::cout << out.dump(2) << '\n';
    return kExitOk;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
