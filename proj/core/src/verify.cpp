#include "broadcast/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>

#include "broadcast/algorithms.hpp"
#include "broadcast/bounds.hpp"
#include "broadcast/constructions.hpp"
#include "broadcast/families.hpp"
#include "broadcast/isomorphism.hpp"
#include "broadcast/solver.hpp"
#include "broadcast/strategies.hpp"
#include "broadcast/symmetry.hpp"

namespace broadcast {

namespace {

class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checked_;
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& text) { notes_.push_back(text); }

  CriterionResult finish(std::string id, std::string title) const {
    CriterionResult r;
    r.id = std::move(id);
    r.title = std::move(title);
    r.passed = failures_.empty() && checked_ > 0;
    std::ostringstream out;
    out << checked_ << " checks, " << failures_.size() << " failed";
    for (std::size_t i = 0; i < failures_.size() && i < 5; ++i) out << "; " << failures_[i];
    if (failures_.size() > 5) out << "; ...";
    for (const auto& n : notes_) out << " | " << n;
    r.detail = out.str();
    return r;
  }

 private:
  int checked_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

SolverOptions solver_options(const VerifyOptions& o) {
  SolverOptions s;
  s.threads = o.threads;
  return s;
}

std::string describe(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.vertex_count() << " E={";
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (i > 0) out << ' ';
    out << g.edges()[i].u << '-' << g.edges()[i].v;
  }
  out << '}';
  return out.str();
}

std::string winner_name(const Classification& c) { return to_string(c.winner); }

// Classification outcome memoized per isomorphism class.
class ClassifyCache {
 public:
  explicit ClassifyCache(SolverOptions o) : options_(o) {}
  Winner winner(const Graph& g, int k) {
    auto key = std::make_pair(canonical_form(g), k);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Winner w = classify(g, k, PlacementRule::AdversaryPlaces, options_).winner;
    cache_.emplace(key, w);
    return w;
  }

 private:
  SolverOptions options_;
  std::map<std::pair<CanonicalForm, int>, Winner> cache_;
};

CriterionResult trees(const VerifyOptions& o) {
  Tally t;
  int classes = 0;
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& tree : tree_classes(n)) {
      ++classes;
      for (int k = 2; k <= std::min(4, n); ++k) {
        auto c = classify(tree, k, PlacementRule::AdversaryPlaces, solver_options(o));
        t.expect(c.winner == Winner::Agents, "tree " + describe(tree) + " k=" + std::to_string(k));
      }
    }
  }
  t.note(std::to_string(classes) + " tree classes on 2..7 vertices");
  return t.finish("1", "trees are Agents wins for k in {2,3,4}");
}

CriterionResult cycles(const VerifyOptions& o) {
  Tally t;
  for (int m = 5; m <= 8; ++m) {
    Graph c = cycle_graph(m);
    t.expect(classify(c, 2, PlacementRule::AdversaryPlaces, solver_options(o)).winner == Winner::Adversary,
             "C_" + std::to_string(m) + " k=2 should be Adversary");
    t.expect(classify(c, 3, PlacementRule::AdversaryPlaces, solver_options(o)).winner == Winner::Agents,
             "C_" + std::to_string(m) + " k=3 should be Agents");
    CycleAdversary adv(c);
    t.expect(!refute_adversary_strategy(c, 2, adv).has_value(),
             "cycle strategy refuted on C_" + std::to_string(m));
  }
  Graph c4 = cycle_graph(4);
  auto cls = classify(c4, 2, PlacementRule::AdversaryPlaces, solver_options(o));
  CycleAdversary adv4(c4);
  auto ce = refute_adversary_strategy(c4, 2, adv4);
  bool consistent = (cls.winner == Winner::Agents) == ce.has_value();
  t.expect(consistent, "C_4: solver and cycle-strategy refutation disagree");
  t.note("C_4 k=2: solver says " + winner_name(cls) +
         (cls.optimal_time ? " in " + std::to_string(*cls.optimal_time) : std::string()) +
         ", cycle strategy " + (ce ? "refuted in " + std::to_string(ce->line.size()) + " rounds" : "holds"));
  return t.finish("2", "cycles: k=2 Adversary, k=3 Agents for m=5..8; C_4 consistent");
}

CriterionResult cliques(const VerifyOptions& o) {
  Tally t;
  auto check = [&](int m, int k, Winner want) {
    auto c = classify(complete_graph(m), k, PlacementRule::AdversaryPlaces, solver_options(o));
    t.expect(c.winner == want, "K_" + std::to_string(m) + " k=" + std::to_string(k) + " gave " + winner_name(c));
  };
  check(5, 2, Winner::Adversary);
  check(5, 3, Winner::Adversary);
  check(5, 4, Winner::Agents);
  check(6, 2, Winner::Adversary);
  check(6, 3, Winner::Adversary);
  return t.finish("3", "cliques: K_5 Adversary for k<4, Agents at k=4; K_6 k=2,3 Adversary");
}

CriterionResult theta(const VerifyOptions& o) {
  Tally t;
  auto check = [&](const std::vector<int>& d, int k, Winner want) {
    auto c = classify(theta_graph(d), k, PlacementRule::AdversaryPlaces, solver_options(o));
    t.expect(c.winner == want, to_string(FamilySpec{family::Theta{d}}) + " k=" + std::to_string(k) +
                                   " gave " + winner_name(c));
  };
  check({3, 3}, 2, Winner::Adversary);
  check({3, 3}, 3, Winner::Agents);
  check({3, 3, 3}, 2, Winner::Adversary);
  check({3, 3, 3}, 3, Winner::Adversary);
  check({3, 3, 3}, 4, Winner::Agents);
  for (const auto& d : std::vector<std::vector<int>>{{2, 2}, {1, 2}}) {
    Graph g = theta_graph(d);
    for (int k = 2; k <= std::min(3, g.vertex_count()); ++k) {
      auto c = classify(g, k, PlacementRule::AdversaryPlaces, solver_options(o));
      t.note(to_string(FamilySpec{family::Theta{d}}) + " k=" + std::to_string(k) + ": " + winner_name(c));
    }
  }
  return t.finish("4", "generalized theta graphs");
}

CriterionResult monotonicity(const VerifyOptions& o) {
  Tally t;
  ClassifyCache cache(solver_options(o));
  int pairs = 0;
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& h : connected_graph_classes(n)) {
      for (const Graph& g : connected_spanning_subgraphs(h)) {
        ++pairs;
        for (int k = 2; k <= std::min(3, n); ++k) {
          if (cache.winner(g, k) == Winner::Adversary) {
            t.expect(cache.winner(h, k) == Winner::Adversary,
                     "G=" + describe(g) + " H=" + describe(h) + " k=" + std::to_string(k));
          }
        }
      }
    }
  }
  t.note(std::to_string(pairs) + " spanning pairs");
  return t.finish("5", "spanning-subgraph monotonicity on <=5 vertices");
}

CriterionResult hamiltonian(const VerifyOptions& o) {
  Tally t;
  std::mt19937_64 rng(o.seed);
  for (int trial = 0; trial < 20; ++trial) {
    int n = std::uniform_int_distribution<int>(5, 7)(rng);
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Edge> cycle_edges;
    for (int i = 0; i < n; ++i) {
      cycle_edges.push_back(make_edge(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>((i + 1) % n)]));
    }
    std::vector<Edge> edges = cycle_edges;
    std::bernoulli_distribution chord(0.4);
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        if (chord(rng)) edges.push_back(Edge{a, b});
      }
    }
    Graph g(n, edges);
    Graph c(n, cycle_edges);
    t.expect(is_hamiltonian(g), "generated graph not Hamiltonian: " + describe(g));
    t.expect(classify(g, 2, PlacementRule::AdversaryPlaces, solver_options(o)).winner == Winner::Adversary,
             "solver: " + describe(g));
    RestrictToSubgraph adv(std::make_shared<CycleAdversary>(c), g);
    t.expect(!refute_adversary_strategy(g, 2, adv).has_value(), "restricted cycle strategy refuted on " + describe(g));
  }
  return t.finish("6", "Hamiltonian graphs on 5..7 vertices are Adversary wins at k=2");
}

CriterionResult cut_vertex(const VerifyOptions& o) {
  Tally t;
  struct Block {
    std::string name;
    Graph g;
    int k;
  };
  std::vector<Block> blocks{{"C_5", cycle_graph(5), 2}, {"K_5", complete_graph(5), 3},
                            {"theta:3,3,3", theta_graph({3, 3, 3}), 3}};
  std::vector<std::pair<std::string, Graph>> rests{
      {"P_3", path_graph(3)}, {"C_3", cycle_graph(3)}, {"K_3", complete_graph(3)}};
  for (const auto& b : blocks) {
    std::shared_ptr<AdversaryStrategy> block_strategy;
    if (is_cycle_graph(b.g) && b.k == 2) {
      block_strategy = std::make_shared<CycleAdversary>(b.g);
    } else {
      auto table = std::make_shared<const AttractorTable>(agents_attractor(b.g, b.k, solver_options(o)));
      block_strategy = std::make_shared<OptimalAdversary>(table);
    }
    std::vector<Vertex> block_vertices;
    for (Vertex v = 0; v < b.g.vertex_count(); ++v) block_vertices.push_back(v);
    for (const auto& [rname, r] : rests) {
      Graph h = vertex_sum(b.g, 0, r, 0);
      std::string label = b.name + " + " + rname;
      t.expect(classify(h, b.k, PlacementRule::AdversaryPlaces, solver_options(o)).winner == Winner::Adversary,
               "solver: " + label);
      CutVertexLift lift(block_strategy, h, block_vertices, 0);
      t.expect(!refute_adversary_strategy(h, b.k, lift).has_value(), "lifted strategy refuted: " + label);
    }
  }
  return t.finish("7", "cut-vertex lifting keeps Adversary wins");
}

CriterionResult contraction(const VerifyOptions& o) {
  Tally t;
  ClassifyCache cache(solver_options(o));
  int graphs = 0;
  int skipped = 0;
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : connected_graph_classes(n)) {
      if (bridges(g).empty()) continue;
      ++graphs;
      Contraction c = contract_all_bridges(g);
      for (int k = 2; k <= std::min(3, n); ++k) {
        if (k > c.graph.vertex_count()) {
          ++skipped;
          continue;
        }
        t.expect(cache.winner(g, k) == cache.winner(c.graph, k), describe(g) + " k=" + std::to_string(k));
      }
    }
  }
  t.note(std::to_string(graphs) + " graphs with bridges; " + std::to_string(skipped) +
         " pairs skipped where k exceeds the contracted vertex count");

  std::mt19937_64 rng(o.seed + 7);
  std::vector<Graph> bases{cycle_graph(5), complete_graph(4), theta_graph({3, 3}), cycle_graph(6),
                           Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}})};
  for (int inst = 0; inst < 10; ++inst) {
    const Graph& g = bases[static_cast<std::size_t>(inst) % bases.size()];
    std::vector<int> lengths(static_cast<std::size_t>(g.vertex_count()), 0);
    int budget = 1 + inst % 3;
    while (budget-- > 0) {
      lengths[std::uniform_int_distribution<std::size_t>(0, lengths.size() - 1)(rng)] += 1;
    }
    Graph a = attach_paths(g, lengths);
    for (int k = 2; k <= 3; ++k) {
      t.expect(cache.winner(a, k) == cache.winner(g, k), "attach_paths on " + describe(g) + " k=" + std::to_string(k));
    }
  }
  return t.finish("8", "bridge contraction and path attachment preserve the winner");
}

CriterionResult grid(const VerifyOptions&) {
  Tally t;
  for (auto [rows, cols] : std::vector<std::pair<int, int>>{{3, 3}, {3, 4}}) {
    std::string label = std::to_string(rows) + "x" + std::to_string(cols);
    GridAlternatingAdversary adv(rows, cols);
    GreedyToSourceAgents agents;
    t.expect(adv.initial_state().agent_count() == (rows - 1) * (cols - 1) + 2, label + ": agent count");
    auto result = play(adv.graph(), adv.initial_state(), adv, agents, 100);
    auto* cyc = std::get_if<outcome::CycleDetected>(&result.outcome);
    t.expect(cyc != nullptr && cyc->period == 2, label + ": no period-2 cycle");
    bool frozen = true;
    for (const auto& r : result.trace) frozen = frozen && r.after.knowledgeable.size() == 1;
    t.expect(frozen, label + ": knowledge spread");
    auto long_run = play(adv.graph(), adv.initial_state(), adv, agents, 20);
    (void)long_run;
  }
  return t.finish("9", "grid Adversary freezes the greedy Agents with period 2");
}

CriterionResult symmetry(const VerifyOptions& o) {
  Tally t;
  auto w = has_k_sts(complete_graph(5), 2);
  t.expect(w.has_value(), "K_5 has no 2-STS witness");
  if (w) {
    std::string why;
    t.expect(validate_witness(*w, &why), "K_5 witness invalid: " + why);
    auto shared = std::make_shared<const StsWitness>(*w);
    for (auto rule : {PlacementRule::AdversaryPlaces, PlacementRule::AgentsPlace}) {
      StsAdversary adv(shared);
      t.expect(!refute_adversary_strategy(w->graph, 2, adv, rule).has_value(),
               std::string("witness strategy refuted under ") + to_string(rule));
    }
  }
  for (int n = 2; n <= 6; ++n) t.expect(!has_k_sts(path_graph(n), 2).has_value(), "P_" + std::to_string(n) + " has a witness");

  int witnesses = 0;
  int graphs = 0;
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : connected_graph_classes(n)) {
      ++graphs;
      auto wg = has_k_sts(g, 2);
      if (!wg) continue;
      ++witnesses;
      std::string why;
      t.expect(validate_witness(*wg, &why), "invalid witness for " + describe(g) + ": " + why);
      auto table = agents_attractor(g, 2, solver_options(o));
      t.expect(classify_with(table, PlacementRule::AdversaryPlaces).winner == Winner::Adversary,
               "witness but Agents win (Adversary places): " + describe(g));
      t.expect(classify_with(table, PlacementRule::AgentsPlace).winner == Winner::Adversary,
               "witness but Agents win (Agents place): " + describe(g));
    }
  }
  t.note(std::to_string(witnesses) + " of " + std::to_string(graphs) + " connected graphs on 2..6 vertices have a 2-STS");
  return t.finish("10", "spanning-tree symmetry implies Adversary wins");
}

CriterionResult path_times(const VerifyOptions& o) {
  Tally t;
  int floor_fit = 0;
  int cases = 0;
  for (int n = 2; n <= 8; ++n) {
    Graph p = path_graph(n);
    for (int x = 1; x <= 3; ++x) {
      for (int y = 1; y <= 2; ++y) {
        if (x + y > n) continue;
        auto got = classify_config(p, x, y, solver_options(o));
        auto want = path_time_bounds(n, x, y);
        ++cases;
        if (got.first_spread_time == (n - x - y) / 2 + 1) ++floor_fit;
        std::string label = "P_" + std::to_string(n) + " x=" + std::to_string(x) + " y=" + std::to_string(y);
        t.expect(got.first_spread_time == want.first_spread,
                 label + " first spread " +
                     (got.first_spread_time ? std::to_string(*got.first_spread_time) : "none") + " vs formula " +
                     std::to_string(want.first_spread));
        t.expect(got.win_time == want.all_knowledgeable,
                 label + " all knowledgeable " + (got.win_time ? std::to_string(*got.win_time) : "none") +
                     " vs formula " + std::to_string(want.all_knowledgeable));
      }
    }
  }
  t.note("first spread equals floor((n-x-y)/2)+1 in " + std::to_string(floor_fit) + " of " +
         std::to_string(cases) + " cases");
  return t.finish("11a", "path time formulas match the solver exactly");
}

CriterionResult tree_times(const VerifyOptions& o) {
  Tally t;
  for (int n = 2; n <= 8; ++n) {
    for (const Graph& tree : tree_classes(n)) {
      auto c = classify(tree, 2, PlacementRule::AdversaryPlaces, solver_options(o));
      t.expect(c.optimal_time == tree_two_agent_bound(tree),
               describe(tree) + " time " + (c.optimal_time ? std::to_string(*c.optimal_time) : "none") +
                   " vs ceil(d/2)=" + std::to_string(tree_two_agent_bound(tree)));
    }
  }
  return t.finish("11b", "two agents on a tree need exactly ceil(d/2)");
}

CriterionResult set_diameter_bound(const VerifyOptions& o) {
  Tally t;
  int agents_wins = 0;
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& g : connected_graph_classes(n)) {
      for (int y = 1; y <= 2; ++y) {
        if (y >= n) continue;
        int d = y_set_diameter(g, y);
        for (int x = 1; x <= 2; ++x) {
          if (x + y > n) continue;
          GameState start = placement_for_bound(g, x, y);
          t.expect(initial_separation(g, start) >= d, "placement separation below set-diameter: " + describe(g));
          auto table = config_attractor(g, x, y, Goal::AllKnowledgeable, solver_options(o));
          auto r = table.rank(start);
          if (!r) continue;
          ++agents_wins;
          t.expect(*r >= (d + 1) / 2, describe(g) + " x=" + std::to_string(x) + " y=" + std::to_string(y) +
                                          " time " + std::to_string(*r) + " < ceil(" + std::to_string(d) + "/2)");
        }
      }
    }
  }
  t.note(std::to_string(agents_wins) + " Agents-win placements, x,y in {1,2}");
  return t.finish("11c", "y-set-diameter lower bound on <=7 vertices");
}

CriterionResult separation_rate(const VerifyOptions& o) {
  Tally t;
  std::mt19937_64 rng(o.seed + 11);
  std::vector<Graph> pool;
  for (int n = 3; n <= 6; ++n) {
    for (const Graph& g : connected_graph_classes(n)) pool.push_back(g);
  }
  std::map<std::pair<std::size_t, int>, std::shared_ptr<const AttractorTable>> tables;
  int traces = 0;
  int attempts = 0;
  while (traces < 1000 && attempts < 20000) {
    ++attempts;
    std::size_t gi = std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng);
    const Graph& g = pool[gi];
    int k = std::uniform_int_distribution<int>(2, std::min(3, g.vertex_count()))(rng);
    auto& table = tables[{gi, k}];
    if (!table) table = std::make_shared<const AttractorTable>(agents_attractor(g, k, solver_options(o)));
    auto placements = initial_placements(g, k);
    const GameState& s0 = placements[std::uniform_int_distribution<std::size_t>(0, placements.size() - 1)(rng)];
    auto rank = table->rank(s0);
    if (!rank) continue;
    ++traces;
    OptimalAdversary adv(table);
    OptimalAgents agents(table);
    auto result = play(g, s0, adv, agents, *rank + 1);
    auto* win = std::get_if<outcome::AgentsWinAt>(&result.outcome);
    t.expect(win != nullptr && win->round == *rank, "optimal replay does not finish in rank rounds on " + describe(g));
    for (const auto& step : result.trace) {
      if (step.after.ignorant.empty()) break;
      int before = initial_separation(g, step.before);
      int after = initial_separation(g, step.after);
      t.expect(before - after <= 2, "separation dropped by " + std::to_string(before - after) + " on " + describe(g));
    }
  }
  t.expect(traces == 1000, "only " + std::to_string(traces) + " traces sampled");
  t.note(std::to_string(traces) + " optimal traces");
  return t.finish("11d", "separation shrinks by at most 2 per round on optimal play");
}

CriterionResult tree_reduction(const VerifyOptions& o) {
  Tally t;
  int graphs = 0;
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : connected_graph_classes(n)) {
      if (g.edge_count() > 8) continue;
      ++graphs;
      t.expect(tree_reduction_equivalence_check(g, 2, solver_options(o)), describe(g));
    }
  }
  t.note(std::to_string(graphs) + " graphs");
  return t.finish("12", "spanning trees suffice for Adversary");
}

template <class F>
std::function<CriterionResult(const VerifyOptions&)> timed(F f) {
  return [f](const VerifyOptions& o) {
    auto start = std::chrono::steady_clock::now();
    CriterionResult r = f(o);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  };
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {"1", "trees", "trees are Agents wins", timed(trees)},
      {"2", "cycles", "cycles", timed(cycles)},
      {"3", "cliques", "cliques", timed(cliques)},
      {"4", "theta", "generalized theta graphs", timed(theta)},
      {"5", "constructions", "spanning-subgraph monotonicity", timed(monotonicity)},
      {"6", "constructions", "Hamiltonian graphs", timed(hamiltonian)},
      {"7", "constructions", "cut-vertex lifting", timed(cut_vertex)},
      {"8", "constructions", "contraction and path attachment", timed(contraction)},
      {"9", "grid", "grid alternating Adversary", timed(grid)},
      {"10", "symmetry", "spanning-tree symmetry", timed(symmetry)},
      {"11a", "times", "path time formulas", timed(path_times)},
      {"11b", "times", "tree two-agent time", timed(tree_times)},
      {"11c", "times", "set-diameter lower bound", timed(set_diameter_bound)},
      {"11d", "times", "separation rate", timed(separation_rate)},
      {"12", "constructions", "tree reduction", timed(tree_reduction)},
  };
  return all;
}

std::vector<std::string> suite_names() {
  return {"trees", "cycles", "cliques", "theta", "grid", "constructions", "symmetry", "times", "all"};
}

std::vector<CriterionResult> run_suite(const std::string& suite, const VerifyOptions& options) {
  auto names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  std::vector<CriterionResult> out;
  for (const auto& c : criteria()) {
    if (suite == "all" || c.suite == suite) out.push_back(c.run(options));
  }
  return out;
}

CriterionResult run_criterion(const std::string& id, const VerifyOptions& options) {
  for (const auto& c : criteria()) {
    if (c.id == id) return c.run(options);
  }
  throw std::invalid_argument("unknown criterion '" + id + "'");
}

}  // namespace broadcast
