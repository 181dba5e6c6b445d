// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "builders.hpp"
#include "flood/atfree.hpp"
#include "flood/contraction.hpp"
#include "flood/decomp.hpp"
#include "flood/error.hpp"
#include "flood/generators.hpp"
#include "flood/ordering.hpp"
#include "flood/service.hpp"
#include "flood/solver.hpp"
#include "httplib.h"
#include "json.hpp"

namespace {

using namespace flood;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> failures;

  void fail(const std::string& why) {
    pass = false;
    if (failures.size() < 5) failures.push_back(why);
  }
};

int failed_criteria = 0;

// Strategy checks from every suite feed the strategy-validity criterion.
std::size_t strategies_checked = 0;
std::vector<std::string> strategy_failures;

void check_strategy(const ColoredGraph& g, Vertex source, const SolveResult& r, const std::string& where) {
  ++strategies_checked;
  auto shared = std::make_shared<const ColoredGraph>(g);
  const bool wins = simulate(shared, source, r.strategy).winning;
  if (!wins || r.strategy.length() != r.optimum)
    strategy_failures.push_back(where + ": length " + std::to_string(r.strategy.length()) + " optimum " +
                                std::to_string(r.optimum) + (wins ? "" : " (does not win)"));
}

void report(const std::string& name, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.1fs", secs);
  std::cout << (o.pass ? "PASS" : "FAIL") << "  " << name << "  [" << o.detail.str() << "; " << timing << "]\n";
  for (const auto& f : o.failures) std::cout << "      " << f << "\n";
  std::cout.flush();
  if (!o.pass) ++failed_criteria;
}

struct Sample {
  ColoredGraph graph;  // properly coloured contraction
  Instance raw;
  std::uint64_t seed;
};

// Interval and permutation instances whose contraction has 3..13 vertices
// and at most five colours.
std::vector<Sample> cocomparability_samples(std::size_t want, std::uint64_t salt) {
  std::vector<Sample> out;
  for (std::uint64_t seed = 1; out.size() < want; ++seed) {
    const Family fam = seed % 2 ? Family::Interval : Family::Permutation;
    const std::size_t n = 10 + (seed * 7 + salt) % 8;
    const std::size_t k = 3 + (seed + salt) % 3;
    const bool proper = (seed / 2 + salt) % 2 == 0;
    const Instance inst = testing::connected_instance(fam, n, k, seed * 1000003 + salt, proper);
    const Contraction con = contract_monochromatic(inst.graph, inst.source);
    if (con.graph.n() < 3 || con.graph.n() > 13) continue;
    out.push_back({con.graph, inst, seed});
  }
  return out;
}

void extreme_equivalence(Outcome& o) {
  const auto t0 = Clock::now();
  const auto samples = cocomparability_samples(200, 11);
  std::size_t checked = 0;
  for (const Sample& s : samples) {
    const ColoredGraph& g = s.graph;
    const Vertex source = *global_extremes(g).first();
    const SolveResult r = solve_extreme(g, source);
    check_strategy(g, source, r, "extreme seed " + std::to_string(s.seed));
    const std::size_t want = *oracle_min_moves(g, source).optimum;
    ++checked;
    if (r.optimum != want)
      o.fail("seed " + std::to_string(s.seed) + " source " + std::to_string(source) + ": solver " +
             std::to_string(r.optimum) + " oracle " + std::to_string(want));
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (secs > 300) o.fail("took " + std::to_string(secs) + "s, budget 300s");
  if (checked < 150) o.fail("only " + std::to_string(checked) + " instances");
  o.detail << checked << " instances, global-extreme sources, exact match required";
}

void general_equivalence(Outcome& o) {
  const auto samples = cocomparability_samples(200, 29);
  std::size_t checked = 0, pair = 0;
  for (const Sample& s : samples) {
    const Instance& inst = s.raw;
    const SolveResult r = solve(inst.graph, inst.source);
    check_strategy(inst.graph, inst.source, r, "general seed " + std::to_string(s.seed));
    const std::size_t want = *oracle_min_moves(inst.graph, inst.source, {20, 4'000'000}).optimum;
    ++checked;
    pair += r.method == SolveMethod::PairDp;
    if (r.optimum != want)
      o.fail("seed " + std::to_string(s.seed) + " (delta rule " + to_string(default_delta_rule()) + "): solver " +
             std::to_string(r.optimum) + " oracle " + std::to_string(want));
  }
  if (checked < 150) o.fail("only " + std::to_string(checked) + " instances");
  o.detail << checked << " instances, random sources, " << pair << " via pair DP, delta rule "
           << to_string(default_delta_rule());
}

void contraction_closure(Outcome& o) {
  std::size_t trials = 0;
  for (std::uint64_t seed = 1; trials < 1000; ++seed) {
    const Family fam = seed % 3 == 0 ? Family::Rejection : (seed % 3 == 1 ? Family::Interval : Family::Permutation);
    const Instance inst = testing::connected_instance(fam, fam == Family::Rejection ? 4 + seed % 9 : 6 + seed % 10, 3,
                                                      seed, false);
    const ColoredGraph& g = inst.graph;
    if (g.edge_count() == 0) continue;
    SplitMix64 rng(seed * 31);
    const Edge e = g.edges()[rng.below(g.edge_count())];
    const Contraction c = contract_edge(g, e.first, e.second, g.color(e.first));
    ++trials;
    if (auto at = find_asteroidal_triple(c.graph))
      o.fail("seed " + std::to_string(seed) + ": contracted graph has triple " + at->to_string());
    else if (testing::brute_has_at(c.graph))
      o.fail("seed " + std::to_string(seed) + ": definition-level search finds a triple");
  }
  o.detail << trials << " random edge contractions of AT-free graphs";
}

void game_invariance(Outcome& o) {
  std::size_t trials = 0, shrunk = 0;
  for (std::uint64_t seed = 1; trials < 200; ++seed) {
    SplitMix64 rng(seed);
    const std::size_t n = 4 + rng.below(9);
    const std::size_t k = 2 + rng.below(3);
    ColoredGraph g;
    if (seed % 2) {
      const double p = 0.2 + 0.4 * rng.unit();
      std::vector<Edge> edges;
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
          if (rng.unit() < p) edges.emplace_back(u, v);
      std::vector<Color> colors(n);
      for (auto& c : colors) c = static_cast<Color>(rng.below(k));
      g = ColoredGraph(n, edges, densify_colors(colors).first);
    } else {
      GenSpec spec;
      spec.family = Family::Grid;
      spec.rows = 2 + rng.below(2);
      spec.cols = n / spec.rows;
      spec.colors = k;
      spec.seed = seed;
      g = generate(spec);
    }
    const Instance inst = restrict_to_component(g, static_cast<Vertex>(rng.below(g.n())));
    const Contraction con = contract_monochromatic(inst.graph, inst.source);
    ++trials;
    shrunk += con.graph.n() < inst.graph.n();
    const auto a = oracle_min_moves(inst.graph, inst.source).optimum;
    const auto b = oracle_min_moves(con.graph, con.source).optimum;
    if (a != b) o.fail("seed " + std::to_string(seed) + ": " + std::to_string(*a) + " vs " + std::to_string(*b));
  }
  o.detail << trials << " coloured graphs (n <= 12), " << shrunk << " changed by contraction";
}

void decomposition(Outcome& o) {
  constexpr std::size_t kBudget = 100000;
  std::size_t instances = 0, checks = 0;
  for (std::uint64_t seed = 1; instances < 200; ++seed) {
    const Family fam = seed % 3 == 0 ? Family::Rejection : (seed % 3 == 1 ? Family::Interval : Family::Permutation);
    const Instance inst = testing::connected_instance(fam, fam == Family::Rejection ? 9 : 12, 3, seed, false);
    const ColoredGraph& g = inst.graph;
    ++instances;
    std::size_t here = 0;
    const std::size_t per_instance = kBudget - checks;
    for (Vertex x = 0; x < g.n() && here < per_instance; ++x) {
      for (Vertex y = 0; y < g.n() && here < per_instance; ++y) {
        if (x == y || g.has_edge(x, y)) continue;
        const VertexSet ixy = interval(g, x, y);
        for (Vertex z : ixy) {
          ++here;
          const VertexSet ixz = interval(g, x, z), izy = interval(g, z, y);
          VertexSet parts = ixz | izy;
          bool ok = !ixz.intersects(izy);
          for (const VertexSet& b : blocks_at(g, z))
            if (!b.intersects(ixz) && !b.intersects(izy) && b.is_subset_of(ixy)) parts |= b;
          if (!ok || parts != ixy - closed_neighborhood(g, z))
            o.fail("first theorem, seed " + std::to_string(seed) + " x " + std::to_string(x) + " y " +
                   std::to_string(y) + " z " + std::to_string(z));
        }
      }
      for (const VertexSet& b : blocks_at(g, x))
        for (Vertex y : b) {
          ++here;
          const VertexSet ixy = interval(g, x, y);
          VertexSet parts = ixy;
          for (const VertexSet& blk : blocks_at(g, y))
            if (!blk.intersects(ixy) && blk.is_subset_of(b)) parts |= blk;
          if (parts != b - closed_neighborhood(g, y))
            o.fail("second theorem, seed " + std::to_string(seed) + " x " + std::to_string(x) + " y " +
                   std::to_string(y));
        }
    }
    checks += here;
  }
  if (checks >= kBudget) o.detail << "budget reached; ";
  o.detail << instances << " AT-free instances, " << checks << " partition checks over all valid triples (budget "
           << kBudget << ")";
}

void chain_soundness(Outcome& o) {
  const auto samples = cocomparability_samples(100, 47);
  std::size_t strategies = 0, comparisons = 0;
  for (const Sample& s : samples) {
    const ColoredGraph& g = s.graph;
    const Vertex source = *global_extremes(g).first();
    const ChainStructure ch = build_chains(g, source);
    SplitMix64 rng(s.seed);
    for (int trial = 0; trial < 20; ++trial) {
      Strategy st;
      VertexSet t = initial_territory(g, source);
      while (t.size() < g.n()) {
        const Color c = static_cast<Color>(rng.below(g.k()));
        st.colors.push_back(c);
        t = conquer(g, t, c);
      }
      ++strategies;
      const auto steps = conquest_steps(g, source, st);
      for (Vertex x = 0; x < g.n(); ++x)
        for (Vertex p : ch.predecessors(x)) {
          ++comparisons;
          if (*steps[p] > *steps[x])
            o.fail("seed " + std::to_string(s.seed) + ": " + std::to_string(x) + " entered at move " +
                   std::to_string(*steps[x]) + " before its predecessor " + std::to_string(p));
        }
    }
  }
  o.detail << samples.size() << " extreme-source instances, " << strategies << " random winning strategies, "
           << comparisons << " order checks";
}

void known_values(Outcome& o) {
  std::size_t checks = 0;
  auto expect = [&](bool cond, const std::string& what) {
    ++checks;
    if (!cond) o.fail(what);
  };
  const auto c6 = find_asteroidal_triple(testing::cycle_graph({0, 1, 0, 1, 0, 1}));
  expect(c6 && c6->vertices == std::array<Vertex, 3>{0, 2, 4}, "C6 witness");
  try {
    solve(testing::cycle_graph({0, 1, 0, 1, 0, 1}), 0);
    expect(false, "C6 solve must refuse");
  } catch (const NotAtFree& e) {
    expect(e.witness().vertices == std::array<Vertex, 3>{0, 2, 4}, "C6 refusal witness");
  }
  const auto fig = find_asteroidal_triple(testing::figure_one());
  expect(fig && fig->vertices == std::array<Vertex, 3>{0, 3, 4}, "figure-one witness {x0, x, y}");
  for (std::size_t n = 1; n <= 13; ++n) {
    const ColoredGraph p = testing::alternating_path(n);
    for (Vertex i = 0; i < n; ++i) {
      const SolveResult r = solve(p, i);
      check_strategy(p, i, r, "path n " + std::to_string(n) + " i " + std::to_string(i));
      expect(r.optimum == std::max<std::size_t>(i, n - 1 - i),
             "P" + std::to_string(n) + " from " + std::to_string(i) + " gave " + std::to_string(r.optimum));
    }
  }
  for (std::size_t m = 1; m <= 8; ++m) {
    const SolveResult r = solve(testing::star(m), 0);
    check_strategy(testing::star(m), 0, r, "star " + std::to_string(m));
    expect(r.optimum == m, "star with " + std::to_string(m) + " leaves gave " + std::to_string(r.optimum));
  }
  o.detail << checks << " checks: C6, figure one, paths n <= 13 from every index, stars";
}

void strategy_validity(Outcome& o) {
  for (const auto& f : strategy_failures) o.fail(f);
  if (strategies_checked == 0) o.fail("no strategies were produced");
  o.detail << strategies_checked << " solver strategies simulated across all suites";
}

void hint_contract(Outcome& o) {
  GameService service;
  ServiceHost host(service);
  const int port = host.bind("127.0.0.1", 0);
  std::thread th([&] { host.listen(); });
  httplib::Client client("127.0.0.1", port);
  for (int i = 0; i < 200 && !client.Get("/games/x"); ++i) std::this_thread::sleep_for(std::chrono::milliseconds(10));

  std::size_t games = 0, moves = 0;
  for (std::uint64_t seed = 1; games < 50; ++seed) {
    json spec{{"family", seed % 2 ? "interval" : "permutation"},
              {"n", 8 + seed % 10},
              {"colors", 3 + seed % 3},
              {"seed", seed},
              {"proper", seed % 3 == 0}};
    auto created = client.Post("/games", json{{"generate", spec}}.dump(), "application/json");
    if (!created || created->status == 422) continue;
    if (created->status != 201) {
      o.fail("create returned " + std::to_string(created ? created->status : -1));
      continue;
    }
    json snap = json::parse(created->body);
    if (snap["finished"].get<bool>()) continue;
    ++games;
    const std::string id = snap["id"];
    auto remaining = snap["optimal_remaining"];
    while (!snap["finished"].get<bool>()) {
      auto h = client.Get("/games/" + id + "/hint");
      if (!h || h->status != 200) {
        o.fail("hint failed for game " + id);
        break;
      }
      const json hint = json::parse(h->body);
      if (hint["optimal_remaining"] != remaining) o.fail("hint and snapshot disagree in game " + id);
      auto mv = client.Post("/games/" + id + "/moves", json{{"color", hint["color"]}}.dump(), "application/json");
      if (!mv || mv->status != 200) {
        o.fail("move failed for game " + id);
        break;
      }
      snap = json::parse(mv->body);
      ++moves;
      if (snap["optimal_remaining"].get<int>() != remaining.get<int>() - 1)
        o.fail("game " + id + ": remaining went from " + remaining.dump() + " to " + snap["optimal_remaining"].dump());
      remaining = snap["optimal_remaining"];
    }
    if (snap["optimal_remaining"] != 0) o.fail("game " + id + " finished with remaining " + snap["optimal_remaining"].dump());
    client.Delete("/games/" + id);
  }
  host.stop();
  th.join();
  o.detail << games << " generated games over HTTP, " << moves << " hinted moves";
}

}  // namespace

int main() {
  std::cout << "bitset backend: " << simd::backend_name(simd::active_backend()) << "\n";
  report("oracle equivalence, extreme source", extreme_equivalence);
  report("oracle equivalence, general source", general_equivalence);
  report("contraction closure", contraction_closure);
  report("game invariance under contraction", game_invariance);
  report("decomposition theorems", decomposition);
  report("chain order soundness", chain_soundness);
  report("known values", known_values);
  report("strategy validity", strategy_validity);
  report("hint contract over HTTP", hint_contract);
  std::cout << (failed_criteria == 0 ? "all criteria passed" : std::to_string(failed_criteria) + " criteria failed")
            << "\n";
  return failed_criteria == 0 ? 0 : 1;
}
