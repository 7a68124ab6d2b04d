#include <doctest.h>

#include <algorithm>
#include <memory>
#include <set>
#include <string>

#include <json.hpp>

#include "ncv/netsim.hpp"

using ncv::codec::Scheme;
using ncv::gf::Field;
using ncv::sim::Enforcement;
using ncv::sim::SimConfig;
using ncv::sim::Topology;
using ncv::sim::TopologyConfig;

namespace {

TopologyConfig small_cfg() {
  TopologyConfig cfg;
  cfg.n_sources = 20;
  cfg.relay_layers = 2;
  cfg.locality = 10;
  return cfg;
}

}  // namespace

TEST_SUITE("netsim") {

TEST_CASE("generated topologies are deterministic and well formed") {
  const TopologyConfig cfg = small_cfg();
  const Topology a = ncv::sim::generate_topology(cfg, 7);
  const Topology b = ncv::sim::generate_topology(cfg, 7);
  CHECK(a.edges == b.edges);
  CHECK(a.blocks == b.blocks);
  const Topology c = ncv::sim::generate_topology(cfg, 8);
  CHECK(a.edges != c.edges);

  CHECK(a.n_sources == 20);
  CHECK(a.terminal == a.n_nodes - 1);
  CHECK(a.node_name(0) == "S0");
  CHECK(a.node_name(a.n_sources) == "I0");
  CHECK(a.node_name(a.terminal) == "T0");

  // Blocks partition the sources and respect the locality bound.
  std::set<unsigned> seen;
  for (const auto& blk : a.blocks) {
    CHECK(blk.size() <= cfg.locality);
    for (unsigned s : blk) {
      CHECK(s < a.n_sources);
      CHECK(seen.insert(s).second);
    }
  }
  CHECK(seen.size() == a.n_sources);

  // Edges are topologically ordered and grouped by target.
  unsigned last_target = 0;
  for (const auto& [from, to] : a.edges) {
    CHECK(from < to);
    CHECK(to < a.n_nodes);
    CHECK(to >= last_target);
    last_target = to;
  }

  // Every non-source node has inputs; relays reach the configured degree
  // when enough upstream nodes exist.
  std::vector<unsigned> indeg(a.n_nodes, 0);
  for (const auto& e : a.edges) ++indeg[e.second];
  for (unsigned v = a.n_sources; v < a.n_nodes; ++v) CHECK(indeg[v] >= 1);
  for (unsigned v = a.n_sources; v + 1 < a.n_nodes; ++v)
    CHECK(indeg[v] >= std::min<unsigned>(cfg.min_indegree, 10));
}

TEST_CASE("every block keeps an edge-disjoint path per source") {
  const TopologyConfig cfg = small_cfg();
  const Topology topo = ncv::sim::generate_topology(cfg, 3);
  for (const auto& blk : topo.blocks) {
    const unsigned cut = ncv::sim::min_cut_edges(topo, blk, topo.terminal);
    CHECK(cut >= blk.size());
  }
  std::vector<unsigned> all_sources(topo.n_sources);
  for (unsigned s = 0; s < topo.n_sources; ++s) all_sources[s] = s;
  unsigned terminal_indeg = 0;
  for (const auto& e : topo.edges)
    if (e.second == topo.terminal) ++terminal_indeg;
  const unsigned all = ncv::sim::min_cut_edges(topo, all_sources, topo.terminal);
  CHECK(all >= topo.n_sources);
  CHECK(all <= terminal_indeg);
}

TEST_CASE("diamond topology is the fixed bottleneck network") {
  const Topology d = ncv::sim::diamond_topology();
  CHECK(d.n_sources == 4);
  CHECK(d.n_nodes == 8);
  CHECK(d.terminal == 7);
  using E = std::pair<unsigned, unsigned>;
  CHECK(d.edges == std::vector<E>{{0, 4}, {1, 4}, {0, 5}, {2, 5}, {4, 6}, {5, 6},
                                  {6, 7}, {3, 7}});
  // Two edges enter the terminal, so at most two disjoint paths exist and
  // full rank is impossible by design.
  CHECK(ncv::sim::min_cut_edges(d, {0, 1, 2, 3}, d.terminal) == 2);
  const auto el = ncv::sim::to_edge_list(d);
  CHECK(el.find("S0 I0\n") != std::string::npos);
  CHECK(el.find("S3 T0\n") != std::string::npos);
}

TEST_CASE("rank-loss histogram counts trials by deficiency") {
  const Topology d = ncv::sim::diamond_topology();
  const auto hist = ncv::sim::measure_rank_loss(d, 40, 5);
  unsigned total = 0;
  for (unsigned h : hist) total += h;
  CHECK(total == 40);
  CHECK(hist[0] == 0);  // terminal in-degree 2 caps the rank below 4
  CHECK(hist[1] == 0);

  const Topology g = ncv::sim::generate_topology(small_cfg(), 11);
  const auto gh = ncv::sim::measure_rank_loss(g, 40, 5);
  total = 0;
  for (unsigned h : gh) total += h;
  CHECK(total == 40);
  CHECK(gh[0] >= 36);  // layer margin keeps the mixing full-rank
}

TEST_CASE("ground-truth simulation recovers payloads without any scheme") {
  const Topology g = ncv::sim::generate_topology(small_cfg(), 11);
  SimConfig sc;
  sc.trials = 25;
  sc.seed = 9;
  const auto rep = ncv::sim::run_multicast(g, sc);
  CHECK(rep.n == 20);
  CHECK(rep.scheme == "none");
  CHECK(rep.invariant_violations == 0);
  CHECK(rep.decode_failures == 0);
  CHECK(rep.full_recoveries == 25);
  CHECK(rep.avg_terminal_rank == doctest::Approx(20.0));
  CHECK(rep.max_seen_weight <= 10);  // locality bounds every support
}

TEST_CASE("erasure headers ride through a layered network") {
  const Topology g = ncv::sim::generate_topology(small_cfg(), 11);
  const auto f8 = std::make_shared<const Field>(8);
  SimConfig sc;
  sc.scheme = ncv::codec::make_scheme_config(Scheme::Erasure, 20, 10, f8);
  sc.trials = 25;
  sc.seed = 9;
  const auto rep = ncv::sim::run_multicast(g, sc);
  CHECK(rep.scheme == "erasure");
  CHECK(rep.invariant_violations == 0);
  CHECK(rep.decode_failures == 0);
  CHECK(rep.full_recoveries == 25);
  CHECK(rep.max_id_popcount <= 10);
  CHECK(rep.packets_delivered > 0);

  // Same configuration, same report.
  const auto rep2 = ncv::sim::run_multicast(g, sc);
  CHECK(ncv::sim::to_json_string(rep) == ncv::sim::to_json_string(rep2));
}

TEST_CASE("diamond bottleneck: counters overestimate, ID segments do not") {
  const Topology d = ncv::sim::diamond_topology();
  const auto f8 = std::make_shared<const Field>(8);

  SimConfig base;
  base.scheme = ncv::codec::make_scheme_config(Scheme::Erasure, 4, 3, f8);
  base.trials = 50;
  base.seed = 2;

  SimConfig counter = base;
  counter.enforcement = Enforcement::Counter;
  const auto rc = ncv::sim::run_multicast(d, counter);
  // I2's two inputs carry counters 2 + 2 = 4 although only sources 0..2
  // feed it, so the counter rule fires every trial and always drops an
  // input the ID rule would have kept.
  CHECK(rc.overestimate_events == 50);
  CHECK(rc.overestimate_within_m == 50);
  CHECK(rc.max_seen_weight <= 2);
  CHECK(rc.max_id_popcount <= 3);
  CHECK(rc.invariant_violations == 0);
  CHECK(rc.full_recoveries == 0);  // rank is capped at 2

  SimConfig idp = base;
  idp.enforcement = Enforcement::IdPopcount;
  const auto ri = ncv::sim::run_multicast(d, idp);
  CHECK(ri.max_id_popcount <= 3);  // never exceeds m: no packet is dropped
  CHECK(ri.max_seen_weight == 3);
  CHECK(ri.overestimate_events == 50);
  CHECK(ri.invariant_violations == 0);
  CHECK(ri.decode_failures == 0);
}

TEST_CASE("simulation configuration is validated") {
  const Topology d = ncv::sim::diamond_topology();
  const auto f8 = std::make_shared<const Field>(8);
  SimConfig sc;
  sc.payload_len = 0;
  CHECK_THROWS_AS(ncv::sim::run_multicast(d, sc), std::invalid_argument);
  sc.payload_len = 4;
  sc.enforcement = Enforcement::Counter;  // enforcement without a scheme
  CHECK_THROWS_AS(ncv::sim::run_multicast(d, sc), std::invalid_argument);
  sc.enforcement = Enforcement::IdPopcount;
  sc.scheme = ncv::codec::make_scheme_config(Scheme::Error, 4, 1, f8);
  CHECK_THROWS_AS(ncv::sim::run_multicast(d, sc), std::invalid_argument);
  sc.enforcement = Enforcement::None;
  sc.scheme = ncv::codec::make_scheme_config(Scheme::Erasure, 20, 10, f8);
  CHECK_THROWS_AS(ncv::sim::run_multicast(d, sc), std::invalid_argument);  // n mismatch
  Topology broken = d;
  broken.edges[0] = {5, 4};  // violates from < to
  sc.scheme.reset();
  CHECK_THROWS_AS(ncv::sim::run_multicast(broken, sc), std::invalid_argument);
}

TEST_CASE("report serialization") {
  const Topology d = ncv::sim::diamond_topology();
  SimConfig sc;
  sc.trials = 5;
  const auto rep = ncv::sim::run_multicast(d, sc);
  const auto j = nlohmann::json::parse(ncv::sim::to_json_string(rep));
  CHECK(j.at("n").get<unsigned>() == 4);
  CHECK(j.at("trials").get<unsigned>() == 5);
  CHECK(j.at("scheme").get<std::string>() == "none");
  CHECK(j.at("enforcement").get<std::string>() == "none");
  CHECK(j.contains("full_recoveries"));
  CHECK(j.contains("avg_terminal_rank"));

  const std::string head = ncv::sim::csv_header();
  const std::string row = ncv::sim::to_csv_row(rep);
  CHECK(std::count(head.begin(), head.end(), ',') ==
        std::count(row.begin(), row.end(), ','));
  CHECK(std::string(ncv::sim::enforcement_name(Enforcement::IdPopcount)) ==
        "id-popcount");
}

}  // TEST_SUITE
