// Multicast network simulator: layered random-coding topologies, a fixed
// diamond network, and per-packet bookkeeping for header-scheme experiments.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncv/header.hpp"

namespace ncv::sim {

// Directed acyclic multicast network. Node ids are a topological order:
// sources occupy [0, n_sources), relays follow layer by layer, and the
// terminal is the last node. Every edge satisfies from < to. Edges are
// grouped by target node; within one target the order is the order in
// which the node consumes its inputs (lane input first for relays).
struct Topology {
  unsigned n_sources = 0;
  unsigned n_nodes = 0;
  unsigned terminal = 0;
  unsigned relay_layers = 0;
  std::vector<std::pair<unsigned, unsigned>> edges;
  // Source ids per mixing block; packets only combine within a block.
  std::vector<std::vector<unsigned>> blocks;

  // "S3", "I7", "T0".
  std::string node_name(unsigned id) const;
};

struct TopologyConfig {
  unsigned n_sources = 50;
  unsigned relay_layers = 2;
  // Sources per block; bounds the support of every coding vector.
  unsigned locality = 10;
  // Extra relays per block per layer. The surplus keeps each layer's
  // random mixing full-rank with high probability.
  unsigned layer_margin = 2;
  // Target in-degree for relays (lane edge plus random cross edges).
  unsigned min_indegree = 3;
  // Additional terminal edges from random last-layer relays, carrying
  // independently drawn combinations.
  unsigned terminal_extra_edges = 2;
};

// Deterministic for a given (config, seed).
Topology generate_topology(const TopologyConfig& cfg, std::uint64_t seed);

// Four sources, two merging relays, one bottleneck relay:
//   S0 -> I0, I1;  S1 -> I0;  S2 -> I1;  I0, I1 -> I2;  I2 -> T0;  S3 -> T0.
// The bottleneck I2 sees inputs whose counters sum past the true support,
// which is the canonical counter-overestimate situation.
Topology diamond_topology();

// One line per edge: "<from-name> <to-name>\n", e.g. "S0 I1".
std::string to_edge_list(const Topology& topo);

// Max-flow with unit edge capacities from the given source set to sink.
// Equals the number of edge-disjoint paths.
unsigned min_cut_edges(const Topology& topo, const std::vector<unsigned>& sources,
                       unsigned sink);

enum class Enforcement {
  None,        // combine every input
  Counter,     // drop inputs while the counter sum exceeds the scheme's m
  IdPopcount,  // drop inputs while the OR of ID segments has popcount > m
};

const char* enforcement_name(Enforcement e);

struct SimConfig {
  // Scheme whose headers ride along with every packet. Empty: track true
  // coding vectors only (ground-truth mode; enforcement must be None).
  std::optional<codec::SchemeConfig> scheme;
  Enforcement enforcement = Enforcement::None;
  unsigned trials = 100;
  std::uint64_t seed = 1;
  unsigned payload_len = 16;
};

struct SimReport {
  unsigned n = 0;
  unsigned trials = 0;
  std::string scheme;       // "none", "error", "erasure", "list"
  std::string enforcement;  // "none", "counter", "id-popcount"
  std::uint64_t seed = 0;

  // Trials where every source payload was reconstructed at the terminal.
  unsigned full_recoveries = 0;
  // Terminal packets whose header did not decode to a coding vector.
  unsigned decode_failures = 0;
  // Violations of counter >= id-popcount >= weight, of decoded-vs-true
  // agreement, or of payload conservation.
  unsigned invariant_violations = 0;
  // Combination attempts whose counter sum exceeded the true support size.
  unsigned overestimate_events = 0;
  // Overestimate events where the support itself was still within m,
  // i.e. ID-based enforcement would have allowed the combination.
  unsigned overestimate_within_m = 0;
  unsigned packets_delivered = 0;
  unsigned max_seen_weight = 0;
  // Largest ID-segment popcount on any packet (erasure scheme only).
  unsigned max_id_popcount = 0;
  double avg_terminal_rank = 0.0;
};

// Runs cfg.trials independent sessions over the topology. Trial t uses an
// RNG seeded with cfg.seed + t, so reports are reproducible and individual
// trials can be re-run in isolation.
SimReport run_multicast(const Topology& topo, const SimConfig& cfg);

// Rank-deficiency histogram of the terminal's true coding-vector matrix:
// result[d] counts trials where the terminal's rank was n_sources - d.
// Uses ground-truth vectors, so it needs no header scheme.
std::vector<unsigned> measure_rank_loss(const Topology& topo, unsigned trials,
                                        std::uint64_t seed);

std::string to_json_string(const SimReport& report);
std::string csv_header();
std::string to_csv_row(const SimReport& report);

}  // namespace ncv::sim
