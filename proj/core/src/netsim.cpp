#include "ncv/netsim.hpp"

#include <algorithm>
#include <cstdio>
#include <queue>
#include <stdexcept>

#include <json.hpp>

#include "ncv/linalg.hpp"
#include "ncv/rng.hpp"

namespace ncv::sim {

using gf::Field;
using gf::Symbol;

std::string Topology::node_name(unsigned id) const {
  if (id < n_sources) return "S" + std::to_string(id);
  if (id == terminal) return "T0";
  return "I" + std::to_string(id - n_sources);
}

Topology generate_topology(const TopologyConfig& cfg, std::uint64_t seed) {
  if (cfg.n_sources < 1 || cfg.relay_layers < 1 || cfg.locality < 1 ||
      cfg.min_indegree < 1)
    throw std::invalid_argument("generate_topology: bad config");

  Topology t;
  t.n_sources = cfg.n_sources;
  t.relay_layers = cfg.relay_layers;

  // Evenly split the sources into ceil(n/locality) blocks; every block size
  // stays <= locality.
  const unsigned nblocks = (cfg.n_sources + cfg.locality - 1) / cfg.locality;
  unsigned start = 0;
  for (unsigned b = 0; b < nblocks; ++b) {
    const unsigned left = nblocks - b;
    const unsigned size = (cfg.n_sources - start + left - 1) / left;
    std::vector<unsigned> ids(size);
    for (unsigned j = 0; j < size; ++j) ids[j] = start + j;
    t.blocks.push_back(std::move(ids));
    start += size;
  }

  Rng rng(seed);
  unsigned next_id = cfg.n_sources;
  std::vector<std::vector<unsigned>> prev = t.blocks;

  for (unsigned l = 1; l <= cfg.relay_layers; ++l) {
    std::vector<std::vector<unsigned>> cur(nblocks);
    for (unsigned b = 0; b < nblocks; ++b) {
      const auto& p = prev[b];
      const unsigned size = unsigned(t.blocks[b].size()) + cfg.layer_margin;
      for (unsigned j = 0; j < size; ++j) {
        const unsigned id = next_id++;
        cur[b].push_back(id);
        // Lane edge first: relay j extends a fixed path from prev node
        // j mod |prev|, so every prev node keeps a disjoint forward path.
        const unsigned lane = p[j % p.size()];
        t.edges.emplace_back(lane, id);
        const unsigned indeg = std::min<unsigned>(cfg.min_indegree, unsigned(p.size()));
        std::vector<unsigned> used{lane};
        while (unsigned(used.size()) < indeg) {
          const unsigned cand = p[rng.below(unsigned(p.size()))];
          if (std::find(used.begin(), used.end(), cand) == used.end()) {
            used.push_back(cand);
            t.edges.emplace_back(cand, id);
          }
        }
      }
    }
    prev = std::move(cur);
  }

  t.terminal = next_id++;
  t.n_nodes = next_id;
  std::vector<unsigned> last;
  for (const auto& p : prev) last.insert(last.end(), p.begin(), p.end());
  for (unsigned u : last) t.edges.emplace_back(u, t.terminal);
  for (unsigned e = 0; e < cfg.terminal_extra_edges; ++e)
    t.edges.emplace_back(last[rng.below(unsigned(last.size()))], t.terminal);
  return t;
}

Topology diamond_topology() {
  Topology t;
  t.n_sources = 4;
  t.n_nodes = 8;
  t.terminal = 7;
  t.relay_layers = 2;
  t.blocks = {{0, 1, 2, 3}};
  t.edges = {{0, 4}, {1, 4}, {0, 5}, {2, 5}, {4, 6}, {5, 6}, {6, 7}, {3, 7}};
  return t;
}

std::string to_edge_list(const Topology& topo) {
  std::string out;
  for (auto [u, v] : topo.edges) {
    out += topo.node_name(u);
    out += ' ';
    out += topo.node_name(v);
    out += '\n';
  }
  return out;
}

unsigned min_cut_edges(const Topology& topo, const std::vector<unsigned>& sources,
                       unsigned sink) {
  const unsigned N = topo.n_nodes + 1;
  const unsigned S = topo.n_nodes;  // super source
  std::vector<std::vector<int>> cap(N, std::vector<int>(N, 0));
  for (auto [u, v] : topo.edges) cap[u][v] += 1;
  const int big = int(topo.edges.size()) + 1;
  for (unsigned s : sources) cap[S][s] = big;

  unsigned flow = 0;
  for (;;) {
    std::vector<int> parent(N, -1);
    parent[S] = int(S);
    std::queue<unsigned> q;
    q.push(S);
    while (!q.empty() && parent[sink] < 0) {
      const unsigned u = q.front();
      q.pop();
      for (unsigned v = 0; v < N; ++v)
        if (parent[v] < 0 && cap[u][v] > 0) {
          parent[v] = int(u);
          q.push(v);
        }
    }
    if (parent[sink] < 0) break;
    int aug = big;
    for (unsigned v = sink; v != S; v = unsigned(parent[v]))
      aug = std::min(aug, cap[unsigned(parent[v])][v]);
    for (unsigned v = sink; v != S; v = unsigned(parent[v])) {
      cap[unsigned(parent[v])][v] -= aug;
      cap[v][unsigned(parent[v])] += aug;
    }
    flow += unsigned(aug);
  }
  return flow;
}

const char* enforcement_name(Enforcement e) {
  switch (e) {
    case Enforcement::None: return "none";
    case Enforcement::Counter: return "counter";
    case Enforcement::IdPopcount: return "id-popcount";
  }
  return "?";
}

namespace {

struct Adjacency {
  std::vector<std::vector<unsigned>> in, out;  // edge indices per node
  explicit Adjacency(const Topology& topo) : in(topo.n_nodes), out(topo.n_nodes) {
    for (unsigned e = 0; e < topo.edges.size(); ++e) {
      out[topo.edges[e].first].push_back(e);
      in[topo.edges[e].second].push_back(e);
    }
  }
};

struct EdgePacket {
  rs::Vec vec;  // true coding vector, length n
  std::vector<Symbol> payload;
  unsigned counter = 0;
  codec::PacketHeader header;
};

struct TrialOut {
  unsigned rank = 0;
  bool full_recovery = false;
  unsigned decode_failures = 0;
  unsigned invariant_violations = 0;
  unsigned overestimate_events = 0;
  unsigned overestimate_within_m = 0;
  unsigned packets_delivered = 0;
  unsigned max_seen_weight = 0;
  unsigned max_id_popcount = 0;
};

unsigned support_popcount(const std::vector<const EdgePacket*>& inputs, unsigned n,
                          bool use_ids) {
  if (use_ids) {
    codec::IdSegment acc = codec::IdSegment::zeros(n);
    for (const EdgePacket* p : inputs) acc.or_with(p->header.id);
    return acc.popcount();
  }
  std::vector<char> mask(n, 0);
  for (const EdgePacket* p : inputs)
    for (unsigned j = 0; j < n; ++j)
      if (p->vec[j] != 0) mask[j] = 1;
  unsigned c = 0;
  for (char x : mask) c += unsigned(x);
  return c;
}

TrialOut run_trial(const Topology& topo, const Adjacency& adj, const SimConfig& cfg,
                   const Field& f, std::uint64_t trial_seed) {
  TrialOut out;
  Rng rng(trial_seed);
  const unsigned n = topo.n_sources;
  const bool with_scheme = cfg.scheme.has_value();
  const bool erasure_ids = with_scheme && cfg.scheme->scheme == codec::Scheme::Erasure;
  const unsigned m_bound = with_scheme ? cfg.scheme->m : n;

  linalg::Matrix src_payload(n, cfg.payload_len);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned c = 0; c < cfg.payload_len; ++c) src_payload.at(i, c) = rng.symbol(f);

  // counter >= id-popcount >= weight, plus payload conservation against the
  // true coding vector. Any breach is an engine or codec bug.
  auto check_packet = [&](const EdgePacket& p) {
    const unsigned wt = rs::weight(p.vec);
    out.max_seen_weight = std::max(out.max_seen_weight, wt);
    unsigned pop = wt;
    if (erasure_ids) {
      pop = p.header.id.popcount();
      out.max_id_popcount = std::max(out.max_id_popcount, pop);
      for (unsigned j = 0; j < n; ++j)
        if (p.vec[j] != 0 && !p.header.id.test(j)) {
          ++out.invariant_violations;
          break;
        }
    }
    if (p.counter < pop || pop < wt) ++out.invariant_violations;
    for (unsigned c = 0; c < cfg.payload_len; ++c) {
      Symbol s = 0;
      for (unsigned j = 0; j < n; ++j)
        if (p.vec[j] != 0) s = Field::add(s, f.mul(p.vec[j], src_payload.at(j, c)));
      if (s != p.payload[c]) {
        ++out.invariant_violations;
        break;
      }
    }
  };

  std::vector<EdgePacket> pkt(topo.edges.size());
  for (unsigned v = 0; v < topo.n_nodes; ++v) {
    if (v == topo.terminal) continue;
    if (v < n) {
      EdgePacket base;
      base.vec.assign(n, 0);
      base.vec[v] = 1;
      base.payload.resize(cfg.payload_len);
      for (unsigned c = 0; c < cfg.payload_len; ++c)
        base.payload[c] = src_payload.at(v, c);
      base.counter = 1;
      if (with_scheme) base.header = codec::encode_source_header(v, *cfg.scheme);
      check_packet(base);
      for (unsigned e : adj.out[v]) pkt[e] = base;
      continue;
    }

    if (adj.in[v].empty()) continue;
    std::vector<const EdgePacket*> inputs;
    inputs.reserve(adj.in[v].size());
    for (unsigned e : adj.in[v]) inputs.push_back(&pkt[e]);

    // Count the overestimate on the attempted (full) input set, before any
    // enforcement trims it.
    if (inputs.size() > 1) {
      unsigned csum = 0;
      for (const EdgePacket* p : inputs) csum += p->counter;
      const unsigned pop = support_popcount(inputs, n, erasure_ids);
      if (csum > pop) {
        ++out.overestimate_events;
        if (with_scheme && pop <= m_bound) ++out.overestimate_within_m;
      }
    }

    // Enforcement drops the most recently attached inputs until the bound
    // holds; a lone surviving input is forwarded (rescaled).
    std::vector<const EdgePacket*> active = inputs;
    if (cfg.enforcement == Enforcement::Counter) {
      auto csum = [&active] {
        unsigned s = 0;
        for (const EdgePacket* p : active) s += p->counter;
        return s;
      };
      while (active.size() > 1 && csum() > m_bound) active.pop_back();
    } else if (cfg.enforcement == Enforcement::IdPopcount) {
      while (active.size() > 1 && support_popcount(active, n, true) > m_bound)
        active.pop_back();
    }

    // Fresh combination per outgoing edge. The lane input always gets a
    // nonzero coefficient so a relay never emits the zero packet.
    for (unsigned e : adj.out[v]) {
      std::vector<Symbol> coeffs(active.size());
      coeffs[0] = rng.nonzero_symbol(f);
      for (std::size_t i = 1; i < coeffs.size(); ++i) coeffs[i] = rng.symbol(f);

      EdgePacket q;
      q.vec.assign(n, 0);
      q.payload.assign(cfg.payload_len, 0);
      unsigned csum = 0;
      for (std::size_t i = 0; i < active.size(); ++i) {
        const EdgePacket& p = *active[i];
        csum += p.counter;
        if (coeffs[i] == 0) continue;
        for (unsigned j = 0; j < n; ++j)
          q.vec[j] = Field::add(q.vec[j], f.mul(coeffs[i], p.vec[j]));
        for (unsigned c = 0; c < cfg.payload_len; ++c)
          q.payload[c] = Field::add(q.payload[c], f.mul(coeffs[i], p.payload[c]));
      }
      q.counter = std::min(n, csum);
      if (with_scheme) {
        std::vector<codec::PacketHeader> hs;
        hs.reserve(active.size());
        for (const EdgePacket* p : active) hs.push_back(p->header);
        q.header = codec::combine_headers(coeffs, hs, *cfg.scheme);
      }
      check_packet(q);
      pkt[e] = std::move(q);
    }
  }

  // Terminal: decode every delivered header, then reconstruct payloads from
  // the decoded coding vectors.
  std::vector<rs::Vec> rows;
  std::vector<std::vector<Symbol>> pls;
  for (unsigned e : adj.in[topo.terminal]) {
    const EdgePacket& p = pkt[e];
    ++out.packets_delivered;
    if (!with_scheme) {
      rows.push_back(p.vec);
      pls.push_back(p.payload);
      continue;
    }
    if (rs::syndrome(p.vec, cfg.scheme->code) != p.header.syndrome)
      ++out.invariant_violations;
    auto dec = codec::decode_header(p.header, *cfg.scheme);
    if (dec.status != codec::DecodeStatus::Ok) {
      ++out.decode_failures;
      continue;
    }
    if (dec.vec != p.vec) ++out.invariant_violations;
    rows.push_back(std::move(dec.vec));
    pls.push_back(p.payload);
  }

  linalg::Matrix v_mat(unsigned(rows.size()), n);
  linalg::Matrix p_mat(unsigned(rows.size()), cfg.payload_len);
  for (unsigned r = 0; r < rows.size(); ++r) {
    for (unsigned j = 0; j < n; ++j) v_mat.at(r, j) = rows[r][j];
    for (unsigned c = 0; c < cfg.payload_len; ++c) p_mat.at(r, c) = pls[r][c];
  }
  out.rank = linalg::rank(v_mat, f);
  if (out.rank == n) {
    auto x = linalg::solve_full_column_rank(std::move(v_mat), std::move(p_mat), f);
    if (x && x->a == src_payload.a) out.full_recovery = true;
  }
  return out;
}

}  // namespace

SimReport run_multicast(const Topology& topo, const SimConfig& cfg) {
  if (topo.n_nodes == 0 || topo.n_sources == 0 || topo.terminal >= topo.n_nodes)
    throw std::invalid_argument("run_multicast: empty or malformed topology");
  // The single sweep below consumes inputs in node order, so edges must
  // point forward and every non-source node needs at least one input.
  std::vector<unsigned> indeg(topo.n_nodes, 0);
  for (const auto& e : topo.edges) {
    if (e.first >= e.second || e.second >= topo.n_nodes)
      throw std::invalid_argument("run_multicast: edges must satisfy from < to");
    ++indeg[e.second];
  }
  for (unsigned v = topo.n_sources; v < topo.n_nodes; ++v)
    if (indeg[v] == 0)
      throw std::invalid_argument("run_multicast: node without inputs");
  if (cfg.payload_len == 0)
    throw std::invalid_argument("run_multicast: payload_len must be positive");
  if (cfg.scheme && cfg.scheme->n() != topo.n_sources)
    throw std::invalid_argument("run_multicast: scheme length != source count");
  if (!cfg.scheme && cfg.enforcement != Enforcement::None)
    throw std::invalid_argument("run_multicast: enforcement requires a scheme");
  if (cfg.enforcement == Enforcement::IdPopcount &&
      cfg.scheme->scheme != codec::Scheme::Erasure)
    throw std::invalid_argument("run_multicast: ID enforcement requires the erasure scheme");

  const std::shared_ptr<const Field> fptr =
      cfg.scheme ? cfg.scheme->code.field_ptr() : std::make_shared<const Field>(8);
  const Adjacency adj(topo);

  SimReport rep;
  rep.n = topo.n_sources;
  rep.trials = cfg.trials;
  rep.scheme = cfg.scheme ? codec::scheme_name(cfg.scheme->scheme) : "none";
  rep.enforcement = enforcement_name(cfg.enforcement);
  rep.seed = cfg.seed;

  double rank_sum = 0.0;
  for (unsigned t = 0; t < cfg.trials; ++t) {
    const TrialOut o = run_trial(topo, adj, cfg, *fptr, cfg.seed + t);
    rep.full_recoveries += o.full_recovery ? 1 : 0;
    rep.decode_failures += o.decode_failures;
    rep.invariant_violations += o.invariant_violations;
    rep.overestimate_events += o.overestimate_events;
    rep.overestimate_within_m += o.overestimate_within_m;
    rep.packets_delivered += o.packets_delivered;
    rep.max_seen_weight = std::max(rep.max_seen_weight, o.max_seen_weight);
    rep.max_id_popcount = std::max(rep.max_id_popcount, o.max_id_popcount);
    rank_sum += o.rank;
  }
  rep.avg_terminal_rank = cfg.trials ? rank_sum / cfg.trials : 0.0;
  return rep;
}

std::vector<unsigned> measure_rank_loss(const Topology& topo, unsigned trials,
                                        std::uint64_t seed) {
  SimConfig cfg;
  cfg.trials = 1;
  cfg.payload_len = 1;
  const auto f = std::make_shared<const Field>(8);
  const Adjacency adj(topo);
  std::vector<unsigned> hist(topo.n_sources + 1, 0);
  for (unsigned t = 0; t < trials; ++t) {
    const TrialOut o = run_trial(topo, adj, cfg, *f, seed + t);
    ++hist[topo.n_sources - o.rank];
  }
  return hist;
}

std::string to_json_string(const SimReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["trials"] = r.trials;
  j["scheme"] = r.scheme;
  j["enforcement"] = r.enforcement;
  j["seed"] = r.seed;
  j["full_recoveries"] = r.full_recoveries;
  j["decode_failures"] = r.decode_failures;
  j["invariant_violations"] = r.invariant_violations;
  j["overestimate_events"] = r.overestimate_events;
  j["overestimate_within_m"] = r.overestimate_within_m;
  j["packets_delivered"] = r.packets_delivered;
  j["max_seen_weight"] = r.max_seen_weight;
  j["max_id_popcount"] = r.max_id_popcount;
  j["avg_terminal_rank"] = r.avg_terminal_rank;
  return j.dump(2) + "\n";
}

std::string csv_header() {
  return "n,trials,scheme,enforcement,seed,full_recoveries,decode_failures,"
         "invariant_violations,overestimate_events,overestimate_within_m,"
         "packets_delivered,max_seen_weight,max_id_popcount,avg_terminal_rank";
}

std::string to_csv_row(const SimReport& r) {
  char rank_buf[32];
  std::snprintf(rank_buf, sizeof rank_buf, "%.4f", r.avg_terminal_rank);
  std::string s;
  s += std::to_string(r.n) + ',';
  s += std::to_string(r.trials) + ',';
  s += r.scheme + ',';
  s += r.enforcement + ',';
  s += std::to_string(r.seed) + ',';
  s += std::to_string(r.full_recoveries) + ',';
  s += std::to_string(r.decode_failures) + ',';
  s += std::to_string(r.invariant_violations) + ',';
  s += std::to_string(r.overestimate_events) + ',';
  s += std::to_string(r.overestimate_within_m) + ',';
  s += std::to_string(r.packets_delivered) + ',';
  s += std::to_string(r.max_seen_weight) + ',';
  s += std::to_string(r.max_id_popcount) + ',';
  s += rank_buf;
  return s;
}

}  // namespace ncv::sim
