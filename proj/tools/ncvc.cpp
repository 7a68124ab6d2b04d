// ncvc - command line front end: overhead accounting, encode/decode round
// trips, multicast simulation, and list-decoder cross-validation.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncv/header.hpp"
#include "ncv/list_decode.hpp"
#include "ncv/netsim.hpp"
#include "ncv/rng.hpp"

using nlohmann::ordered_json;
using namespace ncv;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitBadArgs = 2;

void write_out(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << text;
}

codec::Scheme parse_scheme(const std::string& s) {
  if (s == "error") return codec::Scheme::Error;
  if (s == "erasure") return codec::Scheme::Erasure;
  if (s == "list") return codec::Scheme::List;
  throw CLI::ValidationError("--scheme", "unknown scheme: " + s);
}

// ---------------------------------------------------------------- overhead

ordered_json overhead_json(const codec::OverheadBreakdown& o) {
  ordered_json j;
  j["scheme"] = codec::scheme_name(o.scheme);
  j["n"] = o.n;
  j["m"] = o.m;
  j["w"] = o.w;
  j["feasible"] = o.feasible;
  j["fallback_uncompressed"] = o.fallback_uncompressed;
  j["k"] = o.k;
  j["syndrome_symbols"] = o.syndrome_symbols;
  j["syndrome_bytes"] = o.syndrome_bytes;
  j["id_bytes"] = o.id_bytes;
  j["ext_degree"] = o.ext_degree;
  j["side_bytes"] = o.side_bytes;
  j["total_bits"] = o.total_bits;
  j["total_bytes"] = o.total_bytes;
  return j;
}

std::string overhead_csv_header() {
  return "scheme,n,m,w,feasible,k,syndrome_bytes,id_bytes,ext_degree,side_bytes,"
         "total_bits,total_bytes";
}

std::string overhead_csv_row(const codec::OverheadBreakdown& o) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s,%u,%u,%u,%d,%u,%u,%u,%u,%u,%u,%u",
                codec::scheme_name(o.scheme), o.n, o.m, o.w, int(o.feasible), o.k,
                o.syndrome_bytes, o.id_bytes, o.ext_degree, o.side_bytes, o.total_bits,
                o.total_bytes);
  return buf;
}

std::string overhead_table(const std::vector<codec::OverheadBreakdown>& rows) {
  char line[160];
  std::string out;
  std::snprintf(line, sizeof line, "%-8s %5s %5s %3s %5s %8s %6s %6s %8s %8s\n",
                "scheme", "n", "m", "w", "k", "synd[B]", "id[B]", "side[B]",
                "total[B]", "note");
  out += line;
  for (const auto& o : rows) {
    std::snprintf(line, sizeof line, "%-8s %5u %5u %3u %5u %8u %6u %6u %8u %8s\n",
                  codec::scheme_name(o.scheme), o.n, o.m, o.w, o.k, o.syndrome_bytes,
                  o.id_bytes, o.side_bytes, o.total_bytes,
                  o.fallback_uncompressed ? "uncomp" : "");
    out += line;
  }
  return out;
}

int run_overhead(bool examples, unsigned n, unsigned m, unsigned w, double pf,
                 unsigned max_list, const std::string& scheme,
                 const std::string& format, const std::string& out_path) {
  std::vector<codec::OverheadBreakdown> rows;
  auto add_all = [&](unsigned nn, unsigned mm) {
    for (auto s : {codec::Scheme::Error, codec::Scheme::Erasure, codec::Scheme::List})
      if (scheme == "all" || scheme == codec::scheme_name(s))
        rows.push_back(codec::overhead_for(s, nn, mm, w, pf, max_list));
  };
  if (examples) {
    add_all(50, 15);
    add_all(255, 150);
    add_all(255, 86);
  } else {
    if (n == 0 || m == 0)
      throw CLI::ValidationError("overhead", "need --n and --m (or --examples)");
    add_all(n, m);
  }

  std::string text;
  if (format == "table") {
    text = overhead_table(rows);
  } else if (format == "csv") {
    text = overhead_csv_header() + "\n";
    for (const auto& o : rows) text += overhead_csv_row(o) + "\n";
  } else {
    ordered_json arr = ordered_json::array();
    for (const auto& o : rows) arr.push_back(overhead_json(o));
    text = arr.dump(2) + "\n";
  }
  write_out(text, out_path);
  return kExitOk;
}

// ---------------------------------------------------------------- roundtrip

struct TreeDraw {
  codec::PacketHeader header;
  rs::Vec vec;
};

// Random linear combination built as a tree: leaves are <= m distinct source
// headers, inner nodes combine up to four children with random coefficients
// (occasionally zero, to exercise cancellation).
TreeDraw random_combined(const codec::SchemeConfig& cfg, Rng& rng) {
  const unsigned n = cfg.n();
  const gf::Field& f = cfg.code.field();
  const unsigned u = 1 + rng.below(cfg.m);
  const auto support = rng.positions(n, u);

  std::vector<codec::PacketHeader> level;
  std::vector<rs::Vec> vecs;
  for (unsigned s : support) {
    level.push_back(codec::encode_source_header(s, cfg));
    rs::Vec v(n, 0);
    v[s] = 1;
    vecs.push_back(std::move(v));
  }
  while (level.size() > 1) {
    std::vector<codec::PacketHeader> next;
    std::vector<rs::Vec> nvecs;
    for (std::size_t i = 0; i < level.size();) {
      const std::size_t fan = std::min<std::size_t>(4, level.size() - i);
      std::vector<gf::Symbol> cs(fan);
      std::vector<codec::PacketHeader> hs(level.begin() + long(i),
                                          level.begin() + long(i + fan));
      rs::Vec acc(n, 0);
      for (std::size_t j = 0; j < fan; ++j) {
        cs[j] = (rng.below(16) == 0) ? gf::Symbol(0) : rng.nonzero_symbol(f);
        if (cs[j] == 0) continue;
        for (unsigned x = 0; x < n; ++x)
          acc[x] = gf::Field::add(acc[x], f.mul(cs[j], vecs[i + j][x]));
      }
      next.push_back(codec::combine_headers(cs, hs, cfg));
      nvecs.push_back(std::move(acc));
      i += fan;
    }
    level = std::move(next);
    vecs = std::move(nvecs);
  }
  return {level[0], vecs[0]};
}

int run_roundtrip(const std::string& scheme_str, unsigned n, unsigned m, unsigned w,
                  unsigned trials, std::uint64_t seed, double pf, unsigned max_list,
                  const std::string& session, const std::string& format,
                  const std::string& out_path) {
  const codec::Scheme scheme = parse_scheme(scheme_str);
  auto field = std::make_shared<const gf::Field>(w);
  codec::ListSchemeOptions opts;
  opts.p_fail = pf;
  opts.max_list = max_list;
  opts.session_id = session;
  const codec::SchemeConfig cfg = codec::make_scheme_config(scheme, n, m, field, opts);

  Rng rng(seed);
  unsigned recovered = 0, mis = 0;
  unsigned flagged_failure = 0, flagged_id = 0, flagged_ambiguous = 0, flagged_nomatch = 0;
  for (unsigned t = 0; t < trials; ++t) {
    const TreeDraw d = random_combined(cfg, rng);
    const auto res = codec::decode_header(d.header, cfg);
    switch (res.status) {
      case codec::DecodeStatus::Ok:
        if (res.vec == d.vec)
          ++recovered;
        else
          ++mis;
        break;
      case codec::DecodeStatus::DecodeFailure: ++flagged_failure; break;
      case codec::DecodeStatus::InconsistentId: ++flagged_id; break;
      case codec::DecodeStatus::Ambiguous: ++flagged_ambiguous; break;
      case codec::DecodeStatus::NoMatch: ++flagged_nomatch; break;
    }
  }
  const unsigned flagged = flagged_failure + flagged_id + flagged_ambiguous + flagged_nomatch;

  std::string text;
  if (format == "json") {
    ordered_json j;
    j["scheme"] = scheme_str;
    j["n"] = n;
    j["m"] = m;
    j["w"] = w;
    j["trials"] = trials;
    j["seed"] = seed;
    j["recovered"] = recovered;
    j["flagged"] = flagged;
    j["flagged_decode_failure"] = flagged_failure;
    j["flagged_inconsistent_id"] = flagged_id;
    j["flagged_ambiguous"] = flagged_ambiguous;
    j["flagged_no_match"] = flagged_nomatch;
    j["mis_decoded"] = mis;
    text = j.dump(2) + "\n";
  } else if (format == "csv") {
    text = "scheme,n,m,w,trials,seed,recovered,flagged,mis_decoded\n";
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s,%u,%u,%u,%u,%llu,%u,%u,%u\n", scheme_str.c_str(),
                  n, m, w, trials, (unsigned long long)seed, recovered, flagged, mis);
    text += buf;
  } else {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "scheme=%s n=%u m=%u w=%u trials=%u\n"
                  "recovered=%u flagged=%u (failure=%u id=%u ambiguous=%u no-match=%u) "
                  "mis-decoded=%u\n",
                  scheme_str.c_str(), n, m, w, trials, recovered, flagged,
                  flagged_failure, flagged_id, flagged_ambiguous, flagged_nomatch, mis);
    text = buf;
  }
  write_out(text, out_path);
  // A flagged failure is honest; a silent wrong vector is not.
  return mis == 0 ? kExitOk : kExitViolation;
}

// ----------------------------------------------------------------- simulate

int run_simulate(bool diamond, unsigned n, unsigned layers, unsigned locality,
                 unsigned margin, unsigned indegree, unsigned extra_edges,
                 std::uint64_t topo_seed, const std::string& scheme_str, bool m_set,
                 unsigned m, unsigned w, const std::string& enforcement_str,
                 unsigned trials, std::uint64_t seed, unsigned payload_len, double pf,
                 unsigned max_list, const std::string& session,
                 const std::string& format, const std::string& out_path,
                 const std::string& topo_path) {
  sim::Topology topo;
  if (diamond) {
    topo = sim::diamond_topology();
    if (!m_set) m = 3;
  } else {
    sim::TopologyConfig tc;
    tc.n_sources = n;
    tc.relay_layers = layers;
    tc.locality = locality;
    tc.layer_margin = margin;
    tc.min_indegree = indegree;
    tc.terminal_extra_edges = extra_edges;
    topo = sim::generate_topology(tc, topo_seed);
  }
  if (!topo_path.empty()) write_out(sim::to_edge_list(topo), topo_path);

  sim::SimConfig cfg;
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.payload_len = payload_len;
  if (scheme_str != "none") {
    auto field = std::make_shared<const gf::Field>(w);
    codec::ListSchemeOptions opts;
    opts.p_fail = pf;
    opts.max_list = max_list;
    opts.session_id = session;
    cfg.scheme = codec::make_scheme_config(parse_scheme(scheme_str), topo.n_sources, m,
                                           field, opts);
  }
  if (enforcement_str == "counter")
    cfg.enforcement = sim::Enforcement::Counter;
  else if (enforcement_str == "id-popcount")
    cfg.enforcement = sim::Enforcement::IdPopcount;

  const sim::SimReport rep = sim::run_multicast(topo, cfg);
  std::string text;
  if (format == "csv")
    text = sim::csv_header() + "\n" + sim::to_csv_row(rep) + "\n";
  else
    text = sim::to_json_string(rep);
  write_out(text, out_path);
  return rep.invariant_violations == 0 ? kExitOk : kExitViolation;
}

// -------------------------------------------------------------- oracle-check

int run_oracle_check(unsigned n, unsigned m, unsigned w, unsigned trials,
                     std::uint64_t seed, const std::string& format,
                     const std::string& out_path) {
  const unsigned k = unsigned((std::uint64_t(n - m) * (n - m)) / n);
  if (m == 0 || m >= n || k < 2)
    throw CLI::ValidationError("oracle-check", "need 0 < m < n with floor((n-m)^2/n) >= 2");
  auto field = std::make_shared<const gf::Field>(w);
  const rs::Code code(n, k, field);
  const listdec::BruteForceOracle oracle(code);

  listdec::ListDecodeParams lp;
  lp.radius = m;
  lp.max_list = 1u << 24;  // never truncate; the oracle cannot either

  Rng rng(seed);
  unsigned mismatches = 0, planted_missing = 0, largest = 0;
  for (unsigned t = 0; t < trials; ++t) {
    rs::Vec synd(code.redundancy(), 0);
    rs::Vec planted;
    if (t % 2 == 0) {
      planted.assign(n, 0);
      const unsigned wt = rng.below(m + 1);
      for (unsigned p : rng.positions(n, wt)) planted[p] = rng.nonzero_symbol(*field);
      synd = rs::syndrome(planted, code);
    } else {
      for (auto& s : synd) s = rng.symbol(*field);
    }
    const auto got = listdec::list_error_patterns(synd, code, lp);
    const auto want = oracle.list(synd, m);
    if (got.patterns != want.patterns) ++mismatches;
    largest = std::max<unsigned>(largest, unsigned(want.patterns.size()));
    if (!planted.empty()) {
      bool found = false;
      for (const auto& p : got.patterns) found = found || p == planted;
      if (!found) ++planted_missing;
    }
  }

  std::string text;
  if (format == "json") {
    ordered_json j;
    j["n"] = n;
    j["m"] = m;
    j["w"] = w;
    j["k"] = k;
    j["radius"] = m;
    j["trials"] = trials;
    j["seed"] = seed;
    j["codewords"] = oracle.codeword_count();
    j["mismatches"] = mismatches;
    j["planted_missing"] = planted_missing;
    j["largest_list"] = largest;
    text = j.dump(2) + "\n";
  } else {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "(%u,%u) over GF(2^%u), radius %u, %u trials, %zu codewords\n"
                  "mismatches=%u planted-missing=%u largest-list=%u\n",
                  n, k, w, m, trials, oracle.codeword_count(), mismatches,
                  planted_missing, largest);
    text = buf;
  }
  write_out(text, out_path);
  return (mismatches == 0 && planted_missing == 0) ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compressed network coding vector toolkit"};
  app.require_subcommand(1);

  auto* ov = app.add_subcommand("overhead", "Header overhead of the three schemes");
  struct {
    bool examples = false;
    unsigned n = 0, m = 0, w = 8, max_list = 64;
    double pf = 1e-4;
    std::string scheme = "all", format = "table", out;
  } o;
  ov->add_flag("--examples", o.examples,
               "three reference cases: (n=50,m=15), (255,150), (255,86), w=8");
  ov->add_option("--n", o.n, "coding vector length");
  ov->add_option("--m", o.m, "max combined sources");
  ov->add_option("--w", o.w, "symbol width in bits")->check(CLI::Range(2u, 16u));
  ov->add_option("--pf", o.pf, "side-info failure budget");
  ov->add_option("--max-list", o.max_list, "list size the side info must discriminate");
  ov->add_option("--scheme", o.scheme, "error|erasure|list|all")
      ->check(CLI::IsMember({"error", "erasure", "list", "all"}));
  ov->add_option("--format", o.format, "table|csv|json (default table)")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  ov->add_option("--out", o.out, "output file (default stdout)");

  auto* rt = app.add_subcommand("roundtrip", "Encode random combinations, decode, compare");
  struct {
    std::string scheme;
    unsigned n = 0, m = 0, w = 8, trials = 1000, max_list = 64;
    std::uint64_t seed = 1;
    double pf = 1e-4;
    std::string session = "session-0", format = "table", out;
  } r;
  rt->add_option("--scheme", r.scheme, "error|erasure|list")
      ->required()
      ->check(CLI::IsMember({"error", "erasure", "list"}));
  rt->add_option("--n", r.n, "coding vector length")->required();
  rt->add_option("--m", r.m, "max combined sources")->required();
  rt->add_option("--w", r.w, "symbol width in bits")->check(CLI::Range(2u, 16u));
  rt->add_option("--trials", r.trials, "number of random combinations (default 1000)");
  rt->add_option("--seed", r.seed, "RNG seed");
  rt->add_option("--pf", r.pf, "side-info failure budget (list scheme)");
  rt->add_option("--max-list", r.max_list, "candidate list cap (list scheme)");
  rt->add_option("--session", r.session, "session ID the evaluation point derives from");
  rt->add_option("--format", r.format, "table|csv|json (default table)")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  rt->add_option("--out", r.out, "output file (default stdout)");

  auto* si = app.add_subcommand("simulate", "Random linear coding over a multicast DAG");
  struct {
    bool diamond = false;
    unsigned n = 50, layers = 2, locality = 10, margin = 2, indegree = 3;
    unsigned extra_edges = 2, m = 15, w = 8, trials = 100, payload_len = 16;
    unsigned max_list = 64;
    std::uint64_t topo_seed = 1, seed = 1;
    double pf = 1e-4;
    std::string scheme = "erasure", enforcement = "none", session = "session-0";
    std::string format = "json", out, topo_out;
  } s;
  si->add_flag("--diamond", s.diamond, "fixed 4-source diamond network");
  si->add_option("--n", s.n, "source count (default 50)");
  si->add_option("--layers", s.layers, "relay layers (default 2)");
  si->add_option("--locality", s.locality, "max sources mixed per block (default 10)");
  si->add_option("--margin", s.margin, "extra relays per block per layer (default 2)");
  si->add_option("--indegree", s.indegree, "target relay in-degree (default 3)");
  si->add_option("--extra-edges", s.extra_edges, "extra terminal edges (default 2)");
  si->add_option("--topo-seed", s.topo_seed, "topology RNG seed");
  auto* m_opt = si->add_option("--m", s.m, "max combined sources (default 15; diamond: 3)");
  si->add_option("--w", s.w, "symbol width in bits")->check(CLI::IsMember({8u, 16u}));
  si->add_option("--scheme", s.scheme, "none|error|erasure|list (default erasure)")
      ->check(CLI::IsMember({"none", "error", "erasure", "list"}));
  si->add_option("--enforcement", s.enforcement, "none|counter|id-popcount")
      ->check(CLI::IsMember({"none", "counter", "id-popcount"}));
  si->add_option("--trials", s.trials, "independent sessions (default 100)");
  si->add_option("--seed", s.seed, "per-trial RNG base seed");
  si->add_option("--payload-len", s.payload_len, "payload symbols per packet");
  si->add_option("--pf", s.pf, "side-info failure budget (list scheme)");
  si->add_option("--max-list", s.max_list, "candidate list cap (list scheme)");
  si->add_option("--session", s.session, "session ID (list scheme)");
  si->add_option("--format", s.format, "json|csv (default json)")
      ->check(CLI::IsMember({"json", "csv"}));
  si->add_option("--out", s.out, "report file (default stdout)");
  si->add_option("--write-topology", s.topo_out, "also write the edge list here");

  auto* oc = app.add_subcommand("oracle-check",
                                "List decoder vs exhaustive codeword enumeration");
  struct {
    unsigned n = 15, m = 6, w = 4, trials = 200;
    std::uint64_t seed = 1;
    std::string format = "table", out;
  } c;
  oc->add_option("--n", c.n, "coding vector length (default 15)");
  oc->add_option("--m", c.m, "list radius, code sized as in the list scheme (default 6)");
  oc->add_option("--w", c.w, "symbol width in bits (default 4)")->check(CLI::Range(2u, 16u));
  oc->add_option("--trials", c.trials, "planted + random syndromes (default 200)");
  oc->add_option("--seed", c.seed, "RNG seed");
  oc->add_option("--format", c.format, "table|json (default table)")
      ->check(CLI::IsMember({"table", "json"}));
  oc->add_option("--out", c.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
    if (ov->parsed())
      return run_overhead(o.examples, o.n, o.m, o.w, o.pf, o.max_list, o.scheme,
                          o.format, o.out);
    if (rt->parsed())
      return run_roundtrip(r.scheme, r.n, r.m, r.w, r.trials, r.seed, r.pf, r.max_list,
                           r.session, r.format, r.out);
    if (si->parsed())
      return run_simulate(s.diamond, s.n, s.layers, s.locality, s.margin, s.indegree,
                          s.extra_edges, s.topo_seed, s.scheme, m_opt->count() > 0, s.m,
                          s.w, s.enforcement, s.trials, s.seed, s.payload_len, s.pf,
                          s.max_list, s.session, s.format, s.out, s.topo_out);
    if (oc->parsed())
      return run_oracle_check(c.n, c.m, c.w, c.trials, c.seed, c.format, c.out);
    return kExitBadArgs;
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitBadArgs;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArgs;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  }
}
