// Command-line front end for the BDH graph toolkit.
//
// Exit codes: 0 success / true verdict, 1 false verdict, 2 usage error,
// 3 input error.

#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bdh/generator.hpp"
#include "bdh/hypergraph.hpp"
#include "bdh/lattice.hpp"
#include "bdh/oracle.hpp"
#include "bdh/query.hpp"

namespace {

using nlohmann::json;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open file: " + path);
  out << content;
}

std::vector<std::string> labels_of(const std::vector<bdh::Vertex>& vs) {
  std::vector<std::string> out;
  for (auto v : vs) out.push_back(bdh::to_string(v));
  return out;
}

int cmd_recognize(const std::string& file, const std::string& format) {
  auto g = bdh::BipartiteGraph::parse(read_input(file));
  auto verdict = bdh::is_bdh(g);
  if (format == "json") {
    json j;
    j["verdict"] = verdict.yes() ? "yes" : "no";
    if (verdict.yes()) {
      j["sequence"] = json::array();
      for (const auto& s : verdict.sequence->steps) {
        json step;
        step["kind"] = s.kind == bdh::PruningStep::Kind::initial   ? "initial"
                       : s.kind == bdh::PruningStep::Kind::pendant ? "pendant"
                                                                   : "twin";
        step["vertex"] = bdh::to_string(s.vertex);
        if (s.kind != bdh::PruningStep::Kind::initial) step["anchor"] = bdh::to_string(s.anchor);
        j["sequence"].push_back(step);
      }
    } else {
      j["certificate"]["kind"] =
          verdict.certificate->kind == bdh::ForbiddenSubgraph::Kind::domino ? "domino" : "hole";
      j["certificate"]["vertices"] = labels_of(verdict.certificate->vertices);
    }
    std::cout << j.dump(2) << "\n";
  } else if (verdict.yes()) {
    std::cout << "YES: construction sequence with " << verdict.sequence->steps.size() << " steps\n";
    std::cout << verdict.sequence->serialize();
  } else {
    std::cout << "NO: "
              << (verdict.certificate->kind == bdh::ForbiddenSubgraph::Kind::domino ? "domino" : "hole")
              << " on vertices";
    for (auto v : verdict.certificate->vertices) std::cout << " " << bdh::to_string(v);
    std::cout << "\n";
  }
  return verdict.yes() ? kExitTrue : kExitFalse;
}

int cmd_lattice(const std::string& file, bool dot, const std::string& format) {
  auto g = bdh::BipartiteGraph::parse(read_input(file));
  auto lat = bdh::galois_lattice(g);
  auto h = bdh::hasse(lat);
  bool tree = bdh::is_tree_shaped(h);
  if (format == "json") {
    json j;
    j["bicliques"] = json::array();
    for (const auto& b : lat.elements) j["bicliques"].push_back(bdh::to_string(b));
    j["arcs"] = json::array();
    for (auto [u, v] : h.arcs) j["arcs"].push_back({u, v});
    j["sources"] = h.sources().size();
    j["sinks"] = h.sinks().size();
    j["tree"] = tree;
    std::cout << j.dump(2) << "\n";
  } else {
    if (dot) std::cout << bdh::to_dot(lat, h);
    std::cout << (tree ? "TREE" : "NOT-TREE") << "\n";
  }
  return tree ? kExitTrue : kExitFalse;
}

int cmd_encode(const std::string& file, const std::string& side, const std::string& out_path) {
  auto g = bdh::BipartiteGraph::parse(read_input(file));
  auto verdict = bdh::is_bdh(g);
  if (!verdict.yes()) {
    std::cerr << "encode: input graph is not BDH\n";
    return kExitFalse;
  }
  auto enc = bdh::encode(g, *verdict.sequence, side == "X" ? bdh::Side::X : bdh::Side::Y);
  write_output(out_path, enc.serialize());
  return kExitTrue;
}

std::vector<bdh::Vertex> parse_set(const std::string& csv, bdh::Side side) {
  std::vector<bdh::Vertex> out;
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back({side, std::stoi(tok) - 1});
  }
  if (out.empty()) throw std::runtime_error("empty vertex set");
  return out;
}

int cmd_query(const std::string& enc_file, const std::string& set_csv, const std::string& op,
              const std::string& enc2_file, bool stats_flag, const std::string& format) {
  auto enc = bdh::ArborescenceEncoding::parse(read_input(enc_file));
  auto subset = parse_set(set_csv, enc.interval_side());
  bdh::QueryStats stats;
  json j;
  int code = kExitTrue;
  std::vector<int> result;
  if (op == "neighbors") {
    result = bdh::list_neighbors(enc, subset.at(0), &stats);
  } else if (op == "intersect") {
    result = bdh::neighbor_intersection(enc, subset, &stats);
  } else if (op == "empty") {
    bool empty = bdh::intersection_empty(enc, subset, &stats);
    code = empty ? kExitTrue : kExitFalse;
    j["empty"] = empty;
  } else if (op == "maximal") {
    if (enc2_file.empty()) throw std::runtime_error("--op maximal needs --enc2 with the other side");
    auto enc2 = bdh::ArborescenceEncoding::parse(read_input(enc2_file));
    const auto& ex = enc.arc_side == bdh::Side::X ? enc : enc2;
    const auto& ey = enc.arc_side == bdh::Side::X ? enc2 : enc;
    bool maximal = bdh::is_maximal_biclique(ex, ey, subset, &stats);
    code = maximal ? kExitTrue : kExitFalse;
    j["maximal"] = maximal;
  } else {
    throw std::runtime_error("unknown query op: " + op);
  }
  if (format == "json") {
    if (op == "neighbors" || op == "intersect") {
      j["result"] = json::array();
      for (int v : result) j["result"].push_back(v + 1);
    }
    if (stats_flag) {
      j["stats"]["comparisons"] = stats.comparisons;
      j["stats"]["nodes_visited"] = stats.nodes_visited;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    if (op == "neighbors" || op == "intersect") {
      for (int v : result) std::cout << v + 1 << "\n";
    } else if (op == "empty") {
      std::cout << (code == kExitTrue ? "EMPTY" : "NONEMPTY") << "\n";
    } else {
      std::cout << (code == kExitTrue ? "MAXIMAL" : "NOT-MAXIMAL") << "\n";
    }
    if (stats_flag)
      std::cout << "c stats comparisons=" << stats.comparisons
                << " nodes_visited=" << stats.nodes_visited << "\n";
  }
  return code;
}

int cmd_gen(int n, std::uint64_t seed, double bias, bool no_universal, const std::string& out_path,
            const std::string& seq_out) {
  auto inst = bdh::generate_bdh(n, seed, bias, no_universal);
  write_output(out_path, inst.graph.format());
  if (!seq_out.empty()) write_output(seq_out, inst.sequence.serialize());
  return kExitTrue;
}

int cmd_hyper(const std::string& file, bool do_classify, bool do_bachman, const std::string& format) {
  auto h = bdh::Hypergraph::parse(read_input(file));
  json j;
  int code = kExitTrue;
  std::ostringstream text;
  if (do_classify) {
    auto report = bdh::classify_acyclicity(h);
    const char* name = report.verdict == bdh::Acyclicity::gamma_acyclic ? "gamma-acyclic"
                       : report.verdict == bdh::Acyclicity::totally_balanced_only
                           ? "totally-balanced-only"
                           : "neither";
    j["classification"] = name;
    text << name << "\n";
    if (report.witness) {
      const char* kind = report.witness->kind == bdh::AcyclicityWitness::Kind::cyclic_pattern
                             ? "cyclic-pattern"
                             : "crossing-pattern";
      j["witness"]["kind"] = kind;
      j["witness"]["members"] = report.witness->member_rows;
      j["witness"]["vertices"] = report.witness->ground_cols;
      text << "witness " << kind << " members";
      for (int m : report.witness->member_rows) text << " " << m + 1;
      text << " vertices";
      for (int v : report.witness->ground_cols) text << " " << v + 1;
      text << "\n";
    }
    if (report.verdict != bdh::Acyclicity::gamma_acyclic) code = kExitFalse;
  }
  if (do_bachman) {
    auto d = bdh::bachman(h);
    j["bachman"]["nodes"] = d.nodes;
    j["bachman"]["tree"] = d.is_tree;
    for (auto [u, v] : d.arcs) {
      text << "arc {";
      for (std::size_t t = 0; t < d.nodes[u].size(); ++t) text << (t ? "," : "") << d.nodes[u][t] + 1;
      text << "} -> {";
      for (std::size_t t = 0; t < d.nodes[v].size(); ++t) text << (t ? "," : "") << d.nodes[v][t] + 1;
      text << "}\n";
    }
    text << (d.is_tree ? "TREE" : "NOT-TREE") << "\n";
    if (!do_classify) code = d.is_tree ? kExitTrue : kExitFalse;
  }
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text.str();
  }
  return code;
}

int cmd_bench(const std::string& sizes_csv, std::uint64_t seed, double bias, bool times) {
  std::vector<int> sizes;
  {
    std::istringstream in(sizes_csv);
    std::string tok;
    while (std::getline(in, tok, ',')) sizes.push_back(std::stoi(tok));
  }
  std::cout << "n build_ops max_query_c\n";
  for (int n : sizes) {
    auto seq = bdh::generate_bdh_sequence(n, seed, bias);
    std::size_t ops = 0;
    auto t0 = std::chrono::steady_clock::now();
    auto enc_y = bdh::encode_from_sequence(seq, bdh::Side::Y, &ops);
    auto t1 = std::chrono::steady_clock::now();
    bdh::SplitMix64 rng(seed ^ 1234567u);
    long max_ratio_num = 0, max_ratio_den = 1;
    const int nx = enc_y.interval_count();
    for (int trial = 0; trial < 200 && nx > 0; ++trial) {
      int k = 1 + rng.below(std::min(nx, 16));
      std::vector<bdh::Vertex> subset;
      for (int i = 0; i < k; ++i) subset.push_back({enc_y.interval_side(), rng.below(nx)});
      bdh::QueryStats stats;
      auto result = bdh::neighbor_intersection(enc_y, subset, &stats);
      long budget_units = static_cast<long>(subset.size()) + static_cast<long>(result.size()) + 1;
      long total = stats.comparisons + stats.nodes_visited;
      if (total * max_ratio_den > max_ratio_num * budget_units) {
        max_ratio_num = total;
        max_ratio_den = budget_units;
      }
    }
    std::cout << n << " " << ops << " " << (max_ratio_num + max_ratio_den - 1) / max_ratio_den;
    if (times)
      std::cout << " build_ms="
                << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    std::cout << "\n";
  }
  return kExitTrue;
}

int cmd_verify(const std::string& file, std::uint64_t seed) {
  auto g = bdh::BipartiteGraph::parse(read_input(file));
  bool all_ok = true;
  auto report = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
    all_ok = all_ok && ok;
  };
  auto verdict = bdh::is_bdh(g);
  if (!verdict.yes()) {
    report("recognizer certificate valid",
           verdict.certificate->kind == bdh::ForbiddenSubgraph::Kind::domino
               ? bdh::is_induced_domino(g, std::span(verdict.certificate->vertices).subspan(0, 3),
                                        std::span(verdict.certificate->vertices).subspan(3, 3))
               : bdh::is_chordless_cycle(g, verdict.certificate->vertices));
    std::cout << (all_ok ? "OK (non-BDH input)\n" : "FAILED\n");
    return all_ok ? kExitTrue : kExitFalse;
  }
  report("replay reconstructs the input", bdh::replay(*verdict.sequence) == g);
  auto enc_x = bdh::encode(g, *verdict.sequence, bdh::Side::X);
  auto enc_y = bdh::encode(g, *verdict.sequence, bdh::Side::Y);
  report("X-arc encoding verifies", bdh::verify_encoding(g, enc_x));
  report("Y-arc encoding verifies", bdh::verify_encoding(g, enc_y));
  if (g.n(bdh::Side::X) <= 24) {
    auto fast = bdh::maximal_bicliques(g);
    auto brute = bdh::oracle::brute_maximal_bicliques(g);
    report("biclique fast path matches reference", fast == brute);
    report("pair-family enumeration matches reference", bdh::enumerate_via_F(enc_x, enc_y) == brute);
  }
  bdh::SplitMix64 rng(seed);
  bool queries_ok = true;
  const int nx = g.n(bdh::Side::X);
  for (int trial = 0; trial < 100 && nx > 0; ++trial) {
    int k = 1 + rng.below(nx);
    std::set<int> pick;
    while (static_cast<int>(pick.size()) < k) pick.insert(rng.below(nx));
    std::vector<bdh::Vertex> subset;
    for (int i : pick) subset.push_back(bdh::x_vertex(i));
    auto fast = bdh::neighbor_intersection(enc_y, subset);
    std::sort(fast.begin(), fast.end());
    auto slow = bdh::oracle::brute_intersection(g, subset);
    if (fast != slow) queries_ok = false;
  }
  report("random intersections match reference", queries_ok);
  std::cout << (all_ok ? "OK\n" : "FAILED\n");
  return all_ok ? kExitTrue : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bipartite distance-hereditary graph toolkit"};
  app.require_subcommand(1);

  std::string file, format = "text", side = "X", out_path, seq_out, set_csv, op = "intersect";
  std::string enc2_file, sizes_csv = "1000,10000,100000";
  bool dot = false, stats_flag = false, no_universal = false, do_classify = false, do_bachman = false;
  bool times = false;
  int n = 10;
  std::uint64_t seed = 1;
  double bias = 0.5;

  auto* rec = app.add_subcommand("recognize", "test a graph file, print verdict and certificate");
  rec->add_option("file", file, "graph file (- for stdin)")->required();
  rec->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* lat = app.add_subcommand("lattice", "maximal bicliques and the covering digraph");
  lat->add_option("file", file)->required();
  lat->add_flag("--dot", dot, "emit DOT before the verdict line");
  lat->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* enc = app.add_subcommand("encode", "write the arborescence encoding of a BDH graph");
  enc->add_option("file", file)->required();
  enc->add_option("--side", side, "arc side")->check(CLI::IsMember({"X", "Y"}));
  enc->add_option("--out", out_path, "output file (default stdout)");

  auto* qry = app.add_subcommand("query", "run a query against an encoding file");
  qry->add_option("enc", file, "encoding file")->required();
  qry->add_option("--set", set_csv, "comma-separated 1-based vertex ids")->required();
  qry->add_option("--op", op)->check(CLI::IsMember({"neighbors", "intersect", "empty", "maximal"}));
  qry->add_option("--enc2", enc2_file, "other-side encoding, needed by --op maximal");
  qry->add_flag("--stats", stats_flag, "print instrumentation footer");
  qry->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* gen = app.add_subcommand("gen", "generate a random BDH instance");
  gen->add_option("--n", n, "vertex count")->required();
  gen->add_option("--seed", seed);
  gen->add_option("--bias", bias, "pendant probability in [0,1]");
  gen->add_flag("--no-universal", no_universal, "avoid universal vertices (needs n >= 6)");
  gen->add_option("--out", out_path, "graph output file (default stdout)");
  gen->add_option("--seq-out", seq_out, "also write the construction sequence");

  auto* hyp = app.add_subcommand("hyper", "hypergraph classification and diagrams");
  hyp->add_option("file", file)->required();
  hyp->add_flag("--classify", do_classify, "acyclicity class plus witness");
  hyp->add_flag("--bachman", do_bachman, "intersection-closure diagram and tree verdict");
  hyp->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* ben = app.add_subcommand("bench", "build and query step-count table");
  ben->add_option("--sizes", sizes_csv, "comma-separated instance sizes");
  ben->add_option("--seed", seed);
  ben->add_option("--bias", bias);
  ben->add_flag("--times", times, "include wall-clock columns (non-deterministic)");

  auto* ver = app.add_subcommand("verify", "run the oracle-agreement battery on one instance");
  ver->add_option("file", file)->required();
  ver->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (rec->parsed()) return cmd_recognize(file, format);
    if (lat->parsed()) return cmd_lattice(file, dot, format);
    if (enc->parsed()) return cmd_encode(file, side, out_path);
    if (qry->parsed()) return cmd_query(file, set_csv, op, enc2_file, stats_flag, format);
    if (gen->parsed()) return cmd_gen(n, seed, bias, no_universal, out_path, seq_out);
    if (hyp->parsed()) {
      if (!do_classify && !do_bachman) {
        std::cerr << "hyper: pass --classify and/or --bachman\n";
        return kExitUsage;
      }
      return cmd_hyper(file, do_classify, do_bachman, format);
    }
    if (ben->parsed()) return cmd_bench(sizes_csv, seed, bias, times);
    if (ver->parsed()) return cmd_verify(file, seed);
  } catch (const bdh::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitUsage;
}
