#include "bullfree_cli/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bullfree/capacity.hpp"
#include "bullfree/cnf.hpp"
#include "bullfree/errors.hpp"
#include "bullfree/generators.hpp"
#include "bullfree/high_girth.hpp"
#include "bullfree/trigraph_io.hpp"
#include "bullfree_cli/report.hpp"

namespace bullfree::cli {
namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << contents)) throw InputError("cannot write " + path);
}

std::string list(const VertexList& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

struct Options {
  std::uint64_t seed = 0;
  int threads = 1;
  std::string format = "json";
  long long cap = -1;
  bool timing = false;
};

// Filled by a command; the caller wraps it into the report envelope.
struct Outcome {
  json result;
  std::string digest;
  std::string text;
  int exit = kExitOk;
  bool raw = false;  // `text` is the product itself (a graph on stdout)
};

Outcome cmd_detect(const std::string& path, bool bull, int holes, bool triangle, bool want_girth) {
  const std::string bytes = slurp(path);
  const Trigraph t = parse_trigraph(bytes);
  Outcome o;
  o.digest = fnv1a_hex(bytes);
  if (!bull && holes == 0 && !triangle && !want_girth) bull = true;
  bool found = false;
  bool searched = false;
  std::ostringstream text;
  if (bull) {
    searched = true;
    auto w = find_bull(t);
    o.result["bull"] = w ? to_json(*w) : json(nullptr);
    text << "bull: " << (w ? list(w->vertices) : "none") << '\n';
    found = found || w.has_value();
  }
  if (holes != 0) {
    if (holes < 4) throw UsageError("--holes needs a maximum length of at least 4");
    searched = true;
    json arr = json::array();
    for (int len = 4; len <= holes; ++len) {
      auto w = find_hole(t, len);
      arr.push_back({{"length", len}, {"witness", w ? to_json(*w) : json(nullptr)}});
      text << "hole " << len << ": " << (w ? list(w->vertices) : "none") << '\n';
      found = found || w.has_value();
    }
    o.result["holes"] = std::move(arr);
  }
  if (triangle) {
    searched = true;
    auto w = find_triangle(t);
    o.result["triangle"] = w ? to_json(*w) : json(nullptr);
    text << "triangle: " << (w ? list(w->vertices) : "none") << '\n';
    found = found || w.has_value();
  }
  if (want_girth) {
    auto g = girth(t);
    o.result["girth"] = g ? json(*g) : json("infinite");
    text << "girth: " << (g ? std::to_string(*g) : "infinite") << '\n';
  }
  o.text = text.str();
  o.exit = searched && !found ? kExitNo : kExitOk;
  return o;
}

Outcome cmd_decompose(const std::string& path, int threads) {
  const std::string bytes = slurp(path);
  const Trigraph t = parse_trigraph(bytes);
  Outcome o;
  o.digest = fnv1a_hex(bytes);
  const auto d = find_decomposition(t, threads);
  o.result = to_json(d);
  std::ostringstream text;
  text << "tag: " << to_string(d.tag) << '\n';
  if (d.tag == DecompositionOutcome::Tag::none) {
    text << o.result["message"].get<std::string>() << '\n';
    o.exit = kExitNo;
  } else {
    text << "side: " << list(d.side) << '\n';
    if (d.pair) {
      const auto& p = *d.pair;
      text << "A " << list(p.a) << " B " << list(p.b) << " C " << list(p.c) << " D " << list(p.d)
           << " E " << list(p.e) << " F " << list(p.f) << '\n';
    }
  }
  o.text = text.str();
  return o;
}

Outcome cmd_solve(const std::string& path, long long k, const Options& opt) {
  const std::string bytes = slurp(path);
  const Trigraph t = parse_trigraph(bytes);
  Outcome o;
  o.digest = fnv1a_hex(bytes);
  if (auto bull = find_bull(t)) {
    o.result = {{"refused", "input contains a bull"}, {"witness", to_json(*bull)}};
    o.text = "refused: bull " + list(bull->vertices) + "\n";
    o.exit = kExitUsage;
    return o;
  }
  if (!t.is_monogamous()) {
    o.result = {{"refused", "input is not monogamous"}};
    o.text = "refused: not monogamous\n";
    o.exit = kExitUsage;
    return o;
  }
  const auto d = solve_wis(t, k, opt.threads);
  o.result = to_json(d);
  o.result["k"] = k;
  std::ostringstream text;
  text << (d.yes ? "YES" : "NO");
  if (d.alpha) text << " alpha " << *d.alpha;
  text << "\ncertificate: " << list(d.certificate.vertices) << " weight "
       << d.certificate.total_weight << '\n';
  if (opt.cap >= 0) {
    const auto sets = enumerate_maximal_independent_sets(t, opt.cap);
    o.result["maximalSets"] = {{"cap", opt.cap},
                               {"count", sets.sets.size()},
                               {"overflow", sets.overflow}};
    text << "maximal independent sets: " << (sets.overflow ? "more than " : "")
         << (sets.overflow ? opt.cap : static_cast<long long>(sets.sets.size())) << '\n';
  }
  o.text = text.str();
  o.exit = d.yes ? kExitOk : kExitNo;
  return o;
}

Outcome cmd_reduce(const std::string& path, int p, const std::string& output,
                   const std::string& sidecar_path) {
  const std::string bytes = slurp(path);
  const CnfFormula f = parse_cnf(bytes);
  if (p < 3) throw UsageError("--p must be at least 3");
  const ReductionArtifact art = reduce(f, p);
  Outcome o;
  o.digest = fnv1a_hex(bytes);
  const json sidecar = reduction_sidecar(art);
  write_file(output, format_trigraph(art.subdivided.graph));
  const std::string side = sidecar_path.empty() ? output + ".json" : sidecar_path;
  write_file(side, sidecar.dump(2) + "\n");
  o.result["graphFile"] = output;
  o.result["sidecarFile"] = side;
  o.result["p"] = art.p;
  o.result["q"] = art.q;
  o.result["m"] = f.num_clauses();
  o.result["vars"] = f.num_vars;
  o.result["sparsity"] = f.sparsity();
  o.result["vertices"] = art.subdivided.graph.size();
  o.result["edgeCountOriginal"] = art.conflict.edges.size();
  o.result["targetK"] = art.target_k;
  std::ostringstream text;
  text << "q " << art.q << ", " << art.subdivided.graph.size() << " vertices, targetK "
       << art.target_k << '\n';
  if (2 * p - 1 <= 9) {
    const auto report = verify_instance(art);
    o.result["verification"] = to_json(report);
    text << "verification: " << (report.passed() ? "pass" : "fail") << '\n';
    if (!report.passed()) o.exit = kExitNo;
  } else {
    o.result["verification"] = "skipped: hole lengths above 9";
    text << "verification: skipped\n";
  }
  o.text = text.str();
  return o;
}

Outcome cmd_bounds(long long k, std::optional<int> p) {
  Outcome o;
  o.digest = fnv1a_hex("bounds " + std::to_string(k) + " " + (p ? std::to_string(*p) : "-"));
  const auto b = kernel_bounds(k, p);
  o.result = to_json(b);
  std::ostringstream text;
  text << "k " << b.k << "\ng " << b.g << "\nf " << b.f << "\nfOld " << b.f_old << '\n';
  if (b.gp) text << "gp " << *b.gp << '\n';
  o.text = text.str();
  return o;
}

Outcome cmd_verify_t1(const std::string& path, const std::string& structure_path) {
  const std::string bytes = slurp(path);
  const std::string structure_bytes = slurp(structure_path);
  const Trigraph t = parse_trigraph(bytes);
  json doc;
  try {
    doc = json::parse(structure_bytes);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("structure file: ") + e.what());
  }
  const auto report = verify_t1(t, t1_structure_from_json(doc));
  Outcome o;
  o.digest = fnv1a_hex(bytes + structure_bytes);
  o.result = to_json(report);
  std::ostringstream text;
  for (const auto& c : report.checks) {
    text << c.name << ": " << to_string(c.status);
    if (!c.detail.empty()) text << " (" << c.detail << ")";
    text << '\n';
  }
  o.text = text.str();
  o.exit = report.passed() ? kExitOk : kExitNo;
  return o;
}

Outcome cmd_verify_instance(const std::string& path, int p) {
  const std::string bytes = slurp(path);
  const CnfFormula f = parse_cnf(bytes);
  const auto art = reduce(f, p);
  const auto report = verify_instance(art);
  Outcome o;
  o.digest = fnv1a_hex(bytes);
  o.result = to_json(report);
  o.result["targetK"] = art.target_k;
  o.text = std::string("instance: ") + (report.passed() ? "pass" : "fail") + "\n";
  o.exit = report.passed() ? kExitOk : kExitNo;
  return o;
}

void emit_graph(Outcome& o, const Trigraph& t, const std::string& output, const std::string& args) {
  const std::string text = format_trigraph(t);
  o.digest = fnv1a_hex(args);
  o.result["vertices"] = t.size();
  if (output.empty()) {
    o.text = text;
    o.raw = true;
  } else {
    write_file(output, text);
    o.result["file"] = output;
    o.text = "wrote " + output + "\n";
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homogeneous decompositions, independent sets and hardness instances for bull-free trigraphs",
               "bullfree"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--seed", opt.seed, "Seed recorded in the report and used by generators");
  app.add_option("--threads", opt.threads, "Worker threads for homogeneous searches")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--cap", opt.cap, "Maximal independent set enumeration cap (solve)")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--timing", opt.timing, "Include wall time in the report");

  std::string path, output, sidecar, structure;
  int holes = 0;
  bool bull = false, triangle = false, want_girth = false;
  long long k = 0;
  int p = 0;

  auto* detect = app.add_subcommand("detect", "Search for induced bulls, holes, triangles; report girth");
  detect->add_option("file", path, "Trigraph file")->required();
  detect->add_flag("--bull", bull, "Induced bull (default when nothing else is requested)");
  detect->add_option("--holes", holes, "Induced cycles of every length 4..N");
  detect->add_flag("--triangle", triangle, "Three pairwise adjacent vertices");
  detect->add_flag("--girth", want_girth, "Shortest cycle length (graphs only)");

  auto* decompose = app.add_subcommand("decompose", "Small homogeneous pair or minimally-sided cut");
  decompose->add_option("file", path, "Trigraph file")->required();

  auto* solve = app.add_subcommand("solve", "Decide alpha(T) >= k on a bull-free monogamous trigraph");
  solve->add_option("file", path, "Trigraph file")->required();
  solve->add_option("--k", k, "Target weight")->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "Sparse 3-SAT to a subdivided conflict graph");
  reduce_cmd->add_option("file", path, "DIMACS CNF file")->required();
  reduce_cmd->add_option("--p", p, "Forbidden hole bound (p >= 3)")->required();
  reduce_cmd->add_option("-o,--output", output, "Graph output file; sidecar goes to <output>.json")
      ->required();
  reduce_cmd->add_option("--sidecar", sidecar, "Sidecar path override");

  std::optional<int> bounds_p;
  auto* bounds = app.add_subcommand("bounds", "Kernel size bounds g, f, fOld and gp");
  bounds->add_option("--k", k, "Parameter k")->required();
  bounds->add_option("--p", bounds_p, "Girth parameter for gp (p >= 3)");

  auto* gen = app.add_subcommand("gen", "Random instance generators");
  gen->require_subcommand(1);
  int n = 0, target_girth = 4, proposals = -1;
  auto* gen_girth = gen->add_subcommand("high-girth", "Random graph of girth >= --girth");
  gen_girth->add_option("--n", n, "Vertex count")->required()->check(CLI::NonNegativeNumber);
  gen_girth->add_option("--girth", target_girth, "Target girth (>= 4)");
  gen_girth->add_option("--proposals", proposals, "Edge proposals (default 2n^2)");
  gen_girth->add_option("-o,--output", output, "Output file (stdout otherwise)");
  PairDensities dens;
  bool monogamous = false;
  auto* gen_tri = gen->add_subcommand("trigraph", "Random trigraph");
  gen_tri->add_option("--n", n, "Vertex count")->required()->check(CLI::NonNegativeNumber);
  gen_tri->add_option("--edge", dens.strong_edge, "Probability of a strong edge");
  gen_tri->add_option("--switchable", dens.switchable, "Probability of a switchable pair");
  gen_tri->add_option("--antiedge", dens.strong_antiedge, "Probability of a strong antiedge");
  gen_tri->add_flag("--monogamous", monogamous, "Switchable pairs form a matching");
  gen_tri->add_option("-o,--output", output, "Output file (stdout otherwise)");

  auto* verify = app.add_subcommand("verify", "Structural verifiers");
  verify->require_subcommand(1);
  auto* verify_t1_cmd = verify->add_subcommand("t1", "Check a T1 structure against a trigraph");
  verify_t1_cmd->add_option("file", path, "Trigraph file")->required();
  verify_t1_cmd->add_option("--structure", structure, "Structure JSON")->required();
  auto* verify_inst = verify->add_subcommand("instance", "Check a reduction output for bulls and short holes");
  verify_inst->add_option("file", path, "DIMACS CNF file")->required();
  verify_inst->add_option("--p", p, "Hole bound (3 <= p <= 5)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  std::string command;
  const auto started = std::chrono::steady_clock::now();
  Outcome o;
  try {
    if (*detect) {
      command = "detect";
      o = cmd_detect(path, bull, holes, triangle, want_girth);
    } else if (*decompose) {
      command = "decompose";
      o = cmd_decompose(path, opt.threads);
    } else if (*solve) {
      command = "solve";
      o = cmd_solve(path, k, opt);
    } else if (*reduce_cmd) {
      command = "reduce";
      o = cmd_reduce(path, p, output, sidecar);
    } else if (*bounds) {
      command = "bounds";
      o = cmd_bounds(k, bounds_p);
    } else if (*gen_girth) {
      command = "gen high-girth";
      const Trigraph g = gen_high_girth(n, target_girth, opt.seed, proposals);
      emit_graph(o, g, output,
                 "high-girth " + std::to_string(n) + " " + std::to_string(target_girth) + " " +
                     std::to_string(proposals));
      o.result["girth"] = girth(g) ? json(*girth(g)) : json("infinite");
    } else if (*gen_tri) {
      command = "gen trigraph";
      const Trigraph t = gen_random_trigraph(n, dens, monogamous, opt.seed);
      std::ostringstream args;
      args << "trigraph " << n << ' ' << dens.strong_edge << ' ' << dens.switchable << ' '
           << dens.strong_antiedge << ' ' << monogamous;
      emit_graph(o, t, output, args.str());
    } else if (*verify_t1_cmd) {
      command = "verify t1";
      o = cmd_verify_t1(path, structure);
    } else if (*verify_inst) {
      command = "verify instance";
      o = cmd_verify_instance(path, p);
    }
  } catch (const ParseError& e) {
    err << "bullfree: parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const InputError& e) {
    err << "bullfree: " << e.what() << '\n';
    return kExitParse;
  } catch (const CapacityError& e) {
    err << "bullfree: capacity: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const UsageError& e) {
    err << "bullfree: usage: " << e.what() << '\n';
    return kExitUsage;
  }

  json report{{"command", command}, {"inputDigest", o.digest}, {"seed", opt.seed}, {"result", o.result}};
  if (opt.timing) {
    report["timingMs"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
                             .count();
  }
  if (opt.format == "json" && !o.raw) {
    out << report.dump(2) << '\n';
  } else {
    out << o.text;
  }
  return o.exit;
}

}  // namespace bullfree::cli
