#include "oreforce/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <iostream>
#include <optional>

#include "oreforce/bench.hpp"
#include "oreforce/closure.hpp"
#include "oreforce/edge_list.hpp"
#include "oreforce/errors.hpp"
#include "oreforce/generators.hpp"
#include "oreforce/hforce.hpp"
#include "oreforce/json_io.hpp"
#include "oreforce/oracle.hpp"
#include "oreforce/ore.hpp"

namespace oreforce {
namespace {

using nlohmann::json;

struct Options {
  std::string input;
  bool as_json = false;
  std::string threshold = "weak";
  std::string set;
  bool count_only = false;
  std::size_t oracle_cap = OracleLimits{}.max_vertices;
  std::size_t n = 0, m = 0, k = 0;
  std::uint64_t seed = 0;
  std::string z_edges;
  std::size_t max_n = 400;
  std::size_t samples = 5;
};

Graph load(const Options& opt, std::istream& in) {
  if (opt.input == "-") return parse_edge_list(in);
  return read_edge_list(opt.input);
}

VertexSet parse_set(const std::string& text) {
  VertexSet out;
  std::string_view rest = text;
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view tok = rest.substr(0, comma);
    Vertex v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError("bad vertex '" + std::string(tok) + "' in --set");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t parse_threshold(const std::string& text, const Graph& g) {
  if (text == "weak") return g.order() + 1;
  if (text == "bc") return g.order();
  std::size_t t = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), t);
  if (ec != std::errc() || ptr != text.data() + text.size() || t == 0)
    throw ParseError("--threshold must be weak, bc, or a positive integer");
  return t;
}

void print_vertices(std::ostream& out, const VertexSet& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
  out << '\n';
}

int cmd_check(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  Graph g = load(opt, in);
  OtgReport report = check_otg(g);
  bool dirac = check_dirac(g);
  if (opt.as_json) {
    json doc = to_json(report);
    doc["n"] = g.order();
    doc["dirac"] = dirac;
    out << doc.dump() << '\n';
  } else if (report.is_otg) {
    out << "OTG: yes (n=" << g.order() << ", Dirac: " << (dirac ? "yes" : "no") << ")\n";
  }
  if (!report.is_otg) {
    const Edge& w = *report.witness;
    err << "not an OTG: vertices " << w.u << " and " << w.v << " are nonadjacent with degree sum "
        << g.degree(w.u) + g.degree(w.v) << " < " << g.order() << '\n';
    return kExitDomain;
  }
  return kExitOk;
}

int cmd_closure(const Options& opt, std::istream& in, std::ostream& out, std::ostream&) {
  Graph g = load(opt, in);
  ClosureTrace trace = close(g, parse_threshold(opt.threshold, g));
  if (opt.as_json) {
    out << to_json(trace).dump() << '\n';
    return kExitOk;
  }
  out << "threshold " << trace.threshold << ", " << trace.added.size() << " edge(s) added"
      << (trace.result.is_complete() ? ", result complete" : "") << '\n';
  for (const Edge& e : trace.added) out << "+ " << e.u << ' ' << e.v << '\n';
  return kExitOk;
}

int require_otg(const Graph& g, std::ostream& err) {
  OtgReport report = check_otg(g);
  if (report.is_otg) return kExitOk;
  err << "not an OTG: witness pair " << report.witness->u << ' ' << report.witness->v << '\n';
  return kExitDomain;
}

int cmd_hforce(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  Graph g = load(opt, in);
  if (int rc = require_otg(g, err)) return rc;
  HForceResult r = classify(g);
  if (opt.as_json) {
    out << to_json(g, r).dump() << '\n';
    return kExitOk;
  }
  out << "h = " << r.h << " (" << to_string(r.phi_class) << ")\nH-force set: ";
  print_vertices(out, r.hforce_set);
  return kExitOk;
}

int cmd_hamcycle(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  Graph g = load(opt, in);
  if (int rc = require_otg(g, err)) return rc;
  Cycle c = hamiltonian_cycle(g);
  if (opt.as_json) {
    out << json{{"n", g.order()}, {"cycle", c.vertices()}}.dump() << '\n';
    return kExitOk;
  }
  print_vertices(out, c.vertices());
  return kExitOk;
}

int cmd_oracle_min(const Options& opt, std::istream& in, std::ostream& out, std::ostream&) {
  Graph g = load(opt, in);
  OracleReport report = min_hforce(g, {opt.oracle_cap});
  if (opt.as_json) {
    out << to_json(g, report).dump() << '\n';
    return kExitOk;
  }
  out << "min h = " << report.min_h << "\nminimum H-force set: ";
  print_vertices(out, report.min_set);
  out << "non-Hamiltonian cycles: " << report.nonhamiltonian_cycles.size() << '\n';
  return kExitOk;
}

int cmd_oracle_hforce(const Options& opt, std::istream& in, std::ostream& out, std::ostream&) {
  Graph g = load(opt, in);
  VertexSet x = parse_set(opt.set);
  bool forces = is_hforce(g, x, {opt.oracle_cap});
  if (opt.as_json) {
    out << json{{"n", g.order()}, {"set", x}, {"is_hforce", forces}}.dump() << '\n';
  } else {
    out << (forces ? "H-force set" : "not an H-force set") << '\n';
  }
  return kExitOk;
}

int cmd_oracle_cycles(const Options& opt, std::istream& in, std::ostream& out, std::ostream&) {
  Graph g = load(opt, in);
  if (opt.count_only) {
    std::size_t count = 0;
    for_each_cycle(g, [&](std::span<const Vertex>) { ++count; }, {opt.oracle_cap});
    if (opt.as_json)
      out << json{{"n", g.order()}, {"cycle_count", count}}.dump() << '\n';
    else
      out << count << '\n';
    return kExitOk;
  }
  auto cycles = enumerate_cycles(g, {opt.oracle_cap});
  if (opt.as_json) {
    json arr = json::array();
    for (const Cycle& c : cycles) arr.push_back(c.vertices());
    out << json{{"n", g.order()}, {"cycle_count", cycles.size()}, {"cycles", arr}}.dump() << '\n';
    return kExitOk;
  }
  for (const Cycle& c : cycles) print_vertices(out, c.vertices());
  return kExitOk;
}

int cmd_bench(const Options& opt, std::ostream& out, std::ostream& err) {
  auto rows = bench(opt.max_n, opt.samples, opt.seed);
  write_bench_csv(out, rows);
  double slope = loglog_slope(rows, 50, opt.max_n);
  if (!std::isnan(slope)) err << "# log-log slope over n in [50, " << opt.max_n << "]: " << slope << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"H-force sets of graphs satisfying Ore's condition", "oreforce"};
  app.require_subcommand(1);
  Options opt;
  std::function<int()> action;

  auto with_input = [&](CLI::App* sub) {
    sub->add_option("input", opt.input, "edge-list file, or - for stdin")->required();
    sub->add_flag("--json", opt.as_json, "machine-readable output");
  };

  auto* check = app.add_subcommand("check", "test Ore's and Dirac's conditions");
  with_input(check);
  check->callback([&] { action = [&] { return cmd_check(opt, in, out, err); }; });

  auto* closure = app.add_subcommand("closure", "weak or Bondy-Chvatal closure with trace");
  with_input(closure);
  closure->add_option("--threshold", opt.threshold, "weak (n+1), bc (n), or an integer");
  closure->callback([&] { action = [&] { return cmd_closure(opt, in, out, err); }; });

  auto* hforce = app.add_subcommand("hforce", "H-force number and a minimum H-force set");
  with_input(hforce);
  hforce->callback([&] { action = [&] { return cmd_hforce(opt, in, out, err); }; });

  auto* hamcycle = app.add_subcommand("hamcycle", "Hamiltonian cycle of an OTG");
  with_input(hamcycle);
  hamcycle->callback([&] { action = [&] { return cmd_hamcycle(opt, in, out, err); }; });

  auto* oracle = app.add_subcommand("oracle", "exhaustive ground truth for small graphs");
  oracle->require_subcommand(1);
  auto cap_option = [&](CLI::App* sub) {
    sub->add_option("--max-vertices", opt.oracle_cap, "oracle size limit")->capture_default_str();
  };
  auto* omin = oracle->add_subcommand("min", "minimum H-force set by exhaustive search");
  with_input(omin);
  cap_option(omin);
  omin->callback([&] { action = [&] { return cmd_oracle_min(opt, in, out, err); }; });
  auto* ohforce = oracle->add_subcommand("hforce", "decide whether a set is an H-force set");
  with_input(ohforce);
  cap_option(ohforce);
  ohforce->add_option("--set", opt.set, "comma-separated vertices")->required();
  ohforce->callback([&] { action = [&] { return cmd_oracle_hforce(opt, in, out, err); }; });
  auto* ocycles = oracle->add_subcommand("cycles", "list every cycle in canonical form");
  with_input(ocycles);
  cap_option(ocycles);
  ocycles->add_flag("--count-only", opt.count_only, "print only the number of cycles");
  ocycles->callback([&] { action = [&] { return cmd_oracle_cycles(opt, in, out, err); }; });

  auto* gen = app.add_subcommand("gen", "emit a family member as an edge list");
  gen->require_subcommand(1);
  auto emit = [&](auto make) {
    return [&, make] {
      action = [&, make] {
        write_edge_list(out, make());
        return static_cast<int>(kExitOk);
      };
    };
  };
  auto* gphi1 = gen->add_subcommand("phi1", "K2 v (K_m + K_{n-m-2})");
  gphi1->add_option("--n", opt.n)->required();
  gphi1->add_option("--m", opt.m)->required();
  gphi1->callback(emit([&] { return gen_phi1(opt.n, opt.m); }));
  auto* gg21 = gen->add_subcommand("g21", "K^c_{m+1} v K_{m+1}");
  gg21->add_option("--m", opt.m)->required();
  gg21->callback(emit([&] { return gen_g21(opt.m); }));
  auto* gkb = gen->add_subcommand("kb", "complete bipartite K_{k,k}");
  gkb->add_option("--k", opt.k)->required();
  gkb->callback(emit([&] { return gen_complete_bipartite(opt.k); }));
  auto* gpsi = gen->add_subcommand("psi", "Z_m v (K^c_m + {u})");
  gpsi->add_option("--m", opt.m)->required();
  gpsi->add_option("--z-edges", opt.z_edges, "edges inside Z, e.g. 0-1,1-2");
  gpsi->callback(emit([&] { return gen_psi(opt.m, parse_edge_spec(opt.z_edges)); }));
  auto* gphi3 = gen->add_subcommand("phi3", "Z_{n-m} v K_m with Z vertices of degree n/2");
  gphi3->add_option("--n", opt.n)->required();
  gphi3->add_option("--m", opt.m)->required();
  gphi3->add_option("--z-edges", opt.z_edges, "edges inside Z");
  gphi3->callback(emit([&] { return gen_phi3_regular(opt.n, opt.m, parse_edge_spec(opt.z_edges)); }));
  auto* gcomplete = gen->add_subcommand("complete", "K_n");
  gcomplete->add_option("--n", opt.n)->required();
  gcomplete->callback(emit([&] { return gen_complete(opt.n); }));
  auto* grandom = gen->add_subcommand("random", "seeded random OTG");
  grandom->add_option("--n", opt.n)->required();
  grandom->add_option("--seed", opt.seed);
  grandom->callback(emit([&] { return gen_random_otg(opt.n, opt.seed); }));

  auto* benchcmd = app.add_subcommand("bench", "classification runtime on random OTGs (CSV)");
  benchcmd->add_option("--max-n", opt.max_n)->capture_default_str();
  benchcmd->add_option("--samples", opt.samples)->capture_default_str();
  benchcmd->add_option("--seed", opt.seed)->capture_default_str();
  benchcmd->callback([&] {
    action = [&] {
      if (opt.max_n < 5) throw std::invalid_argument("--max-n must be at least 5");
      return cmd_bench(opt, out, err);
    };
  });

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    return action ? action() : static_cast<int>(kExitUsage);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const InternalInvariantError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace oreforce
