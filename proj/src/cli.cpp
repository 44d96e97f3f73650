#include "eqdim/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "eqdim/apfree.hpp"
#include "eqdim/conjectures.hpp"
#include "eqdim/distance.hpp"
#include "eqdim/equalizer.hpp"
#include "eqdim/families.hpp"
#include "eqdim/family_spec.hpp"
#include "eqdim/graph6.hpp"
#include "eqdim/report.hpp"
#include "eqdim/resolving.hpp"

namespace eqdim {

namespace {

struct GraphInput {
  std::string family;
  std::string graph6_path;
  std::string edges_path;

  void add_options(CLI::App* cmd) {
    auto* f = cmd->add_option("--family", family,
                              "family spec, e.g. path:8 or johnson:5,2");
    auto* g = cmd->add_option("--graph6", graph6_path,
                              "graph6 file, or - for standard input");
    auto* e = cmd->add_option("--edges", edges_path, "edge list file");
    f->excludes(g)->excludes(e);
    g->excludes(e);
  }

  bool provided() const {
    return !family.empty() || !graph6_path.empty() || !edges_path.empty();
  }

  std::string slurp(std::istream& in) const {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  Graph load(std::istream& in) const {
    if (!family.empty()) return generate(FamilySpec::parse(family));
    if (!graph6_path.empty()) {
      std::string line;
      if (graph6_path == "-") {
        if (!std::getline(in, line))
          throw std::invalid_argument("no graph6 line on standard input");
      } else {
        std::ifstream f(graph6_path);
        if (!f) throw std::invalid_argument("cannot open " + graph6_path);
        if (!std::getline(f, line))
          throw std::invalid_argument("empty graph6 file " + graph6_path);
      }
      if (!line.empty() && line.back() == '\r') line.pop_back();
      return parse_graph6(line);
    }
    if (!edges_path.empty()) {
      if (edges_path == "-") return parse_edge_list(slurp(in));
      std::ifstream f(edges_path);
      if (!f) throw std::invalid_argument("cannot open " + edges_path);
      std::ostringstream buf;
      buf << f.rdbuf();
      return parse_edge_list(buf.str());
    }
    throw std::invalid_argument("one of --family, --graph6, --edges is required");
  }
};

VertexSet parse_set_1based(const std::string& text, uint32_t n, bool complement) {
  VertexSet s(n);
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    size_t used = 0;
    unsigned long v = std::stoul(tok, &used);
    if (used != tok.size() || v < 1 || v > n)
      throw std::invalid_argument("set member '" + tok + "' outside 1.." +
                                  std::to_string(n));
    s.set(static_cast<uint32_t>(v - 1));
  }
  return complement ? s.complemented() : s;
}

std::string join_1based(const VertexSet& s) {
  std::ostringstream out;
  bool first = true;
  for (uint32_t v : s.elements()) {
    if (!first) out << ' ';
    out << v + 1;
    first = false;
  }
  return out.str();
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

struct Options {
  GraphInput input;
  std::string set_text;
  bool complement_set = false;
  std::string format = "human";
  uint64_t budget = kDefaultBudget;
  uint32_t workers = 1;
  uint32_t n_max = 0;
};

int cmd_compute(Options& opt, std::istream& in, std::ostream& out) {
  Graph g = opt.input.load(in);
  require_connected(g);
  DistanceMatrix d = DistanceMatrix::build(g);
  BoundsReport b = bounds(g, d);
  EqdimResult r = eqdim_exact(g, opt.budget);
  if (opt.format == "json") {
    emit(out, compute_json(g, r, b));
  } else {
    out << "graph: " << (g.name().empty() ? "(unnamed)" : g.name())
        << " (n = " << g.order() << ")\n";
    if (r.exact()) {
      out << "eqdim: " << *r.value << '\n';
      out << "witness (1-based): " << join_1based(*r.witness) << '\n';
    } else {
      out << "eqdim in [" << r.lower << ", " << r.upper
          << "] (node budget exhausted)\n";
    }
    out << "bounds: lower " << b.best_lower << ", upper " << b.best_upper << '\n';
    out << "nodes: " << r.nodes << '\n';
  }
  return 0;
}

int cmd_verify(Options& opt, std::istream& in, std::ostream& out) {
  Graph g = opt.input.load(in);
  require_connected(g);
  VertexSet s = parse_set_1based(opt.set_text, g.order(), opt.complement_set);
  EqualizerCertificate cert =
      verify_distance_equalizer(g, DistanceMatrix::build(g), s, false);
  if (opt.format == "json") {
    emit(out, certificate_json(g, s, cert));
  } else if (cert.valid) {
    out << "valid: {" << join_1based(s) << "} is a distance-equalizer set\n";
  } else {
    out << "invalid: no member is equidistant from " << cert.failing_pair->first + 1
        << " and " << cert.failing_pair->second + 1 << " (1-based)\n";
  }
  return cert.valid ? 0 : 1;
}

int cmd_bounds(Options& opt, std::istream& in, std::ostream& out) {
  Graph g = opt.input.load(in);
  require_connected(g);
  BoundsReport b = bounds(g);
  if (opt.format == "json") {
    Json j;
    j["graph"] = g.name().empty() ? Json(nullptr) : Json(g.name());
    j["n"] = g.order();
    Json bj = bounds_json(b);
    j["lower"] = bj["lower"];
    j["upper"] = bj["upper"];
    emit(out, j);
  } else {
    out << "graph: " << (g.name().empty() ? "(unnamed)" : g.name())
        << " (n = " << g.order() << ")\n";
    for (auto& [name, v] : b.lower) out << "lower " << name << ": " << v << '\n';
    for (auto& [name, v] : b.upper) out << "upper " << name << ": " << v << '\n';
    out << "best: " << b.best_lower << " <= eqdim <= " << b.best_upper << '\n';
  }
  return 0;
}

int cmd_family(Options& opt, std::ostream& out) {
  FamilyResult r = family_eqdim(FamilySpec::parse(opt.input.family));
  Graph g = generate(r.spec);
  if (opt.format == "json") {
    emit(out, family_json(g, r));
  } else {
    out << "graph: " << g.name() << " (n = " << g.order() << ")\n";
    switch (r.kind) {
      case FamilyResult::Kind::exact:
        out << "eqdim: " << r.value << '\n';
        break;
      case FamilyResult::Kind::upper_bound:
        out << "eqdim <= " << r.value << '\n';
        break;
      case FamilyResult::Kind::interval:
        out << "eqdim in [" << r.lo << ", " << r.hi
            << "] (exact value unknown)\n";
        break;
    }
    out << "witness (1-based): " << join_1based(r.witness) << '\n';
    out << "method: " << r.method << '\n';
  }
  return 0;
}

int cmd_table(Options& opt, std::ostream& out) {
  TableReport report = verify_family_table(opt.n_max, opt.budget);
  if (opt.format == "json") {
    Json rows = Json::array();
    for (auto& row : report.rows) {
      Json j;
      j["n"] = row.n;
      j["r_half"] = row.r_half;
      j["path"] = row.path_formula;
      j["cycle_lo"] = row.cycle_lo;
      j["cycle_hi"] = row.cycle_hi;
      j["cycle_search"] = row.cycle_search;
      j["ok"] = row.ok;
      rows.push_back(j);
    }
    Json j;
    j["rows"] = rows;
    j["all_ok"] = report.all_ok;
    emit(out, j);
  } else {
    out << table_tsv(report);
  }
  return report.all_ok ? 0 : 1;
}

int cmd_r_table(Options& opt, std::ostream& out) {
  if (opt.n_max > r_search_limit())
    throw std::invalid_argument("r-table capped at n = " +
                                std::to_string(r_search_limit()));
  if (opt.format == "json") {
    Json rows = Json::array();
    for (uint32_t n = 1; n <= opt.n_max; ++n) {
      RnRecord rec = r_exact(n);
      Json j;
      j["n"] = n;
      j["r"] = rec.r_value;
      j["witness"] = rec.witness.members;
      rows.push_back(j);
    }
    emit(out, rows);
  } else {
    out << "n\tr\twitness\n";
    for (uint32_t n = 1; n <= opt.n_max; ++n) {
      RnRecord rec = r_exact(n);
      out << n << '\t' << rec.r_value << '\t';
      for (size_t i = 0; i < rec.witness.members.size(); ++i)
        out << (i ? "," : "") << rec.witness.members[i];
      out << '\n';
    }
  }
  return 0;
}

int cmd_queens(Options& opt, std::ostream& out) {
  uint32_t n = opt.n_max;
  if (n < 1) throw std::invalid_argument("--n-max must give the board size");
  if (!opt.set_text.empty()) {
    VertexSet s = parse_set_1based(opt.set_text, n, opt.complement_set);
    std::vector<uint32_t> rows;
    for (uint32_t v : s.elements()) rows.push_back(v + 1);
    bool ok = is_diagonal_dominating(IntSet(n, rows), n);
    if (opt.format == "json") {
      Json j;
      j["board"] = n;
      j["set_1based"] = rows;
      j["dominating"] = ok;
      emit(out, j);
    } else {
      out << "queens at {" << join_1based(s) << "} "
          << (ok ? "cover" : "do not cover") << " the " << n << "x" << n
          << " board\n";
    }
    return ok ? 0 : 1;
  }
  // minimum diagonal dominating set = minimum path equalizer
  VertexSet s = path_equalizer(n);
  std::vector<uint32_t> rows;
  for (uint32_t v : s.elements()) rows.push_back(v + 1);
  if (!is_diagonal_dominating(IntSet(n, rows), n))
    throw std::logic_error("minimum queen placement failed the board check");
  if (opt.format == "json") {
    Json j;
    j["board"] = n;
    j["diag"] = s.count();
    j["set_1based"] = rows;
    emit(out, j);
  } else {
    out << "diag(" << n << ") = " << s.count() << '\n';
    out << "rows (1-based): " << join_1based(s) << '\n';
  }
  return 0;
}

int cmd_doubly(Options& opt, std::istream& in, std::ostream& out) {
  Graph g = opt.input.load(in);
  require_connected(g);
  if (!opt.set_text.empty()) {
    VertexSet s = parse_set_1based(opt.set_text, g.order(), opt.complement_set);
    DoublyResolvingCertificate cert = verify_doubly_resolving(g, s);
    if (opt.format == "json") {
      emit(out, doubly_certificate_json(g, s, cert));
    } else if (cert.valid) {
      out << "valid: {" << join_1based(s) << "} is a doubly resolving set\n";
    } else {
      out << "invalid: pair " << cert.failing_pair->first + 1 << ", "
          << cert.failing_pair->second + 1 << " (1-based) is not doubly resolved\n";
    }
    return cert.valid ? 0 : 1;
  }
  EqdimResult r = psi_exact(g, opt.budget);
  if (opt.format == "json") {
    emit(out, psi_json(g, r));
  } else {
    out << "graph: " << (g.name().empty() ? "(unnamed)" : g.name())
        << " (n = " << g.order() << ")\n";
    if (r.exact()) {
      out << "psi: " << *r.value << '\n';
      out << "witness (1-based): " << join_1based(*r.witness) << '\n';
    } else {
      out << "psi in [" << r.lower << ", " << r.upper
          << "] (node budget exhausted)\n";
    }
  }
  return 0;
}

int cmd_conjecture(const std::string& which, Options& opt, std::istream& in,
                   std::ostream& out) {
  HarnessReport report;
  if (which == "trees") {
    report = check_tree_conjecture(opt.n_max, opt.workers, opt.budget);
  } else if (which == "psi" || which == "nordhaus-gaddum") {
    Corpus corpus;
    if (!opt.input.graph6_path.empty()) {
      std::vector<Graph> graphs;
      if (opt.input.graph6_path == "-") {
        graphs = read_graph6_stream(in);
      } else {
        std::ifstream f(opt.input.graph6_path);
        if (!f)
          throw std::invalid_argument("cannot open " + opt.input.graph6_path);
        graphs = read_graph6_stream(f);
      }
      corpus.external = std::move(graphs);
    } else {
      corpus.n_max = opt.n_max;
    }
    report = which == "psi"
                 ? check_psi_conjecture(corpus, opt.workers, opt.budget)
                 : check_nordhaus_gaddum(corpus, opt.workers, opt.budget);
  } else if (which == "sigma") {
    report = check_sigma_bounds(4, opt.n_max, opt.budget);
  } else {
    throw std::invalid_argument(
        "unknown claim '" + which +
        "' (expected trees, psi, nordhaus-gaddum or sigma)");
  }
  if (opt.format == "json")
    emit(out, harness_json(report));
  else
    out << harness_tsv(report);
  return report.status == "counterexample" ? 1 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"exact solvers for distance-equalizer sets"};
  app.require_subcommand(1);

  Options opt;
  std::string conjecture_which;

  auto add_common = [&](CLI::App* cmd, bool with_input, bool with_set) {
    if (with_input) opt.input.add_options(cmd);
    if (with_set) {
      cmd->add_option("--set", opt.set_text, "vertex set, 1-based, e.g. 2,4,5");
      cmd->add_flag("--complement", opt.complement_set,
                    "use the complement of --set");
    }
    cmd->add_option("--format", opt.format, "json, tsv or human")
        ->check(CLI::IsMember({"json", "tsv", "human"}));
    cmd->add_option("--budget", opt.budget, "search node budget")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--workers", opt.workers, "worker thread cap")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* compute = app.add_subcommand("compute", "exact equidistant dimension");
  add_common(compute, true, false);

  CLI::App* verify = app.add_subcommand("verify", "check a distance-equalizer set");
  add_common(verify, true, true);

  CLI::App* bounds_cmd = app.add_subcommand("bounds", "lower and upper bounds");
  add_common(bounds_cmd, true, false);

  CLI::App* family = app.add_subcommand("family", "closed-form family results");
  add_common(family, true, false);

  CLI::App* table = app.add_subcommand("table", "path/cycle values vs. search");
  add_common(table, false, false);
  table->add_option("--n-max", opt.n_max, "largest order")->default_val(20);

  CLI::App* rtable = app.add_subcommand("r-table", "progression-free maxima");
  add_common(rtable, false, false);
  rtable->add_option("--n-max", opt.n_max, "largest n")->default_val(30);

  CLI::App* queens = app.add_subcommand("queens", "diagonal queen domination");
  add_common(queens, false, true);
  queens->add_option("--n-max", opt.n_max, "board size")->required();

  CLI::App* doubly = app.add_subcommand("doubly", "doubly resolving sets");
  add_common(doubly, true, true);

  CLI::App* conjecture = app.add_subcommand("conjecture", "brute-force harnesses");
  conjecture->add_option("claim", conjecture_which,
                         "trees, psi, nordhaus-gaddum or sigma")
      ->required();
  add_common(conjecture, true, false);
  conjecture->add_option("--n-max", opt.n_max, "corpus order cap")->default_val(5);

  std::vector<const char*> argv;
  argv.push_back("eqdim");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(compute)) return cmd_compute(opt, in, out);
    if (app.got_subcommand(verify)) {
      if (opt.set_text.empty())
        throw std::invalid_argument("verify needs --set");
      return cmd_verify(opt, in, out);
    }
    if (app.got_subcommand(bounds_cmd)) return cmd_bounds(opt, in, out);
    if (app.got_subcommand(family)) {
      if (opt.input.family.empty())
        throw std::invalid_argument("family needs --family");
      return cmd_family(opt, out);
    }
    if (app.got_subcommand(table)) return cmd_table(opt, out);
    if (app.got_subcommand(rtable)) return cmd_r_table(opt, out);
    if (app.got_subcommand(queens)) return cmd_queens(opt, out);
    if (app.got_subcommand(doubly)) return cmd_doubly(opt, in, out);
    if (app.got_subcommand(conjecture))
      return cmd_conjecture(conjecture_which, opt, in, out);
    throw std::invalid_argument("no subcommand given");
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace eqdim
