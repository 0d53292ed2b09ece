#include "cli.hpp"

#include "nsymkit/notation.hpp"
#include "nsymkit/polyreal.hpp"
#include "nsymkit/transmat.hpp"
#include "nsymkit/verify.hpp"
#include "nsymkit/walls.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <stdexcept>

namespace nsymkit::cli {

namespace {

enum class Format { Pretty, Json, Csv };

struct Config {
  int max_degree = kDefaultDegreeCap;
  Format format = Format::Pretty;
  std::optional<int> n;
  std::optional<int> m;
};

class UsageError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

int max_degree_from_env() {
  const char* v = std::getenv("NSYMKIT_MAX_DEGREE");
  if (!v || !*v) return kDefaultDegreeCap;
  try {
    std::size_t used = 0;
    const int cap = std::stoi(v, &used);
    if (used == std::string(v).size() && cap >= 1) return cap;
  } catch (const std::exception&) {
  }
  throw UsageError(std::string("NSYMKIT_MAX_DEGREE must be a positive integer, got '") + v + "'");
}

void check_cap(const Config& cfg, int degree) {
  if (degree > cfg.max_degree)
    throw UsageError("degree " + std::to_string(degree) + " exceeds the cap of " + std::to_string(cfg.max_degree) +
                     " (set NSYMKIT_MAX_DEGREE to raise it)");
}

template <typename Elem>
void print_element(std::ostream& out, const Config& cfg, const Elem& x) {
  switch (cfg.format) {
    case Format::Pretty: out << to_string(x) << '\n'; break;
    case Format::Json: out << to_json(x) << '\n'; break;
    case Format::Csv:
      out << "index,coeff\n";
      for (const auto& [alpha, c] : x.terms()) out << '"' << to_string(alpha) << "\"," << to_string(c) << '\n';
      break;
  }
}

int cmd_convert(std::ostream& out, const Config& cfg, const std::string& space, const std::string& expr,
                const std::string& to) {
  if (space == "nsym") {
    const NSymElem x = parse_nsym(expr);
    check_cap(cfg, x.degree());
    print_element(out, cfg, convert(x, parse_nsym_basis(to)));
  } else if (space == "qsym") {
    const QSymElem x = parse_qsym(expr);
    check_cap(cfg, x.degree());
    print_element(out, cfg, qconvert(x, parse_qsym_basis(to)));
  } else {
    throw UsageError("space must be nsym or qsym, got '" + space + "'");
  }
  return kExitOk;
}

int parse_degree(const std::string& s) {
  try {
    std::size_t used = 0;
    const int n = std::stoi(s, &used);
    if (used == s.size()) return n;
  } catch (const std::exception&) {
  }
  throw UsageError("expected a degree, got '" + s + "'");
}

int cmd_matrix(std::ostream& out, const Config& cfg, const std::vector<std::string>& args) {
  TransitionMatrix t;
  if (args.size() == 3 && args[0] == "named") {
    const int n = parse_degree(args[2]);
    check_cap(cfg, n);
    t = named_matrix(parse_named_matrix(args[1]), n);
  } else if (args.size() == 4 && (args[0] == "nsym" || args[0] == "qsym")) {
    const int n = parse_degree(args[3]);
    check_cap(cfg, n);
    t = args[0] == "nsym" ? cob_matrix(parse_nsym_basis(args[1]), parse_nsym_basis(args[2]), n)
                          : cob_matrix(parse_qsym_basis(args[1]), parse_qsym_basis(args[2]), n);
  } else {
    throw UsageError("usage: matrix (nsym|qsym) FROM TO N | matrix named NAME N");
  }
  switch (cfg.format) {
    case Format::Pretty: out << to_text(t); break;
    case Format::Json: out << to_json(t) << '\n'; break;
    case Format::Csv: out << to_csv(t); break;
  }
  return kExitOk;
}

int cmd_verify(std::ostream& out, const Config& cfg, const std::string& suite, bool strict) {
  const Suite s = parse_suite(suite);
  const int n = cfg.n.value_or(6);
  if (n < 1) throw UsageError("--n must be at least 1");
  check_cap(cfg, n);
  const int m = cfg.m.value_or(n);
  if ((s == Suite::All || s == Suite::Oracle) && m < n)
    throw UsageError("the oracle suite needs --m >= --n");
  const Report report = run_suite(s, n, m);
  if (cfg.format == Format::Json)
    out << report.to_json() << '\n';
  else
    out << report.to_text();
  return (strict ? report.all_passed() : report.passed()) ? kExitOk : kExitFailed;
}

int cmd_realize(std::ostream& out, const Config& cfg, const std::string& gen, bool commutative) {
  if (commutative) {
    const CGenerator g = parse_c_generator(gen);
    check_cap(cfg, g.degree());
    const CPoly p = realize_c(g, cfg.m.value_or(std::max(1, g.degree())));
    out << (cfg.format == Format::Json ? to_json(p) : to_string(p)) << '\n';
  } else {
    const NcGenerator g = parse_nc_generator(gen);
    check_cap(cfg, g.degree());
    const NCPoly p = realize_nc(g, cfg.m.value_or(std::max(1, g.degree())), std::max(g.degree(), 1));
    out << (cfg.format == Format::Json ? to_json(p) : to_string(p)) << '\n';
  }
  return kExitOk;
}

std::string stats_line(const Wall& w) {
  return "lp=" + to_string(wall_stat(w, WallStat::LastPart)) + " fp=" + to_string(wall_stat(w, WallStat::FirstPart)) +
         " pb=" + to_string(wall_stat(w, WallStat::Bricks)) + " fb=" + to_string(wall_stat(w, WallStat::BrickFactorial));
}

int cmd_walls(std::ostream& out, const Config& cfg, const std::string& shape_text, const std::string& type_text,
              bool stats, bool indexed, bool tabloids) {
  const bool has_shape = !shape_text.empty(), has_type = !type_text.empty();
  if (!has_shape && !has_type) throw UsageError("walls needs --shape, --type or both");
  const bool json = cfg.format == Format::Json;

  if (tabloids) {
    if (!has_shape || !has_type) throw UsageError("--tabloids needs both --shape and --type");
    const Partition shape(parse_composition(shape_text)), type(parse_composition(type_text));
    const auto ts = brick_tabloids(shape, type);
    Integer total = 0;
    for (const auto& t : ts) total += weight(t);
    const Integer ordered = ordered_count(shape, type);
    if (json) {
      nlohmann::ordered_json j;
      auto list = nlohmann::json::array();
      for (const auto& t : ts) list.push_back(nlohmann::json::parse(to_json(t)));
      j["tabloids"] = list;
      j["count"] = ts.size();
      j["total_weight"] = total.get_str();
      j["ordered_count"] = ordered.get_str();
      out << j.dump(2) << '\n';
    } else {
      for (const auto& t : ts) out << render(t) << "weight=" << weight(t).get_str() << "\n\n";
      out << "count=" << ts.size() << " total_weight=" << total.get_str() << " ordered_count=" << ordered.get_str()
          << '\n';
    }
    return kExitOk;
  }

  std::vector<Wall> walls;
  if (has_shape && has_type) {
    const Composition shape = parse_composition(shape_text), type = parse_composition(type_text);
    walls.push_back(make_wall(shape, type));
    if (indexed) {
      const auto iws = enumerate_indexed_walls(shape, type);
      if (json) {
        auto list = nlohmann::json::array();
        for (const auto& iw : iws) list.push_back(iw.labels);
        nlohmann::ordered_json j;
        j["wall"] = nlohmann::json::parse(to_json(walls.front()));
        j["indexings"] = list;
        j["count"] = indexed_wall_count(shape, type).get_str();
        out << j.dump(2) << '\n';
      } else {
        for (const auto& iw : iws) out << render(iw) << '\n';
        out << "indexed walls: " << indexed_wall_count(shape, type).get_str() << '\n';
      }
      return kExitOk;
    }
  } else if (has_shape) {
    // Listings have 2^(n-1) entries, so only they are subject to the degree cap.
    const Composition shape = parse_composition(shape_text);
    check_cap(cfg, shape.size());
    walls = enumerate_walls(WallMode::OfShape, shape);
  } else {
    const Composition type = parse_composition(type_text);
    check_cap(cfg, type.size());
    walls = enumerate_walls(WallMode::OfType, type);
  }

  if (json) {
    auto list = nlohmann::json::array();
    for (const auto& w : walls) list.push_back(nlohmann::json::parse(to_json(w)));
    out << list.dump(2) << '\n';
    return kExitOk;
  }
  for (std::size_t i = 0; i < walls.size(); ++i) {
    const Wall& w = walls[i];
    if (i) out << '\n';
    out << "shape " << to_string(w.shape) << " type " << to_string(w.type) << '\n' << render(w);
    if (stats) out << stats_line(w) << '\n';
  }
  return kExitOk;
}

int cmd_pair(std::ostream& out, const Config& cfg, const std::string& qexpr, const std::string& nexpr) {
  const QSymElem q = parse_qsym(qexpr);
  const NSymElem x = parse_nsym(nexpr);
  check_cap(cfg, std::max(q.degree(), x.degree()));
  const Rational v = pair(q, x);
  if (cfg.format == Format::Json)
    out << nlohmann::json{{"value", to_string(v)}}.dump() << '\n';
  else
    out << to_string(v) << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with noncommutative symmetric and quasisymmetric functions", "nsymkit"};
  app.fallthrough();
  app.require_subcommand(1);

  Config cfg;
  std::string format = "pretty";
  bool csv = false;
  int n = 0, m = 0;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"pretty", "json", "csv"}));
  app.add_flag("--csv", csv, "Shorthand for --format csv");
  auto* n_opt = app.add_option("--n", n, "Degree (verify: largest degree checked)");
  auto* m_opt = app.add_option("--m", m, "Number of variables")->check(CLI::Range(1, kMaxVariables));

  std::string space, expr, to;
  auto* convert_cmd = app.add_subcommand("convert", "Change basis of an element");
  convert_cmd->add_option("space", space, "nsym or qsym")->required();
  convert_cmd->add_option("expr", expr, "Element, e.g. \"psi[3]\" or \"F[2,1] - 2 M[3]\"")->required();
  convert_cmd->add_option("--to", to, "Target basis")->required();

  std::vector<std::string> matrix_args;
  auto* matrix_cmd = app.add_subcommand("matrix", "Print a transition matrix");
  matrix_cmd->add_option("args", matrix_args, "(nsym|qsym) FROM TO N, or named NAME N")->required();

  std::string suite = "all";
  bool strict = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("suite", suite, "all, series, matrices, walls, bricks, duality or oracle");
  verify_cmd->add_flag("--strict", strict, "Also fail on reproduced misprints");

  std::string gen;
  bool commutative = false;
  auto* realize_cmd = app.add_subcommand("realize", "Expand a generator as a polynomial");
  realize_cmd->add_option("generator", gen, "e.g. \"psi 3\", \"ribbon 2,1\"; with --commutative \"M 2,1\"")
      ->required();
  realize_cmd->add_flag("--commutative", commutative, "Use commuting variables");

  std::string shape, type;
  bool stats = false, indexed = false, tabloids = false;
  auto* walls_cmd = app.add_subcommand("walls", "Enumerate walls or brick tabloids");
  walls_cmd->add_option("--shape", shape, "Shape composition (partition with --tabloids)");
  walls_cmd->add_option("--type", type, "Type composition (partition with --tabloids)");
  walls_cmd->add_flag("--stats", stats, "Print lp, fp, pb, fb");
  walls_cmd->add_flag("--indexed", indexed, "List the indexed walls of the given shape and type");
  walls_cmd->add_flag("--tabloids", tabloids, "Brick tabloids of partition shape and type");

  std::string qexpr, nexpr;
  auto* pair_cmd = app.add_subcommand("pair", "Evaluate the pairing of a QSym and an NSym element");
  pair_cmd->add_option("qsym", qexpr)->required();
  pair_cmd->add_option("nsym", nexpr)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    cfg.max_degree = max_degree_from_env();
    cfg.format = csv ? Format::Csv : format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Pretty;
    if (n_opt->count()) cfg.n = n;
    if (m_opt->count()) cfg.m = m;

    if (*convert_cmd) return cmd_convert(out, cfg, space, expr, to);
    if (*matrix_cmd) return cmd_matrix(out, cfg, matrix_args);
    if (*verify_cmd) return cmd_verify(out, cfg, suite, strict);
    if (*realize_cmd) return cmd_realize(out, cfg, gen, commutative);
    if (*walls_cmd) return cmd_walls(out, cfg, shape, type, stats, indexed, tabloids);
    if (*pair_cmd) return cmd_pair(out, cfg, qexpr, nexpr);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace nsymkit::cli
