#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "degex/degree.hpp"
#include "degex/error.hpp"
#include "degex/extraction.hpp"
#include "degex/generators.hpp"
#include "degex/hypergraph.hpp"
#include "degex/quasirandomness.hpp"
#include "degex/report_json.hpp"

namespace degex::cli {

namespace {

struct Globals {
  std::string in;
  std::string out;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::string format = "json";
};

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw ValidationError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

Hypergraph load_input(const Globals& g) {
  if (g.in.empty()) throw ValidationError("--in is required");
  if (g.in == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return parse_hg(buf.str());
  }
  return read_hg_file(g.in);
}

void emit_json(const Globals& g, std::ostream& fallback, const Json& j) {
  Output out(g.out, fallback);
  out.stream() << j.dump(2) << '\n';
}

std::uint64_t enumeration_limit(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("DEGEX_EXACT_LIMIT"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string_view(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw ValidationError(std::string("DEGEX_EXACT_LIMIT is not a nonnegative integer: '") + env + "'");
  }
  return kDefaultEnumerationLimit;
}

VertexList parse_vertex_list(const std::string& text) {
  VertexList out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    token.erase(std::remove(token.begin(), token.end(), ' '), token.end());
    if (token.empty()) continue;
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      out.push_back(static_cast<Vertex>(v));
    } catch (const std::exception&) {
      throw ValidationError("bad vertex '" + token + "' in list '" + text + "'");
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --- gen ------------------------------------------------------------------

struct GenArgs {
  std::string kind;
  std::uint32_t n = 0;
  std::uint32_t r = 3;
  std::string p;
  std::uint32_t parts = 0;
  std::string sidecar;
};

int cmd_gen(const Globals& g, const GenArgs& a, std::ostream& out) {
  if (a.kind != "partition-del" && a.n == 0) throw ValidationError("gen " + a.kind + " needs --n");
  if (a.kind == "er") {
    if (a.p.empty()) throw ValidationError("gen er needs --p");
    const Rational p = parse_rational(a.p);
    const Hypergraph h = erdos_renyi(a.n, a.r, p, g.seed);
    Output o(g.out, out);
    o.stream() << "# degex gen er n=" << a.n << " r=" << a.r << " p=" << to_string(p) << " seed=" << g.seed
               << '\n'
               << serialize_hg(h);
    return kOk;
  }
  if (a.kind == "complete") {
    Output o(g.out, out);
    o.stream() << serialize_hg(Hypergraph::complete(a.n, a.r));
    return kOk;
  }
  // partition-del
  if (a.parts == 0) throw ValidationError("gen partition-del needs --N");
  const Hypergraph input = load_input(g);
  const PartitionDeletion result = partition_deletion(input, a.parts);
  {
    Output o(g.out, out);
    o.stream() << serialize_hg(result.graph);
  }
  std::string sidecar = a.sidecar;
  if (sidecar.empty() && !g.out.empty() && g.out != "-") sidecar = g.out + ".json";
  if (!sidecar.empty()) {
    std::ofstream s(sidecar, std::ios::binary | std::ios::trunc);
    if (!s) throw ValidationError("cannot write " + sidecar);
    s << to_json(result).dump(2) << '\n';
  }
  return kOk;
}

// --- stats ----------------------------------------------------------------

struct StatsArgs {
  std::uint32_t ell = 0;
  std::string eps;
  std::string p;
};

int cmd_stats(const Globals& g, const StatsArgs& a, std::ostream& out) {
  const Hypergraph h = load_input(g);
  const DegreeTable table = degree_table(h, a.ell, g.threads);
  if (g.format == "csv") {
    Output o(g.out, out);
    write_degree_csv(o.stream(), table);
    return kOk;
  }

  Json j;
  j["n"] = h.n();
  j["r"] = h.r();
  j["ell"] = a.ell;
  j["edges"] = h.edge_count();
  j["subsets"] = table.degrees.size();
  j["max_possible_degree"] = table.max_possible();
  j["min_degree"] = table.degrees.empty() ? Json(nullptr) : Json(min_degree(table));
  if (!a.eps.empty()) {
    const Rational eps = parse_rational(a.eps);
    const EpsMinDegree e = eps_min_degree(table, eps);
    Json je;
    je["eps"] = to_json(eps);
    je["exceptions_allowed"] = e.exceptions_allowed;
    je["value"] = e.value;
    je["capped"] = e.capped;
    j["eps_min_degree"] = std::move(je);
  }
  if (!a.p.empty()) {
    const PoorSetReport poor = poor_sets(table, parse_rational(a.p));
    Json jp;
    jp["p"] = to_json(poor.p);
    jp["count"] = poor.poor.size();
    jp["fraction"] = to_json(poor.fraction);
    jp["fraction_approx"] = poor.fraction_approx();
    j["poor"] = std::move(jp);
  }
  std::map<std::uint64_t, std::uint64_t> histogram;
  for (std::uint64_t d : table.degrees) ++histogram[d];
  Json hist = Json::array();
  for (auto [degree, count] : histogram) hist.push_back(Json{{"degree", degree}, {"count", count}});
  j["histogram"] = std::move(hist);
  emit_json(g, out, j);
  return kOk;
}

// --- extract / params -----------------------------------------------------

struct ExtractArgs {
  std::uint32_t ell = 0;
  std::uint32_t m = 0;
  std::string p;
  std::string delta;
  std::string mode = "random";
  std::uint64_t budget = 1000;
  std::optional<std::uint64_t> limit;
  bool subsets = false;
};

int cmd_extract(const Globals& g, const ExtractArgs& a, std::ostream& out) {
  const Hypergraph h = load_input(g);
  const Rational p = parse_rational(a.p);
  const Rational delta = parse_rational(a.delta);
  Json j;
  if (a.mode == "random") {
    j = to_json(extract_random(h, a.ell, a.m, p, delta, a.budget, g.seed, g.threads));
  } else {
    const ExhaustiveResult result =
        extract_exhaustive(h, a.ell, a.m, p, delta, {enumeration_limit(a.limit), g.threads});
    j = to_json(result, h.n(), a.m, a.subsets);
  }
  emit_json(g, out, j);
  return kOk;
}

struct ParamsArgs {
  std::uint32_t r = 3;
  std::uint32_t ell = 2;
  std::string delta;
  std::uint32_t m = 0;
};

int cmd_params(const Globals& g, const ParamsArgs& a, std::ostream& out) {
  emit_json(g, out, to_json(theorem_params(a.r, a.ell, parse_rational(a.delta), a.m)));
  return kOk;
}

// --- audit ----------------------------------------------------------------

struct AuditArgs {
  std::string which;
  std::uint32_t ell = 0;
  std::uint32_t m = 0;
  std::string p;
  std::string delta = "0";
  std::string subset;
  std::optional<std::uint64_t> limit;
};

int cmd_audit(const Globals& g, const AuditArgs& a, std::ostream& out) {
  const Hypergraph h = load_input(g);
  const Rational p = parse_rational(a.p);
  const Rational delta = parse_rational(a.delta);
  const EnumerationOptions options{enumeration_limit(a.limit), g.threads};
  AuditReport report;
  if (a.which == "eq3") {
    report = audit_eq3(h, a.ell, a.m, p, options);
  } else if (a.which == "eq2") {
    if (a.subset.empty()) throw ValidationError("audit eq2 needs --S");
    report = audit_eq2_phi(h, parse_vertex_list(a.subset), a.m, p, delta, options);
  } else {
    report = audit_bad_total(h, a.ell, a.m, p, delta, options);
  }
  emit_json(g, out, to_json(report));
  return kOk;
}

// --- qr -------------------------------------------------------------------

struct QrArgs {
  std::string kind = "12";
  std::string p;
  std::string mode = "exact";
  std::uint32_t exact_limit = 0;
  std::uint64_t trials = 10000;
  bool implication = false;
};

int cmd_qr(const Globals& g, const QrArgs& a, std::ostream& out) {
  const Hypergraph h = load_input(g);
  const Rational p = parse_rational(a.p);
  const QrOptions options{g.threads, a.exact_limit};
  Json j;
  if (a.implication) {
    if (a.kind != "12") throw ValidationError("--check-implication applies to --kind 12");
    j = to_json(check_qr_codegree_implication(h, p, options));
  } else if (a.kind == "12") {
    j = to_json(a.mode == "exact" ? deviation_12_exact(h, p, options)
                                  : deviation_12_sampled(h, p, a.trials, g.seed, g.threads));
    if (a.mode == "sampled") j["seed"] = g.seed;
  } else {
    if (a.mode != "exact") throw ValidationError("--kind 111 supports only --mode exact");
    j = to_json(deviation_111_exact(h, p, options));
  }
  emit_json(g, out, j);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"degex: minimum l-degree statistics, extraction, audits and quasirandomness for r-graphs", "degex"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "degex 0.1.0");

  Globals globals;
  app.add_option("--in", globals.in, "Input .hg file ('-' for stdin)");
  app.add_option("--out", globals.out, "Output path (default stdout)");
  app.add_option("--seed", globals.seed, "64-bit seed for randomized commands");
  app.add_option("--threads", globals.threads, "Worker cap; results do not depend on it")
      ->check(CLI::Range(1u, 1024u));
  app.add_option("--format", globals.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an r-graph in .hg format");
  gen_cmd->fallthrough();
  gen_cmd->add_option("kind", gen.kind, "er | complete | partition-del")
      ->required()
      ->check(CLI::IsMember({"er", "complete", "partition-del"}));
  gen_cmd->add_option("--n", gen.n, "Vertex count");
  gen_cmd->add_option("--r", gen.r, "Uniformity");
  gen_cmd->add_option("--p", gen.p, "Edge probability NUM/DEN (er)");
  gen_cmd->add_option("--N", gen.parts, "Part count (partition-del)");
  gen_cmd->add_option("--sidecar", gen.sidecar, "PartitionSpec JSON path (default <out>.json)");

  StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "Degree statistics of the ell-subsets");
  stats_cmd->fallthrough();
  stats_cmd->add_option("--ell", stats.ell, "Subset size")->required();
  stats_cmd->add_option("--eps", stats.eps, "Exception fraction for delta_ell^eps");
  stats_cmd->add_option("--p", stats.p, "Poor-set density threshold NUM/DEN");

  ExtractArgs extract;
  auto* extract_cmd = app.add_subcommand("extract", "Find an induced m-subgraph with high minimum ell-degree");
  extract_cmd->fallthrough();
  extract_cmd->add_option("--ell", extract.ell)->required();
  extract_cmd->add_option("--m", extract.m)->required();
  extract_cmd->add_option("--p", extract.p)->required();
  extract_cmd->add_option("--delta", extract.delta)->required();
  extract_cmd->add_option("--mode", extract.mode)->check(CLI::IsMember({"random", "exhaustive"}));
  extract_cmd->add_option("--budget", extract.budget, "Sampling attempts (random mode)");
  extract_cmd->add_option("--limit", extract.limit, "Enumeration limit (exhaustive mode)");
  extract_cmd->add_flag("--subsets", extract.subsets, "Also list good subsets as vertex lists");

  ParamsArgs params;
  auto* params_cmd = app.add_subcommand("params", "Theorem constants m0, eps and the delta validity flag");
  params_cmd->fallthrough();
  params_cmd->add_option("--r", params.r)->required();
  params_cmd->add_option("--ell", params.ell)->required();
  params_cmd->add_option("--delta", params.delta)->required();
  params_cmd->add_option("--m", params.m)->required();

  AuditArgs audit;
  auto* audit_cmd = app.add_subcommand("audit", "Exact audit of a counting inequality");
  audit_cmd->fallthrough();
  audit_cmd->add_option("--which", audit.which)->required()->check(CLI::IsMember({"eq3", "eq2", "bad-total"}));
  audit_cmd->add_option("--ell", audit.ell);
  audit_cmd->add_option("--m", audit.m)->required();
  audit_cmd->add_option("--p", audit.p)->required();
  audit_cmd->add_option("--delta", audit.delta);
  audit_cmd->add_option("--S", audit.subset, "Comma-separated ell-subset (eq2)");
  audit_cmd->add_option("--limit", audit.limit, "Enumeration limit");

  QrArgs qr;
  auto* qr_cmd = app.add_subcommand("qr", "Quasirandomness discrepancy of a 3-graph");
  qr_cmd->fallthrough();
  qr_cmd->add_option("--kind", qr.kind)->check(CLI::IsMember({"12", "111"}));
  qr_cmd->add_option("--p", qr.p)->required();
  qr_cmd->add_option("--mode", qr.mode)->check(CLI::IsMember({"exact", "sampled"}));
  qr_cmd->add_option("--exact-limit", qr.exact_limit, "Largest n for exact mode");
  qr_cmd->add_option("--trials", qr.trials, "Random X samples (sampled mode)");
  qr_cmd->add_flag("--check-implication", qr.implication, "Verify the discrepancy => codegree implication");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o;
    std::ostringstream e_out;
    const int code = app.exit(e, o, e_out);
    out << o.str();
    err << e_out.str();
    return code == 0 ? kOk : kValidationError;
  }

  try {
    if (gen_cmd->parsed()) return cmd_gen(globals, gen, out);
    if (stats_cmd->parsed()) return cmd_stats(globals, stats, out);
    if (extract_cmd->parsed()) return cmd_extract(globals, extract, out);
    if (params_cmd->parsed()) return cmd_params(globals, params, out);
    if (audit_cmd->parsed()) {
      if (audit.which != "eq2" && audit.ell == 0) throw ValidationError("--ell is required");
      return cmd_audit(globals, audit, out);
    }
    if (qr_cmd->parsed()) return cmd_qr(globals, qr, out);
  } catch (const LimitExceeded& e) {
    err << "degex: " << e.what() << '\n';
    return kLimitRefusal;
  } catch (const ValidationError& e) {
    err << "degex: " << e.what() << '\n';
    return kValidationError;
  } catch (const OverflowError& e) {
    err << "degex: " << e.what() << '\n';
    return kValidationError;
  } catch (const std::exception& e) {
    err << "degex: internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kInternalError;
}

}  // namespace degex::cli
