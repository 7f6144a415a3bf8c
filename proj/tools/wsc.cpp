#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "wsc/asymptotics.hpp"
#include "wsc/checks.hpp"
#include "wsc/error.hpp"
#include "wsc/families.hpp"
#include "wsc/graph.hpp"
#include "wsc/partition.hpp"
#include "wsc/poly_io.hpp"
#include "wsc/poly_ops.hpp"
#include "wsc/strips.hpp"
#include "wsc/zeros.hpp"

using namespace wsc;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kIdentityFailed = 1;
constexpr int kUsage = 2;
constexpr int kRuntime = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format = "json";
  unsigned workers = 0;
  unsigned edge_cap = kDefaultEdgeCap;
  std::uint64_t coloring_cap = kDefaultColoringCap;
  std::uint64_t seed = 1;
  bool timing = false;
  std::string out;
};

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw UsageError("--out: cannot write " + c.out);
  f << text << '\n';
}

void emit(const Common& c, const json& j) { emit(c, j.dump(2)); }

json wall(const Common& c, const Stopwatch& clock) { return c.timing ? json(clock.ms()) : json(nullptr); }

std::string render(const Common& c, const MultiPoly& p) { return c.format == "latex" ? to_latex(p) : to_text(p); }

EnumerationOptions enumeration(const Common& c) { return {c.edge_cap, c.workers}; }

Graph read_graph(const std::string& path) {
  try {
    return load_graph(path);
  } catch (const Error& e) {
    throw UsageError("--graph: " + std::string(e.what()));
  }
}

MultiPoly poly_for(const Graph& g, const std::string& mode, const Common& c) {
  if (mode == "ph") return ph(g, enumeration(c));
  return z_subgraph_sum(g, enumeration(c));
}

json envelope(const Graph& g, const std::string& mode, json poly, const Common& c, const Stopwatch& clock) {
  json j;
  j["graph_hash"] = g.hash();
  j["mode"] = mode;
  j["poly"] = std::move(poly);
  j["wall_ms"] = wall(c, clock);
  return j;
}

json coefficient_list(const MultiPoly& p) {
  std::vector<std::string> coeffs(p.degree(index(Var::s)) + 1, "0");
  for (const auto& [e, c] : p.sorted_terms()) coeffs[e[index(Var::s)]] = c.get_str();
  return coeffs;
}

double tidy(double x) { return x == 0 ? 0.0 : x; }

json root_list(const ZeroSlice& slice) {
  json list = json::array();
  for (std::size_t i = 0; i < slice.roots.size(); ++i)
    list.push_back({{"re", tidy(slice.roots[i].real())}, {"im", tidy(slice.roots[i].imag())},
                   {"residual", slice.residuals[i]}});
  return list;
}

json complex_json(Complex z) { return {{"re", tidy(z.real())}, {"im", tidy(z.imag())}}; }

int run_compute(const Common& c, const std::string& graph_path, const std::string& mode) {
  const Graph g = read_graph(graph_path);
  const Stopwatch clock;
  if (mode == "tutte") {
    const auto t = tutte(g, enumeration(c));
    if (c.format == "json")
      emit(c, envelope(g, mode, to_json(t), c, clock));
    else
      emit(c, c.format == "latex" ? to_latex(t) : to_text(t));
    return kOk;
  }
  const MultiPoly p = poly_for(g, mode, c);
  if (c.format == "json")
    emit(c, envelope(g, mode, to_json(p), c, clock));
  else
    emit(c, render(c, p));
  return kOk;
}

int run_family(const Common& c, const std::string& kind_name, std::size_t n, const std::string& mode) {
  FamilyKind kind;
  try {
    kind = parse_family_kind(kind_name);
  } catch (const Error& e) {
    throw UsageError("--kind: " + std::string(e.what()));
  }
  const Stopwatch clock;
  Graph g;
  MultiPoly p;
  try {
    g = make_family(kind, n);
    p = mode == "ph" ? family_ph(kind, n) : family_z(kind, n);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::BadSize) throw UsageError("--n: " + std::string(e.what()));
    throw;
  }
  if (c.format == "json")
    emit(c, envelope(g, mode, to_json(p), c, clock));
  else
    emit(c, render(c, p));
  return kOk;
}

int run_check(const Common& c, const std::string& suite_name, const std::string& graphs) {
  Suite suite;
  FixtureSet fixtures;
  try {
    suite = parse_suite(suite_name);
  } catch (const Error& e) {
    throw UsageError("--suite: " + std::string(e.what()));
  }
  try {
    fixtures = load_fixtures(graphs);
  } catch (const Error& e) {
    throw UsageError("--graphs: " + std::string(e.what()));
  }
  CheckOptions options;
  options.enumeration = enumeration(c);
  options.seed = c.seed;
  const auto ledger = run_checks(suite, fixtures, options);
  if (c.format == "json") {
    emit(c, json(ledger.to_json()));
  } else {
    std::ostringstream os;
    for (const auto& e : ledger.entries) {
      os << (e.passed ? "pass " : "FAIL ") << e.suite << ' ' << e.subject << ": " << e.identity;
      if (!e.detail.empty()) os << " (" << e.detail << ')';
      os << '\n';
    }
    os << ledger.entries.size() - ledger.failures() << '/' << ledger.entries.size() << " passed";
    emit(c, os.str());
  }
  return ledger.all_passed() ? kOk : kIdentityFailed;
}

int run_strips(const Common& c, std::size_t ly_max, const std::string& emit_path, const std::string& form_name) {
  const auto form = form_name == "quoted" ? StripRecurrence::Quoted : StripRecurrence::Corrected;
  const auto tables = build_counts(ly_max, form);
  json rows = json::array();
  json checks = json::array();
  json reference = json::array();
  bool ok = true;
  for (std::size_t ly = 1; ly <= ly_max; ++ly) {
    const auto& t = tables[ly];
    json row;
    row["ly"] = ly;
    row["zh"] = json::array();
    row["ph"] = json::array();
    for (const auto& p : t.zh) row["zh"].push_back(coefficient_list(p));
    for (const auto& p : t.ph) row["ph"].push_back(coefficient_list(p));
    row["total_zh"] = coefficient_list(t.total_zh);
    row["total_ph"] = coefficient_list(t.total_ph);
    rows.push_back(std::move(row));

    auto results = verify_sum_identities(tables, ly);
    const auto more = verify_relation_and_totals(tables, ly);
    results.insert(results.end(), more.begin(), more.end());
    for (const auto& r : results) {
      json item{{"ly", ly}, {"name", r.name}, {"holds", r.holds}};
      if (!r.holds) item["residual"] = to_text(r.residual);
      // Reference totals are compared but not counted as identities.
      if (r.name.find("tabulated") != std::string::npos) {
        reference.push_back(std::move(item));
        continue;
      }
      ok = ok && r.holds;
      checks.push_back(std::move(item));
    }
  }
  json doc;
  doc["ly_max"] = ly_max;
  doc["recurrence"] = form_name;
  doc["tables"] = std::move(rows);
  if (!emit_path.empty()) {
    std::ofstream f(emit_path);
    if (!f) throw UsageError("--emit: cannot write " + emit_path);
    f << doc.dump(2) << '\n';
  }
  json summary;
  summary["passed"] = ok;
  summary["checks"] = std::move(checks);
  summary["reference_totals"] = std::move(reference);
  if (emit_path.empty()) summary["tables"] = doc["tables"];
  if (c.format == "json") {
    emit(c, summary);
  } else {
    std::ostringstream os;
    for (const auto& item : summary["checks"])
      os << (item["holds"].get<bool>() ? "pass " : "FAIL ") << "L_y=" << item["ly"] << ' '
         << item["name"].get<std::string>() << '\n';
    for (const auto& item : summary["reference_totals"])
      os << (item["holds"].get<bool>() ? "match " : "differs ") << "L_y=" << item["ly"] << ' '
         << item["name"].get<std::string>() << '\n';
    emit(c, os.str());
  }
  return ok ? kOk : kIdentityFailed;
}

int run_zeros(const Common& c, const std::string& graph_path, const std::string& family, std::size_t n,
              const std::string& mode, const std::string& var_name, const std::string& fix) {
  MultiPoly p;
  if (!graph_path.empty()) {
    p = poly_for(read_graph(graph_path), mode, c);
  } else if (!family.empty()) {
    try {
      const auto kind = parse_family_kind(family);
      p = mode == "ph" ? family_ph(kind, n) : family_z(kind, n);
    } catch (const Error& e) {
      throw UsageError("--family: " + std::string(e.what()));
    }
  } else {
    throw UsageError("--graph or --family is required");
  }
  const auto var = parse_var(var_name);
  if (!var) throw UsageError("--var: unknown variable '" + var_name + "'");
  Bindings fixed;
  try {
    fixed = parse_bindings(fix);
  } catch (const Error& e) {
    throw UsageError("--fix: " + std::string(e.what()));
  }
  if (mode == "ph") fixed[Var::v] = -1;
  if (*var == Var::v && mode == "ph") throw UsageError("--var: v is fixed to -1 in ph mode");
  ZeroSlice slice;
  try {
    slice = zeros(p, *var, fixed);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::PreconditionUnmet) throw UsageError("--fix: " + std::string(e.what()));
    throw;
  }
  if (slice.roots_at_infinity() > 0)
    std::cerr << slice.roots_at_infinity() << " root(s) at infinity: the degree drops at this slice\n";
  if (c.format == "json") {
    emit(c, root_list(slice));
  } else {
    std::ostringstream os;
    os.precision(15);
    for (std::size_t i = 0; i < slice.roots.size(); ++i)
      os << slice.roots[i].real() << (slice.roots[i].imag() < 0 ? " - " : " + ") << std::abs(slice.roots[i].imag())
         << "i  residual " << slice.residuals[i] << '\n';
    emit(c, os.str());
  }
  return kOk;
}

int run_phi(const Common& c, double q, double s, double w) {
  PhiReport r;
  try {
    r = phi_circuit(q, s, w);
  } catch (const Error& e) {
    throw UsageError("--w: " + std::string(e.what()));
  }
  if (c.format != "json") {
    std::ostringstream os;
    os.precision(15);
    os << "Phi = " << r.phi << " (" << r.candidates[r.dominant].name << ", region " << to_string(r.region) << ")";
    emit(c, os.str());
    return kOk;
  }
  json j;
  j["q"] = q;
  j["s"] = s;
  j["w"] = w;
  j["phi"] = r.phi;
  j["region"] = std::string(to_string(r.region));
  j["dominant"] = r.candidates[r.dominant].name;
  j["candidates"] = json::array();
  for (const auto& cand : r.candidates)
    j["candidates"].push_back(
        {{"name", cand.name}, {"value", complex_json(cand.value)}, {"modulus", cand.modulus}, {"present", cand.present}});
  j["entropy_bound_large_w"] = r.entropy_bound_large_w ? json(*r.entropy_bound_large_w) : json(nullptr);
  j["entropy_bound_small_w"] = r.entropy_bound_small_w ? json(*r.entropy_bound_small_w) : json(nullptr);
  emit(c, j);
  return kOk;
}

int run_qc(const Common& c, long s, double w) {
  QcReport r;
  try {
    r = qc_circuit(s, w);
  } catch (const Error& e) {
    throw UsageError("--w: " + std::string(e.what()));
  }
  if (c.format != "json") {
    std::ostringstream os;
    os.precision(15);
    os << "q_c = " << r.qc << " (" << to_string(r.kind) << "), scan " << r.scan_qc;
    if (!r.note.empty()) os << "; " << r.note;
    emit(c, os.str());
    return kOk;
  }
  json j;
  j["s"] = s;
  j["w"] = w;
  j["qc"] = r.qc;
  j["kind"] = std::string(to_string(r.kind));
  j["scan_qc"] = r.scan_qc;
  j["arc_endpoints"] = r.arc_endpoints
                           ? json::array({complex_json(r.arc_endpoints->first), complex_json(r.arc_endpoints->second)})
                           : json(nullptr);
  j["note"] = r.note;
  emit(c, j);
  return kOk;
}

int run_oracle(const Common& c, const std::string& graph_path, long q, long s, const std::string& mode) {
  const Graph g = read_graph(graph_path);
  const Stopwatch clock;
  const OracleOptions oracle_options{c.coloring_cap, c.workers};
  MultiPoly brute;
  try {
    brute = mode == "ph" ? oracle_ph(g, q, s, oracle_options) : oracle_z(g, q, s, oracle_options);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::PreconditionUnmet) throw UsageError("--q/--s: " + std::string(e.what()));
    throw;
  }
  const MultiPoly engine = substitute(poly_for(g, mode, c), Substitution().bind(Var::q, q).bind(Var::s, s));
  const bool match = brute == engine;
  if (c.format == "json") {
    json j;
    j["graph_hash"] = g.hash();
    j["mode"] = mode;
    j["q"] = q;
    j["s"] = s;
    j["oracle"] = to_json(brute);
    j["engine"] = to_json(engine);
    j["match"] = match;
    j["wall_ms"] = wall(c, clock);
    emit(c, j);
  } else {
    emit(c, "oracle: " + render(c, brute) + "\nengine: " + render(c, engine) + "\n" + (match ? "match" : "MISMATCH"));
  }
  return match ? kOk : kIdentityFailed;
}

unsigned default_edge_cap() {
  const char* env = std::getenv("WSC_EDGE_CAP");
  if (!env) return kDefaultEdgeCap;
  char* end = nullptr;
  const unsigned long cap = std::strtoul(env, &end, 10);
  if (*env == '\0' || *end != '\0' || cap == 0 || cap > 63) {
    std::cerr << "ignoring WSC_EDGE_CAP='" << env << "'\n";
    return kDefaultEdgeCap;
  }
  return static_cast<unsigned>(cap);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted-set chromatic polynomials and the field-weighted Potts partition function"};
  app.require_subcommand(1);
  Common c;
  c.edge_cap = default_edge_cap();
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "latex", "text"}));
  app.add_option("--workers", c.workers, "Worker threads (0 = available parallelism)");
  app.add_option("--edge-cap", c.edge_cap, "Largest edge count for the subgraph sum (default $WSC_EDGE_CAP or 30)")
      ->check(CLI::Range(1, 63));
  app.add_option("--coloring-cap", c.coloring_cap, "Largest q^n enumerated by the oracle");
  app.add_option("--seed", c.seed, "Seed for sampled checks");
  app.add_flag("--timing", c.timing, "Report wall_ms");
  app.add_option("--out", c.out, "Write output to a file");

  std::string graph, mode = "z", kind, suite = "all", graphs, emit_path, form = "corrected", var = "q", fix, family;
  std::size_t n = 0, ly_max = 6;
  long qi = 0, si = 0;
  double qd = 0, sd = 0, wd = 0;
  const auto modes = CLI::IsMember({"z", "ph"});

  auto* compute = app.add_subcommand("compute", "Z, Ph or the Tutte polynomial of a graph");
  compute->add_option("--graph", graph, "Edge-list or JSON graph")->required();
  compute->add_option("--mode", mode)->check(CLI::IsMember({"z", "ph", "tutte"}));

  auto* fam = app.add_subcommand("family", "Closed form for a graph family");
  fam->add_option("--kind", kind, "null, line, star, complete, circuit or c4d")->required();
  fam->add_option("--n", n)->required();
  fam->add_option("--mode", mode)->check(modes);

  auto* check = app.add_subcommand("check", "Identity ledger over fixture graphs");
  check->add_option("--suite", suite, "dcr, kit, cycles, bounds, signs or all")
      ->check(CLI::IsMember({"dcr", "kit", "cycles", "bounds", "signs", "all"}));
  check->add_option("--graphs", graphs, "Fixture file or directory")->required();

  auto* strips = app.add_subcommand("strips", "Strip coefficient multiplicities");
  strips->add_option("--ly-max", ly_max)->check(CLI::Range(1, 40));
  strips->add_option("--emit", emit_path, "Write the tables as JSON");
  strips->add_option("--recurrence", form)->check(CLI::IsMember({"corrected", "quoted"}));

  auto* zeros_cmd = app.add_subcommand("zeros", "Zeros in one variable with the others fixed");
  auto* graph_opt = zeros_cmd->add_option("--graph", graph);
  zeros_cmd->add_option("--family", family)->excludes(graph_opt);
  zeros_cmd->add_option("--n", n);
  zeros_cmd->add_option("--mode", mode)->check(modes);
  zeros_cmd->add_option("--var", var, "q, s, v or w");
  zeros_cmd->add_option("--fix", fix, "Bindings such as s=1,w=0.5");

  auto* phi = app.add_subcommand("phi", "Reduced free energy of the infinite circuit");
  phi->add_option("--q", qd)->required();
  phi->add_option("--s", sd)->required();
  phi->add_option("--w", wd)->required();

  auto* qc = app.add_subcommand("qc", "Point where the phase boundary crosses the real q axis");
  qc->add_option("--s", si)->required()->check(CLI::NonNegativeNumber);
  qc->add_option("--w", wd)->required();

  auto* oracle = app.add_subcommand("oracle", "Brute-force coloring sum against the engine");
  oracle->add_option("--graph", graph)->required();
  oracle->add_option("--q", qi)->required();
  oracle->add_option("--s", si)->required();
  oracle->add_option("--mode", mode)->check(modes);
  // The oracle compares Ph by default.
  oracle->preparse_callback([&](std::size_t) { mode = "ph"; });

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*compute) return run_compute(c, graph, mode);
    if (*fam) return run_family(c, kind, n, mode);
    if (*check) return run_check(c, suite, graphs);
    if (*strips) return run_strips(c, ly_max, emit_path, form);
    if (*zeros_cmd) return run_zeros(c, graph, family, n, mode, var, fix);
    if (*phi) return run_phi(c, qd, sd, wd);
    if (*qc) return run_qc(c, si, wd);
    if (*oracle) return run_oracle(c, graph, qi, si, mode);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return e.code() == ErrorCode::IdentityFailed ? kIdentityFailed : kRuntime;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntime;
  }
  return kUsage;
}
