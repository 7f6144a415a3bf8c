#include "wsc/checks.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "wsc/error.hpp"
#include "wsc/identities.hpp"
#include "wsc/partition.hpp"
#include "wsc/poly_io.hpp"
#include "wsc/poly_ops.hpp"

namespace wsc {

namespace fs = std::filesystem;
using namespace vars;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string factor_list(const std::vector<MultiPoly>& factors) {
  std::string out;
  for (const auto& f : factors) out += (out.empty() ? "" : ", ") + to_text(f);
  return out;
}

bool vanishes(const MultiPoly& p, Var var, const MultiPoly& value) {
  return substitute(p, Substitution().bind(var, value)).is_zero();
}

void add(CheckLedger& ledger, std::string suite, std::string subject, std::string identity, bool passed,
         std::string detail = {}) {
  ledger.entries.push_back({std::move(suite), std::move(subject), std::move(identity), passed, std::move(detail)});
}

void run_dcr(CheckLedger& ledger, const FixtureSet& fixtures, const EnumerationOptions& options) {
  for (const auto& [name, g] : fixtures.graphs) {
    if (g.has_loop()) continue;
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      const auto report = dcr_deviation(g, e, DcrMode::Z, false, options);
      const auto& num = report.value.numerator();
      const std::string edge = "edge " + std::to_string(e);
      add(ledger, "dcr", name, edge + ": factor s v w (w-1)", report.factors_ok(),
          report.factors_ok() ? "" : "missing " + factor_list(report.failed_factors));
      const bool zero_limits = vanishes(num, Var::w, 1) && vanishes(num, Var::w, 0) && vanishes(num, Var::s, 0) &&
                               vanishes(num, Var::v, 0);
      add(ledger, "dcr", name, edge + ": vanishes at w=1, w=0, s=0, v=0", zero_limits);
    }
  }
}

void run_kit(CheckLedger& ledger, const FixtureSet& fixtures, const EnumerationOptions& options) {
  for (const auto& kit : fixtures.kits) {
    const auto report = kit_deviation(kit.g, kit.g1, kit.g2, kit.m, options);
    const auto& num = report.value.numerator();
    add(ledger, "kit", kit.name, "factor s (q-s) w (w-1)", report.factors_ok(),
        report.factors_ok() ? "" : "missing " + factor_list(report.failed_factors));
    const bool zero_limits =
        vanishes(num, Var::w, 1) && vanishes(num, Var::w, 0) && vanishes(num, Var::s, 0) && vanishes(num, Var::s, q());
    add(ledger, "kit", kit.name, "vanishes at w=1, w=0, s=0, s=q", zero_limits);
  }
}

void run_cycles(CheckLedger& ledger, const FixtureSet& fixtures, const EnumerationOptions& options) {
  for (const auto& [name, g] : fixtures.graphs) {
    if (g.has_loop()) continue;
    const auto report = cycle_deviation(g, options);
    const bool forest = g.cycle_rank() == 0;
    add(ledger, "cycles", name, forest ? "zero on a forest" : "nonzero with cycles", forest == report.is_zero(),
        "cycle rank " + std::to_string(g.cycle_rank()) + ", s-clearing power " +
            std::to_string(report.s_clearing_power));
  }
}

void run_bounds(CheckLedger& ledger, const FixtureSet& fixtures, const EnumerationOptions& options) {
  const std::vector<mpq_class> ws{0, mpq_class(1, 10), mpq_class(1, 2), mpq_class(9, 10), 1, 2, 3};
  for (const auto& [name, g] : fixtures.graphs) {
    const auto parts = g.bipartition();
    if (!parts || g.has_loop() || g.num_edges() == 0) continue;
    const MultiPoly p = ph(g, options);
    std::size_t applicable = 0;
    std::string first_failure;
    for (long q = 2; q <= 4; ++q)
      for (long s = 0; s <= q; ++s)
        for (const auto& w : ws) {
          const auto value = eval_exact(p, {q, s, -1, w});
          const auto report = bipartite_bounds(parts->first.size(), parts->second.size(), q, s, w, value);
          for (const auto& c : report.checks) {
            if (!c.applicable) continue;
            ++applicable;
            if (!c.holds && first_failure.empty())
              first_failure = c.name + " at q=" + std::to_string(q) + " s=" + std::to_string(s) + " w=" +
                              w.get_str() + ": Ph=" + value.get_str() + " < " + c.bound.get_str();
          }
        }
    add(ledger, "bounds", name, "bipartite lower bounds", first_failure.empty(),
        first_failure.empty() ? std::to_string(applicable) + " applicable bounds hold" : first_failure);
  }
}

// Exact binary value of a double in [0,1).
mpq_class exact(double x) {
  mpq_class r(x);
  r.canonicalize();
  return r;
}

void run_signs(CheckLedger& ledger, const FixtureSet& fixtures, const CheckOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<mpq_class> ws;
  for (std::size_t i = 0; i < options.w_samples; ++i) ws.push_back(exact(unit(rng)));
  for (const auto& [name, g] : fixtures.graphs) {
    if (g.has_loop() || g.num_vertices() == 0) continue;
    const auto alpha = alpha_decompose(ph(g, options.enumeration), g.num_vertices());
    std::string first_failure;
    std::size_t samples = 0, unimodal_breaks = 0;
    for (long s = 1; s <= 3; ++s)
      for (const auto& w : ws) {
        const auto values = alpha_values(alpha, s, w);
        ++samples;
        if (const auto j = sign_alternation_failure(values); j && first_failure.empty())
          first_failure = "j=" + std::to_string(*j) + " at s=" + std::to_string(s) + " w=" + w.get_str();
        if (!unimodality_violations(values).empty()) ++unimodal_breaks;
      }
    add(ledger, "signs", name, "sgn alpha_{n-j} = (-1)^j", first_failure.empty(),
        first_failure.empty() ? std::to_string(samples) + " samples" : first_failure);
    add(ledger, "signs", name, "unimodal |alpha| (observation)", true,
        std::to_string(unimodal_breaks) + " of " + std::to_string(samples) + " samples not unimodal");
  }
}

}  // namespace

Suite parse_suite(std::string_view name) {
  if (name == "dcr") return Suite::Dcr;
  if (name == "kit") return Suite::Kit;
  if (name == "cycles") return Suite::Cycles;
  if (name == "bounds") return Suite::Bounds;
  if (name == "signs") return Suite::Signs;
  if (name == "all") return Suite::All;
  throw Error(ErrorCode::Parse, "unknown suite '" + std::string(name) + "'");
}

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::Dcr: return "dcr";
    case Suite::Kit: return "kit";
    case Suite::Cycles: return "cycles";
    case Suite::Bounds: return "bounds";
    case Suite::Signs: return "signs";
    case Suite::All: return "all";
  }
  return "?";
}

KitFixture parse_kit_json(std::string_view text, std::string name) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, "bad decomposition JSON: " + std::string(e.what()));
  }
  for (const char* key : {"g", "g1", "g2", "m"})
    if (!j.contains(key)) throw Error(ErrorCode::Parse, std::string("decomposition is missing '") + key + "'");
  if (!j["m"].is_number_unsigned()) throw Error(ErrorCode::Parse, "'m' must be a non-negative integer");
  KitFixture kit;
  kit.name = std::move(name);
  kit.g = parse_graph_json(j["g"].dump());
  kit.g1 = parse_graph_json(j["g1"].dump());
  kit.g2 = parse_graph_json(j["g2"].dump());
  kit.m = j["m"].get<std::size_t>();
  return kit;
}

FixtureSet load_fixtures(const std::string& path) {
  FixtureSet out;
  auto load_one = [&](const fs::path& file) {
    const std::string name = file.filename().string();
    if (ends_with(name, ".kit.json"))
      out.kits.push_back(parse_kit_json(read_file(file), name));
    else
      out.graphs.push_back({name, load_graph(file.string())});
  };
  const fs::path root(path);
  if (fs::is_directory(root)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(root)) {
      const std::string ext = entry.path().extension().string();
      if (entry.is_regular_file() && (ext == ".json" || ext == ".edges")) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) load_one(f);
  } else if (fs::exists(root)) {
    load_one(root);
  } else {
    throw Error(ErrorCode::Parse, "no such file or directory: " + path);
  }
  return out;
}

bool CheckLedger::all_passed() const { return failures() == 0; }

std::size_t CheckLedger::failures() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return !e.passed; }));
}

nlohmann::json CheckLedger::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& e : entries) {
    nlohmann::json item{{"suite", e.suite}, {"subject", e.subject}, {"identity", e.identity}, {"passed", e.passed}};
    if (!e.detail.empty()) item["detail"] = e.detail;
    list.push_back(std::move(item));
  }
  return {{"passed", all_passed()}, {"total", entries.size()}, {"failed", failures()}, {"entries", std::move(list)}};
}

CheckLedger run_checks(Suite suite, const FixtureSet& fixtures, const CheckOptions& options) {
  CheckLedger ledger;
  const bool all = suite == Suite::All;
  const auto& enumeration = options.enumeration;
  if (all || suite == Suite::Dcr) run_dcr(ledger, fixtures, enumeration);
  if (all || suite == Suite::Kit) run_kit(ledger, fixtures, enumeration);
  if (all || suite == Suite::Cycles) run_cycles(ledger, fixtures, enumeration);
  if (all || suite == Suite::Bounds) run_bounds(ledger, fixtures, enumeration);
  if (all || suite == Suite::Signs) run_signs(ledger, fixtures, options);
  return ledger;
}

}  // namespace wsc
