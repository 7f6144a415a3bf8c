#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "wsc/graph.hpp"
#include "wsc/subgraphs.hpp"

namespace wsc {

enum class Suite { Dcr, Kit, Cycles, Bounds, Signs, All };

Suite parse_suite(std::string_view name);
std::string_view to_string(Suite suite);

struct NamedGraph {
  std::string name;
  Graph graph;
};

// G = G1 u G2 glued along a K_m, vertices matched by label.
struct KitFixture {
  std::string name;
  Graph g, g1, g2;
  std::size_t m = 0;
};

struct FixtureSet {
  std::vector<NamedGraph> graphs;
  std::vector<KitFixture> kits;
};

// {"g": <graph json>, "g1": ..., "g2": ..., "m": 2}
KitFixture parse_kit_json(std::string_view text, std::string name);

// A directory is scanned in name order: *.kit.json are decompositions, other
// *.json and *.edges files are graphs. A single file is loaded as either.
FixtureSet load_fixtures(const std::string& path);

struct CheckEntry {
  std::string suite;
  std::string subject;
  std::string identity;
  bool passed = false;
  std::string detail;
};

struct CheckLedger {
  std::vector<CheckEntry> entries;

  bool all_passed() const;
  std::size_t failures() const;
  nlohmann::json to_json() const;
};

struct CheckOptions {
  EnumerationOptions enumeration;
  // Drives the w samples of the signs suite.
  std::uint64_t seed = 1;
  std::size_t w_samples = 20;
};

// signs: sgn alpha_{n-j}(s,w) = (-1)^j for integer 1 <= s <= 3 and sampled
// w in [0,1); unimodality of |alpha| is recorded in the detail, never failed.
CheckLedger run_checks(Suite suite, const FixtureSet& fixtures, const CheckOptions& options = {});

}  // namespace wsc
