#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wsc {

struct Edge {
  std::uint32_t u = 0;
  std::uint32_t v = 0;

  bool is_loop() const { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Loop-aware multigraph. Immutable once built; edges keep insertion order so
// edge indices are stable handles for masks and deletion/contraction.
class Graph {
 public:
  Graph() = default;
  // Throws BadGraph if an endpoint is out of range or labels are inconsistent.
  Graph(std::size_t n, std::vector<Edge> edges, std::vector<std::string> labels = {});

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool has_labels() const { return !labels_.empty(); }
  // Label of vertex i, or its decimal index when unlabeled.
  std::string label(std::size_t i) const;

  bool has_loop() const;
  std::size_t component_count() const;
  bool is_connected() const { return component_count() <= 1; }
  // Cycle rank of the whole graph: e - n + k.
  std::size_t cycle_rank() const;

  // R_E(G): keeps one edge per adjacent pair (and one loop per looped vertex).
  Graph reduce_multi_edges() const;
  // G - e.
  Graph without_edge(std::size_t edge) const;
  // G / e. Parallel copies of e become loops; other multi-edges are kept.
  Graph contract_edge(std::size_t edge) const;

  // Two-coloring classes (smaller first) if the graph is bipartite.
  std::optional<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>> bipartition() const;

  // Metadata recorded by make_family; not computed for arbitrary graphs.
  std::optional<unsigned> chromatic_number() const { return chromatic_; }
  Graph with_chromatic_number(std::optional<unsigned> chi) const;

  // Order-independent description used for hashing.
  std::string canonical_string() const;
  // FNV-1a of canonical_string(), as 16 hex digits.
  std::string hash() const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  std::optional<unsigned> chromatic_ = std::nullopt;
};

// Disjoint union; vertices of b are shifted by a.num_vertices().
Graph disjoint_union(const Graph& a, const Graph& b);

enum class FamilyKind { Null, Line, Star, Complete, Circuit, C4d };

FamilyKind parse_family_kind(std::string_view name);
std::string_view to_string(FamilyKind kind);

// N_n, L_n, S_n, K_n, C_n, or the 4-vertex box with one diagonal.
// BadSize when n < 1, or n != 4 for C4d.
Graph make_family(FamilyKind kind, std::size_t n);

// Edge-list text: "n <count>" then one "u v" pair per line; '#' comments.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

// {"n": 3, "edges": [[0,1],[1,2]], "labels": ["a","b","c"]}; labels optional.
Graph parse_graph_json(std::string_view text);
std::string to_graph_json(const Graph& g);

// Reads either format, choosing by content.
Graph load_graph(const std::string& path);

}  // namespace wsc
