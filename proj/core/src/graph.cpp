#include "wsc/graph.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "wsc/error.hpp"

namespace wsc {

Graph::Graph(std::size_t n, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
  for (const auto& e : edges_) {
    if (e.u >= n_ || e.v >= n_) {
      throw Error(ErrorCode::BadGraph,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") outside [0," + std::to_string(n_) + ")");
    }
  }
  if (!labels_.empty()) {
    if (labels_.size() != n_) throw Error(ErrorCode::BadGraph, "label count differs from vertex count");
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) throw Error(ErrorCode::BadGraph, "duplicate vertex labels");
  }
}

std::string Graph::label(std::size_t i) const { return labels_.empty() ? std::to_string(i) : labels_[i]; }

bool Graph::has_loop() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

std::size_t Graph::component_count() const {
  std::vector<std::uint32_t> parent(n_);
  std::iota(parent.begin(), parent.end(), 0U);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t k = n_;
  for (const auto& e : edges_) {
    const auto a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --k;
    }
  }
  return k;
}

std::size_t Graph::cycle_rank() const { return edges_.size() + component_count() - n_; }

Graph Graph::reduce_multi_edges() const {
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  std::vector<Edge> kept;
  for (const auto& e : edges_) {
    const auto key = std::minmax(e.u, e.v);
    if (seen.insert(key).second) kept.push_back(e);
  }
  Graph out(n_, std::move(kept), labels_);
  out.chromatic_ = chromatic_;
  return out;
}

Graph Graph::without_edge(std::size_t edge) const {
  if (edge >= edges_.size()) throw Error(ErrorCode::BadGraph, "edge index " + std::to_string(edge) + " out of range");
  std::vector<Edge> kept = edges_;
  kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(edge));
  return Graph(n_, std::move(kept), labels_);
}

Graph Graph::contract_edge(std::size_t edge) const {
  if (edge >= edges_.size()) throw Error(ErrorCode::BadGraph, "edge index " + std::to_string(edge) + " out of range");
  const Edge c = edges_[edge];
  if (c.is_loop()) return without_edge(edge);
  // Merge c.v into c.u, then close the gap left by c.v.
  const std::uint32_t keep = std::min(c.u, c.v), drop = std::max(c.u, c.v);
  auto relabel = [&](std::uint32_t x) {
    if (x == drop) x = keep;
    return x > drop ? x - 1 : x;
  };
  std::vector<Edge> out;
  out.reserve(edges_.size() - 1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i == edge) continue;
    out.push_back({relabel(edges_[i].u), relabel(edges_[i].v)});
  }
  std::vector<std::string> labels;
  if (!labels_.empty()) {
    labels = labels_;
    labels[keep] = labels_[keep] + "+" + labels_[drop];
    labels.erase(labels.begin() + drop);
  }
  return Graph(n_ - 1, std::move(out), std::move(labels));
}

std::optional<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>> Graph::bipartition() const {
  std::vector<std::vector<std::uint32_t>> adj(n_);
  for (const auto& e : edges_) {
    if (e.is_loop()) return std::nullopt;
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> side(n_, -1);
  for (std::uint32_t start = 0; start < n_; ++start) {
    if (side[start] >= 0) continue;
    side[start] = 0;
    std::vector<std::uint32_t> stack{start};
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      for (auto y : adj[x]) {
        if (side[y] < 0) {
          side[y] = 1 - side[x];
          stack.push_back(y);
        } else if (side[y] == side[x]) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<std::uint32_t> a, b;
  for (std::uint32_t i = 0; i < n_; ++i) (side[i] == 0 ? a : b).push_back(i);
  if (a.size() > b.size()) std::swap(a, b);
  return std::make_pair(std::move(a), std::move(b));
}

Graph Graph::with_chromatic_number(std::optional<unsigned> chi) const {
  Graph out = *this;
  out.chromatic_ = chi;
  return out;
}

std::string Graph::canonical_string() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> es;
  es.reserve(edges_.size());
  for (const auto& e : edges_) es.push_back(std::minmax(e.u, e.v));
  std::sort(es.begin(), es.end());
  std::string out = "n=" + std::to_string(n_);
  for (const auto& [a, b] : es) out += ";" + std::to_string(a) + "-" + std::to_string(b);
  return out;
}

std::string Graph::hash() const {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : canonical_string()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const auto shift = static_cast<std::uint32_t>(a.num_vertices());
  for (const auto& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph(a.num_vertices() + b.num_vertices(), std::move(edges));
}

FamilyKind parse_family_kind(std::string_view name) {
  if (name == "null") return FamilyKind::Null;
  if (name == "line") return FamilyKind::Line;
  if (name == "star") return FamilyKind::Star;
  if (name == "complete") return FamilyKind::Complete;
  if (name == "circuit") return FamilyKind::Circuit;
  if (name == "c4d") return FamilyKind::C4d;
  throw Error(ErrorCode::Parse, "unknown family '" + std::string(name) + "'");
}

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Null: return "null";
    case FamilyKind::Line: return "line";
    case FamilyKind::Star: return "star";
    case FamilyKind::Complete: return "complete";
    case FamilyKind::Circuit: return "circuit";
    case FamilyKind::C4d: return "c4d";
  }
  return "?";
}

Graph make_family(FamilyKind kind, std::size_t n) {
  if (n < 1) throw Error(ErrorCode::BadSize, "family size must be at least 1");
  std::vector<Edge> edges;
  const auto N = static_cast<std::uint32_t>(n);
  std::optional<unsigned> chi;
  switch (kind) {
    case FamilyKind::Null:
      chi = 1;
      break;
    case FamilyKind::Line:
      for (std::uint32_t i = 0; i + 1 < N; ++i) edges.push_back({i, i + 1});
      chi = n >= 2 ? 2 : 1;
      break;
    case FamilyKind::Star:
      for (std::uint32_t i = 1; i < N; ++i) edges.push_back({0, i});
      chi = n >= 2 ? 2 : 1;
      break;
    case FamilyKind::Complete:
      for (std::uint32_t i = 0; i < N; ++i)
        for (std::uint32_t j = i + 1; j < N; ++j) edges.push_back({i, j});
      chi = N;
      break;
    case FamilyKind::Circuit:
      // C_1 is a vertex with a loop; C_2 is a double edge.
      for (std::uint32_t i = 0; i < N; ++i) edges.push_back({i, (i + 1) % N});
      if (n >= 2) chi = n % 2 == 0 ? 2 : 3;
      break;
    case FamilyKind::C4d:
      if (n != 4) throw Error(ErrorCode::BadSize, "c4d is defined only for n = 4");
      edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}};
      chi = 3;
      break;
  }
  return Graph(n, std::move(edges)).with_chromatic_number(chi);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    if (!n) {
      std::size_t count = 0;
      if (first != "n" || !(fields >> count)) throw Error(ErrorCode::Parse, "first line must be \"n <count>\"");
      n = count;
      continue;
    }
    long long u = 0, v = 0;
    try {
      u = std::stoll(first);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "bad vertex on line " + std::to_string(lineno));
    }
    if (!(fields >> v) || u < 0 || v < 0) throw Error(ErrorCode::Parse, "bad edge on line " + std::to_string(lineno));
    edges.push_back({static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v)});
  }
  if (!n) throw Error(ErrorCode::Parse, "missing \"n <count>\" header");
  return Graph(*n, std::move(edges));
}

std::string to_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.num_vertices()) + "\n";
  for (const auto& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

Graph parse_graph_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw Error(ErrorCode::Parse, "graph JSON needs \"n\" and \"edges\"");
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::Parse, "edges must be [u, v] pairs");
    const auto u = e[0].get<long long>(), v = e[1].get<long long>();
    if (u < 0 || v < 0) throw Error(ErrorCode::Parse, "negative vertex index");
    edges.push_back({static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v)});
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  return Graph(j["n"].get<std::size_t>(), std::move(edges), std::move(labels));
}

std::string to_graph_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.num_vertices();
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges()) j["edges"].push_back({e.u, e.v});
  if (g.has_labels()) j["labels"] = g.labels();
  return j.dump();
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open graph file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_graph_json(text);
  return parse_edge_list(text);
}

}  // namespace wsc
