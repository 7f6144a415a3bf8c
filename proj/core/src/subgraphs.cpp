#include "wsc/subgraphs.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "wsc/error.hpp"

namespace wsc {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) { reset(); }

  void reset() {
    std::iota(parent_.begin(), parent_.end(), 0U);
    std::fill(size_.begin(), size_.end(), 1U);
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  // Sizes of the current classes, largest first.
  void class_sizes(std::vector<std::uint32_t>& out) {
    out.clear();
    for (std::uint32_t i = 0; i < parent_.size(); ++i)
      if (parent_[i] == i) out.push_back(size_[i]);
    std::sort(out.begin(), out.end(), std::greater<>());
  }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
};

void check_cap(const Graph& graph, unsigned edge_cap) {
  const unsigned cap = std::min(edge_cap, kMaxEdgeCap);
  if (graph.num_edges() > cap) {
    throw Error(ErrorCode::CapExceeded, "graph has " + std::to_string(graph.num_edges()) + " edges, cap is " +
                                            std::to_string(cap) + "; use a family closed form or raise the cap");
  }
}

}  // namespace

SubgraphSummary components(const Graph& graph, EdgeMask mask) {
  const std::size_t e = graph.num_edges();
  if (e < 32 && (mask >> e) != 0) throw Error(ErrorCode::BadGraph, "edge mask addresses edges beyond e(G)");
  DisjointSets sets(graph.num_vertices());
  SubgraphSummary out;
  out.edge_mask = mask;
  for (std::size_t i = 0; i < e; ++i) {
    if (!((mask >> i) & 1U)) continue;
    ++out.num_edges;
    sets.unite(graph.edges()[i].u, graph.edges()[i].v);
  }
  sets.class_sizes(out.component_sizes);
  out.k = static_cast<std::uint32_t>(out.component_sizes.size());
  out.cycle_rank = out.num_edges + out.k - static_cast<std::uint32_t>(graph.num_vertices());
  return out;
}

SpanningSubgraphs enumerate_spanning_subgraphs(const Graph& graph, unsigned edge_cap) {
  check_cap(graph, edge_cap);
  return SpanningSubgraphs(graph, 0, std::uint64_t{1} << graph.num_edges());
}

std::vector<SpanningSubgraphs> partition_spanning_subgraphs(const Graph& graph, unsigned parts, unsigned edge_cap) {
  check_cap(graph, edge_cap);
  const std::uint64_t total = std::uint64_t{1} << graph.num_edges();
  parts = std::max(1U, parts);
  std::vector<SpanningSubgraphs> out;
  for (unsigned i = 0; i < parts; ++i) {
    const std::uint64_t first = total * i / parts, last = total * (i + 1) / parts;
    if (first < last) out.emplace_back(graph, first, last);
  }
  return out;
}

unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

SubgraphCensus subgraph_census(const Graph& graph, const EnumerationOptions& options) {
  const auto ranges = partition_spanning_subgraphs(graph, resolve_workers(options.workers), options.edge_cap);
  std::vector<SubgraphCensus> partial(ranges.size());

  std::vector<std::thread> threads;
  threads.reserve(ranges.size());
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    threads.emplace_back([&, i] {
      const auto& edges = graph.edges();
      DisjointSets sets(graph.num_vertices());
      CensusKey key;
      auto& census = partial[i];
      const std::uint64_t first = ranges[i].first_mask(), last = ranges[i].last_mask();
      for (std::uint64_t mask = first; mask < last; ++mask) {
        sets.reset();
        std::uint32_t count = 0;
        for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
          const auto& e = edges[static_cast<std::size_t>(__builtin_ctzll(bits))];
          sets.unite(e.u, e.v);
          ++count;
        }
        key.num_edges = count;
        sets.class_sizes(key.component_sizes);
        ++census[key];
      }
    });
  }
  for (auto& t : threads) t.join();

  SubgraphCensus merged = std::move(partial.front());
  for (std::size_t i = 1; i < partial.size(); ++i)
    for (const auto& [k, c] : partial[i]) merged[k] += c;
  return merged;
}

}  // namespace wsc
