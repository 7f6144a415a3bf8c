#pragma once

#include <cstdint>
#include <iterator>
#include <map>
#include <vector>

#include "wsc/graph.hpp"

namespace wsc {

using EdgeMask = std::uint32_t;

inline constexpr unsigned kDefaultEdgeCap = 30;
inline constexpr unsigned kMaxEdgeCap = 31;

struct SubgraphSummary {
  EdgeMask edge_mask = 0;
  std::uint32_t num_edges = 0;
  std::uint32_t k = 0;
  // n(G'_i), largest first.
  std::vector<std::uint32_t> component_sizes;
  // c(G') = e(G') + k(G') - n(G').
  std::uint32_t cycle_rank = 0;
};

// Union-find over the edges selected by mask. BadGraph if the mask
// addresses an edge the graph does not have.
SubgraphSummary components(const Graph& graph, EdgeMask mask);

struct EnumerationOptions {
  unsigned edge_cap = kDefaultEdgeCap;
  // 0 means std::thread::hardware_concurrency().
  unsigned workers = 0;
};

// Forward range over all 2^e spanning subgraphs, mask order.
class SpanningSubgraphs {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = SubgraphSummary;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = SubgraphSummary;

    iterator() = default;
    iterator(const Graph* g, std::uint64_t mask) : graph_(g), mask_(mask) {}
    SubgraphSummary operator*() const { return components(*graph_, static_cast<EdgeMask>(mask_)); }
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++mask_;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.mask_ == b.mask_; }

   private:
    const Graph* graph_ = nullptr;
    std::uint64_t mask_ = 0;
  };

  SpanningSubgraphs(const Graph& g, std::uint64_t first, std::uint64_t last) : graph_(&g), first_(first), last_(last) {}

  iterator begin() const { return {graph_, first_}; }
  iterator end() const { return {graph_, last_}; }
  std::uint64_t size() const { return last_ - first_; }
  std::uint64_t first_mask() const { return first_; }
  std::uint64_t last_mask() const { return last_; }

 private:
  const Graph* graph_;
  std::uint64_t first_;
  std::uint64_t last_;
};

// All 2^e(G) subgraphs. CapExceeded when e(G) > cap.
SpanningSubgraphs enumerate_spanning_subgraphs(const Graph& graph, unsigned edge_cap = kDefaultEdgeCap);

// Disjoint contiguous mask ranges, one per worker.
std::vector<SpanningSubgraphs> partition_spanning_subgraphs(const Graph& graph, unsigned parts,
                                                            unsigned edge_cap = kDefaultEdgeCap);

// Multiplicity of each (e(G'), sorted component sizes) pattern over all
// spanning subgraphs. Everything the subgraph sums need is a function of
// this key, so the 2^e walk is done once and in parallel.
struct CensusKey {
  std::uint32_t num_edges = 0;
  std::vector<std::uint32_t> component_sizes;

  friend auto operator<=>(const CensusKey&, const CensusKey&) = default;
};

using SubgraphCensus = std::map<CensusKey, std::uint64_t>;

SubgraphCensus subgraph_census(const Graph& graph, const EnumerationOptions& options = {});

unsigned resolve_workers(unsigned requested);

}  // namespace wsc
