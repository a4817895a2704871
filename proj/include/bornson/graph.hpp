#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bornson/algebra.hpp"

namespace bornson {

struct Edge {
    std::size_t from;
    std::size_t to;
    Amplitude amplitude;   // <to|T|from>

    friend bool operator==(const Edge&, const Edge&) = default;
};

// Directed graph with an edge i -> j for every stored entry (j, i) of T.
// Out-edges of each vertex are kept sorted by target.
class TransitionGraph {
public:
    explicit TransitionGraph(std::size_t num_vertices);

    // Throws ArgumentError on duplicate or out-of-range edges.
    TransitionGraph(std::size_t num_vertices, std::vector<Edge> edges);

    std::size_t num_vertices() const noexcept { return out_.size(); }
    std::size_t num_edges() const noexcept;

    const std::vector<Edge>& out_edges(std::size_t v) const { return out_[v]; }
    bool has_edge(std::size_t from, std::size_t to) const;

    // All edges ordered by (from, to).
    std::vector<Edge> edges() const;

private:
    std::vector<std::vector<Edge>> out_;
};

TransitionGraph extract_graph(const TransferOperator& op);

struct AcyclicityReport {
    bool is_acyclic = false;
    std::vector<std::size_t> topological_order;  // acyclic only
    std::vector<std::size_t> witness_cycle;      // cyclic only; last vertex links back to first
    std::optional<std::size_t> depth;            // longest path, in edges
};

AcyclicityReport analyze_acyclicity(const TransitionGraph& g);

struct WeightedPath {
    std::vector<std::size_t> vertices;
    Amplitude weight{1.0};
};

inline constexpr std::size_t kDefaultPathLimit = 1'000'000;

// Every directed walk from -> to with at most max_len edges, in lexicographic
// order of the vertex sequence. max_len = nullopt means unbounded, which is
// only allowed on acyclic graphs. Throws EnumerationLimitError when more than
// `limit` paths would be produced.
std::vector<WeightedPath> enumerate_paths(const TransitionGraph& g,
                                          std::size_t from,
                                          std::size_t to,
                                          std::optional<std::size_t> max_len,
                                          std::size_t limit = kDefaultPathLimit);

// Sum of the weights of all length-k walks from -> to, i.e. the path-sum
// formula for (T^k)(to, from). Shares nothing with the matrix-power code.
Amplitude path_sum_entry(const TransitionGraph& g,
                         std::size_t from,
                         std::size_t to,
                         std::size_t k);

} // namespace bornson
