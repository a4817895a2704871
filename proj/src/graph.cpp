#include "bornson/graph.hpp"

#include <algorithm>
#include <string>

namespace bornson {

TransitionGraph::TransitionGraph(std::size_t num_vertices) : out_(num_vertices)
{
    if (num_vertices == 0)
        throw ArgumentError("TransitionGraph: needs at least one vertex");
}

TransitionGraph::TransitionGraph(std::size_t num_vertices, std::vector<Edge> edges)
    : TransitionGraph(num_vertices)
{
    for (const auto& e : edges) {
        if (e.from >= num_vertices || e.to >= num_vertices)
            throw ArgumentError("edge " + std::to_string(e.from) + " -> " +
                                std::to_string(e.to) + " out of range");
        out_[e.from].push_back(e);
    }
    for (auto& list : out_) {
        std::sort(list.begin(), list.end(),
                  [](const Edge& a, const Edge& b) { return a.to < b.to; });
        for (std::size_t k = 1; k < list.size(); ++k)
            if (list[k].to == list[k - 1].to)
                throw ArgumentError("duplicate edge " + std::to_string(list[k].from) +
                                    " -> " + std::to_string(list[k].to));
    }
}

std::size_t TransitionGraph::num_edges() const noexcept
{
    std::size_t n = 0;
    for (const auto& list : out_)
        n += list.size();
    return n;
}

bool TransitionGraph::has_edge(std::size_t from, std::size_t to) const
{
    if (from >= out_.size())
        return false;
    const auto& list = out_[from];
    return std::any_of(list.begin(), list.end(), [to](const Edge& e) { return e.to == to; });
}

std::vector<Edge> TransitionGraph::edges() const
{
    std::vector<Edge> all;
    for (const auto& list : out_)
        all.insert(all.end(), list.begin(), list.end());
    return all;
}

TransitionGraph extract_graph(const TransferOperator& op)
{
    std::vector<Edge> edges;
    edges.reserve(op.nnz());
    for (const auto& t : op.triplets())
        edges.push_back({t.col, t.row, t.value});
    return TransitionGraph(op.dim(), std::move(edges));
}

// Iterative DFS with white/grey/black marking. Reverse post-order gives the
// topological order; a grey target is a back edge and closes a cycle.
AcyclicityReport analyze_acyclicity(const TransitionGraph& g)
{
    enum class Color : unsigned char { White, Grey, Black };

    const std::size_t n = g.num_vertices();
    std::vector<Color> color(n, Color::White);
    std::vector<std::size_t> postorder;
    postorder.reserve(n);

    struct Frame {
        std::size_t vertex;
        std::size_t next_edge;
    };
    std::vector<Frame> stack;

    AcyclicityReport report;

    for (std::size_t root = 0; root < n; ++root) {
        if (color[root] != Color::White)
            continue;
        stack.push_back({root, 0});
        color[root] = Color::Grey;

        while (!stack.empty()) {
            Frame& top = stack.back();
            const auto& out = g.out_edges(top.vertex);
            if (top.next_edge == out.size()) {
                color[top.vertex] = Color::Black;
                postorder.push_back(top.vertex);
                stack.pop_back();
                continue;
            }
            const std::size_t next = out[top.next_edge++].to;
            if (color[next] == Color::White) {
                color[next] = Color::Grey;
                stack.push_back({next, 0});
            } else if (color[next] == Color::Grey) {
                // The grey vertices on the stack from `next` upward form the cycle.
                auto it = std::find_if(stack.begin(), stack.end(),
                                       [next](const Frame& f) { return f.vertex == next; });
                for (; it != stack.end(); ++it)
                    report.witness_cycle.push_back(it->vertex);
                report.is_acyclic = false;
                return report;
            }
        }
    }

    report.is_acyclic = true;
    report.topological_order.assign(postorder.rbegin(), postorder.rend());

    std::vector<std::size_t> longest(n, 0);   // longest path ending at v
    std::size_t depth = 0;
    for (std::size_t v : report.topological_order) {
        for (const auto& e : g.out_edges(v))
            longest[e.to] = std::max(longest[e.to], longest[v] + 1);
        depth = std::max(depth, longest[v]);
    }
    report.depth = depth;
    return report;
}

namespace {

void check_vertex(const TransitionGraph& g, std::size_t v, const char* role)
{
    if (v >= g.num_vertices())
        throw ArgumentError(std::string(role) + " vertex " + std::to_string(v) +
                            " out of range");
}

// within[r][v]: v reaches `target` in at most r steps.
std::vector<std::vector<char>> reachability_within(const TransitionGraph& g,
                                                   std::size_t target,
                                                   std::size_t max_steps)
{
    const std::size_t n = g.num_vertices();
    std::vector<std::vector<char>> within(max_steps + 1, std::vector<char>(n, 0));
    within[0][target] = 1;
    for (std::size_t r = 1; r <= max_steps; ++r) {
        within[r] = within[r - 1];
        for (std::size_t v = 0; v < n; ++v)
            for (const auto& e : g.out_edges(v))
                if (within[r - 1][e.to])
                    within[r][v] = 1;
        if (within[r] == within[r - 1]) {
            for (std::size_t s = r + 1; s <= max_steps; ++s)
                within[s] = within[r];
            break;
        }
    }
    return within;
}

struct PathCollector {
    const TransitionGraph& g;
    std::size_t target;
    std::size_t max_len;
    std::size_t limit;
    const std::vector<std::vector<char>>& within;
    std::vector<std::size_t> trail;
    std::vector<WeightedPath> out;

    void visit(std::size_t v, Amplitude weight)
    {
        trail.push_back(v);
        if (v == target) {
            if (out.size() == limit)
                throw EnumerationLimitError("path enumeration exceeded the limit of " +
                                            std::to_string(limit) + " paths");
            out.push_back({trail, weight});
        }
        const std::size_t used = trail.size() - 1;
        if (used < max_len) {
            const std::size_t remaining = max_len - used - 1;
            for (const auto& e : g.out_edges(v))
                if (within[remaining][e.to])
                    visit(e.to, weight * e.amplitude);
        }
        trail.pop_back();
    }
};

} // namespace

std::vector<WeightedPath> enumerate_paths(const TransitionGraph& g,
                                          std::size_t from,
                                          std::size_t to,
                                          std::optional<std::size_t> max_len,
                                          std::size_t limit)
{
    check_vertex(g, from, "source");
    check_vertex(g, to, "target");

    std::size_t bound;
    if (max_len) {
        bound = *max_len;
    } else {
        if (!analyze_acyclicity(g).is_acyclic)
            throw UnboundedEnumerationError(
                "cannot enumerate paths of unbounded length on a cyclic graph");
        bound = g.num_vertices() - 1;
    }

    const auto within = reachability_within(g, to, bound);
    if (!within[bound][from])
        return {};

    PathCollector collector{g, to, bound, limit, within, {}, {}};
    collector.visit(from, Amplitude{1.0});
    return std::move(collector.out);
}

namespace {

// exact[r][v]: some walk of exactly r steps leads from v to the target.
struct ExactWalkSum {
    const TransitionGraph& g;
    std::vector<std::vector<char>> exact;

    Amplitude sum(std::size_t v, std::size_t steps) const
    {
        if (steps == 0)
            return Amplitude{1.0};
        Amplitude total{};
        for (const auto& e : g.out_edges(v))
            if (exact[steps - 1][e.to])
                total += e.amplitude * sum(e.to, steps - 1);
        return total;
    }
};

} // namespace

Amplitude path_sum_entry(const TransitionGraph& g,
                         std::size_t from,
                         std::size_t to,
                         std::size_t k)
{
    check_vertex(g, from, "source");
    check_vertex(g, to, "target");

    const std::size_t n = g.num_vertices();
    std::vector<std::vector<char>> exact(k + 1, std::vector<char>(n, 0));
    exact[0][to] = 1;
    for (std::size_t r = 1; r <= k; ++r)
        for (std::size_t v = 0; v < n; ++v)
            for (const auto& e : g.out_edges(v))
                if (exact[r - 1][e.to])
                    exact[r][v] = 1;

    if (!exact[k][from])
        return {};
    // Each step multiplies the next edge amplitude on the left, so the weight
    // is t_{i_k i_{k-1}} ... t_{i_1 i_0}; commutative for scalars.
    ExactWalkSum walker{g, std::move(exact)};
    return walker.sum(from, k);
}

} // namespace bornson
