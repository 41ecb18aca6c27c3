#pragma once

// Exact maximum coclique (independent set) on GK graphs. Branch and bound
// over vertex bitmasks; graphs here have at most a few dozen vertices.

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "gk/graph.hpp"

namespace gk {

struct CocliqueResult {
    std::size_t size = 0;
    std::vector<GKGraph::Vertex> witness;  // ascending
    std::optional<GKGraph::Vertex> anchored_at;
};

namespace detail {

class CocliqueSolver {
public:
    explicit CocliqueSolver(const GKGraph& g) : graph_(g), n_(g.vertex_count()) {
        if (n_ == 0) throw std::invalid_argument("max_coclique: graph has no vertices");
        if (n_ > 64) throw std::invalid_argument("max_coclique: more than 64 vertices unsupported");
        adj_.assign(n_, 0);
        const auto& vs = g.vertices();
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                if (g.adjacent(vs[i], vs[j])) {
                    adj_[i] |= std::uint64_t(1) << j;
                    adj_[j] |= std::uint64_t(1) << i;
                }
    }

    // Vertices are explored in ascending order with the include branch first
    // and the incumbent replaced only on strict improvement, so the reported
    // witness is the lexicographically smallest maximum coclique.
    CocliqueResult solve(std::uint64_t chosen, std::uint64_t candidates) {
        best_ = chosen;
        best_size_ = std::popcount(chosen);
        dfs(chosen, candidates);
        CocliqueResult r;
        r.size = static_cast<std::size_t>(best_size_);
        for (std::size_t i = 0; i < n_; ++i)
            if (best_ >> i & 1) r.witness.push_back(graph_.vertices()[i]);
        return r;
    }

    std::size_t index_of(GKGraph::Vertex v) const {
        const auto& vs = graph_.vertices();
        return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    }

    std::uint64_t full_mask() const {
        return n_ == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n_) - 1;
    }

    std::uint64_t nonadjacent_mask(std::size_t i) const {
        return full_mask() & ~adj_[i] & ~(std::uint64_t(1) << i);
    }

private:
    void dfs(std::uint64_t chosen, std::uint64_t candidates) {
        int size = std::popcount(chosen);
        if (size > best_size_) {
            best_size_ = size;
            best_ = chosen;
        }
        while (candidates) {
            if (size + std::popcount(candidates) <= best_size_) return;  // cannot improve strictly
            int i = std::countr_zero(candidates);
            candidates &= candidates - 1;
            dfs(chosen | std::uint64_t(1) << i, candidates & ~adj_[i]);
        }
    }

    const GKGraph& graph_;
    std::size_t n_;
    std::vector<std::uint64_t> adj_;
    std::uint64_t best_ = 0;
    int best_size_ = 0;
};

}  // namespace detail

inline CocliqueResult max_coclique(const GKGraph& g) {
    detail::CocliqueSolver solver(g);
    return solver.solve(0, solver.full_mask());
}

inline CocliqueResult max_coclique_containing(const GKGraph& g, GKGraph::Vertex v) {
    if (!g.has_vertex(v))
        throw std::invalid_argument("max_coclique_containing: " + std::to_string(v) +
                                    " is not a vertex");
    detail::CocliqueSolver solver(g);
    std::size_t i = solver.index_of(v);
    CocliqueResult r = solver.solve(std::uint64_t(1) << i, solver.nonadjacent_mask(i));
    r.anchored_at = v;
    return r;
}

}  // namespace gk
