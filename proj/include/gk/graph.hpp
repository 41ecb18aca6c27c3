#pragma once

// Gruenberg-Kegel graphs: encoded target graphs, rule-based graphs for the
// Alt and L(2,q) families, deterministic serialization.

#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gk/catalog.hpp"

namespace gk {

enum class GraphFormat { Dot, Json, EdgeList };

// Simple undirected graph on a set of primes. Immutable after construction.
class GKGraph {
public:
    using Vertex = std::uint64_t;
    using Edge = std::pair<Vertex, Vertex>;  // stored with first < second

    GKGraph(std::vector<Vertex> vertices, std::vector<Edge> edges) {
        std::sort(vertices.begin(), vertices.end());
        vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
        for (Vertex v : vertices)
            if (!is_prime(v))
                throw std::invalid_argument("GKGraph: vertex " + std::to_string(v) + " is not prime");
        vertices_ = std::move(vertices);
        for (auto [a, b] : edges) {
            if (a == b) throw std::invalid_argument("GKGraph: self-loop at " + std::to_string(a));
            if (a > b) std::swap(a, b);
            if (!has_vertex(a) || !has_vertex(b))
                throw std::invalid_argument("GKGraph: edge " + std::to_string(a) + "-" +
                                            std::to_string(b) + " has an endpoint outside the vertex set");
            edges_.insert({a, b});
        }
    }

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::set<Edge>& edges() const { return edges_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_vertex(Vertex v) const {
        return std::binary_search(vertices_.begin(), vertices_.end(), v);
    }

    bool adjacent(Vertex a, Vertex b) const {
        if (a > b) std::swap(a, b);
        return edges_.count({a, b}) != 0;
    }

    std::vector<Vertex> neighbors(Vertex v) const {
        require_vertex(v);
        std::vector<Vertex> out;
        for (Vertex u : vertices_)
            if (u != v && adjacent(u, v)) out.push_back(u);
        return out;
    }

    std::size_t degree(Vertex v) const { return neighbors(v).size(); }

    std::vector<Vertex> nonneighbors(Vertex v) const {
        require_vertex(v);
        std::vector<Vertex> out;
        for (Vertex u : vertices_)
            if (u != v && !adjacent(u, v)) out.push_back(u);
        return out;
    }

    bool operator==(const GKGraph& o) const {
        return vertices_ == o.vertices_ && edges_ == o.edges_;
    }

private:
    void require_vertex(Vertex v) const {
        if (!has_vertex(v))
            throw std::invalid_argument("GKGraph: " + std::to_string(v) + " is not a vertex");
    }

    std::vector<Vertex> vertices_;
    std::set<Edge> edges_;
};

inline std::vector<GKGraph::Vertex> nonneighbors_of(const GKGraph& g, GKGraph::Vertex v) {
    return g.nonneighbors(v);
}

// ---------------------------------------------------------------------------
// encoded target graphs

// The prime graphs of the two target groups, transcribed edge by edge.
// Pinned by tests: 10 vertices / 12 edges and 9 vertices / 12 edges.
inline GKGraph encoded_graph(const GroupId& target) {
    if (target.family == Family::TwoE6 && target.q == 3) {
        return GKGraph({2, 3, 5, 7, 13, 19, 37, 41, 61, 73},
                       {{19, 37},
                        {2, 41},
                        {2, 5},
                        {2, 13},
                        {2, 61},
                        {2, 3},
                        {2, 7},
                        {5, 13},
                        {13, 7},
                        {7, 3},
                        {61, 3},
                        {73, 7}});
    }
    if (target.family == Family::E6 && target.q == 3) {
        return GKGraph({2, 3, 5, 7, 11, 13, 41, 73, 757},
                       {{2, 7},
                        {2, 5},
                        {2, 13},
                        {2, 11},
                        {2, 3},
                        {2, 41},
                        {13, 73},
                        {13, 7},
                        {3, 13},
                        {7, 5},
                        {3, 7},
                        {3, 11}});
    }
    throw std::invalid_argument("encoded_graph: no encoded graph for " + to_string(target) +
                                " (only E6(3) and 2E6(3))");
}

// ---------------------------------------------------------------------------
// rule-based graphs

namespace detail {

inline std::vector<std::uint64_t> prime_support_u64(const Factorization& f) {
    std::vector<std::uint64_t> out;
    for (const auto& p : f.primes()) {
        if (!p.fits_ulong_p()) throw std::domain_error("prime support exceeds 64 bits");
        out.push_back(p.get_ui());
    }
    return out;
}

}  // namespace detail

// Gamma(Alt(n)): vertices are the primes <= n; odd r,s adjacent iff r+s <= n;
// 2 adjacent to odd r iff r+4 <= n. Gamma(L(2,q)): cliques on the odd parts
// of (q-1)/d and (q+1)/d with the defining characteristic isolated.
// Validated against the brute-force oracle where that can run.
inline GKGraph rule_graph(const GroupId& g) {
    if (g.family == Family::Alt) {
        if (g.degree < 5) throw std::invalid_argument("rule_graph: Alt(n) requires n >= 5");
        const std::uint64_t n = g.degree;
        std::vector<GKGraph::Vertex> vs;
        for (std::uint32_t p : detail::small_primes()) {
            if (p > n) break;
            vs.push_back(p);
        }
        std::vector<GKGraph::Edge> es;
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                std::uint64_t r = vs[i], s = vs[j];
                bool adj = (r == 2) ? (s + 4 <= n) : (r + s <= n);
                if (adj) es.push_back({r, s});
            }
        return GKGraph(vs, es);
    }
    if (g.family == Family::L && g.degree == 2) {
        if (g.q < 4) throw std::invalid_argument("rule_graph: L(2,q) requires q >= 4");
        detail::validate(g);
        auto pf = detail::prime_power_base(g.q);
        const std::uint64_t p = pf->first;
        const std::uint64_t d = g.q % 2 == 0 ? 1 : 2;
        auto minus_part = detail::prime_support_u64(factor((g.q - 1) / d));
        auto plus_part = detail::prime_support_u64(factor((g.q + 1) / d));
        std::vector<GKGraph::Vertex> vs{p};
        vs.insert(vs.end(), minus_part.begin(), minus_part.end());
        vs.insert(vs.end(), plus_part.begin(), plus_part.end());
        std::vector<GKGraph::Edge> es;
        for (const auto& part : {minus_part, plus_part})
            for (std::size_t i = 0; i < part.size(); ++i)
                for (std::size_t j = i + 1; j < part.size(); ++j) es.push_back({part[i], part[j]});
        return GKGraph(vs, es);
    }
    throw std::invalid_argument("rule_graph: no adjacency rule for " + to_string(g) +
                                " (supported: Alt(n), n >= 5, and L(2,q), q >= 4)");
}

// The graph the CLI serves: encoded for the two targets, rule-based otherwise.
inline GKGraph graph_of(const GroupId& g) {
    if ((g.family == Family::E6 || g.family == Family::TwoE6) && g.q == 3) return encoded_graph(g);
    return rule_graph(g);
}

// ---------------------------------------------------------------------------
// serialization (deterministic: ascending vertices, edges sorted by (min,max))

inline std::string export_graph(const GKGraph& g, GraphFormat format) {
    std::ostringstream os;
    switch (format) {
        case GraphFormat::Dot:
            os << "graph G {\n";
            for (auto v : g.vertices()) os << "  " << v << ";\n";
            for (const auto& [a, b] : g.edges()) os << "  " << a << " -- " << b << ";\n";
            os << "}\n";
            break;
        case GraphFormat::Json: {
            os << "{\"vertices\":[";
            bool first = true;
            for (auto v : g.vertices()) {
                if (!first) os << ",";
                os << v;
                first = false;
            }
            os << "],\"edges\":[";
            first = true;
            for (const auto& [a, b] : g.edges()) {
                if (!first) os << ",";
                os << "[" << a << "," << b << "]";
                first = false;
            }
            os << "]}\n";
            break;
        }
        case GraphFormat::EdgeList:
            for (const auto& [a, b] : g.edges()) os << a << " " << b << "\n";
            break;
    }
    return os.str();
}

namespace detail {

inline std::uint64_t parse_u64(const std::string& tok) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 19)
        throw std::invalid_argument("graph parse: bad number \"" + tok + "\"");
    return std::stoull(tok);
}

}  // namespace detail

inline GKGraph parse_graph_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<GKGraph::Vertex> vs;
    std::vector<GKGraph::Edge> es;
    for (const auto& v : j.at("vertices")) vs.push_back(v.get<std::uint64_t>());
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph parse: each edge must be a pair");
        es.push_back({e[0].get<std::uint64_t>(), e[1].get<std::uint64_t>()});
    }
    return GKGraph(vs, es);
}

// Accepts the subset of dot this library emits.
inline GKGraph parse_graph_dot(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::vector<GKGraph::Vertex> vs;
    std::vector<GKGraph::Edge> es;
    bool in_graph = false;
    while (std::getline(is, line)) {
        std::string t;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) t += c;
        if (t.empty()) continue;
        if (!in_graph) {
            if (t.rfind("graph", 0) == 0 && t.back() == '{') {
                in_graph = true;
                continue;
            }
            throw std::invalid_argument("graph parse: expected \"graph <name> {\"");
        }
        if (t == "}") return GKGraph(vs, es);
        if (t.back() != ';') throw std::invalid_argument("graph parse: missing ';' in \"" + line + "\"");
        t.pop_back();
        auto dash = t.find("--");
        if (dash == std::string::npos) {
            vs.push_back(detail::parse_u64(t));
        } else {
            es.push_back({detail::parse_u64(t.substr(0, dash)), detail::parse_u64(t.substr(dash + 2))});
            vs.push_back(es.back().first);
            vs.push_back(es.back().second);
        }
    }
    throw std::invalid_argument("graph parse: unterminated dot graph");
}

// "a b" per line; isolated vertices are not representable in this format.
inline GKGraph parse_graph_edge_list(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::vector<GKGraph::Vertex> vs;
    std::vector<GKGraph::Edge> es;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;
        if (!(ls >> b) || (ls >> extra))
            throw std::invalid_argument("graph parse: expected \"a b\" on line \"" + line + "\"");
        es.push_back({detail::parse_u64(a), detail::parse_u64(b)});
        vs.push_back(es.back().first);
        vs.push_back(es.back().second);
    }
    return GKGraph(vs, es);
}

inline GKGraph parse_graph(const std::string& text, GraphFormat format) {
    switch (format) {
        case GraphFormat::Dot: return parse_graph_dot(text);
        case GraphFormat::Json: return parse_graph_json(text);
        case GraphFormat::EdgeList: return parse_graph_edge_list(text);
    }
    throw std::logic_error("parse_graph: bad format");
}

// Format sniffing for graph files: json objects start with '{', dot with "graph".
inline GKGraph parse_graph_auto(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') return parse_graph_json(text);
        break;
    }
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text.compare(first, 5, "graph") == 0)
        return parse_graph_dot(text);
    return parse_graph_edge_list(text);
}

}  // namespace gk
