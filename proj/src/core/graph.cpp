#include "core/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "core/errors.hpp"

namespace qeg {

Graph::Graph(std::int64_t n) : n_(n) {
    if (n < 1) {
        throw InputError("graph needs at least one vertex, got " + std::to_string(n));
    }
    words_ = (n + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n_ * words_), 0);
}

Graph Graph::from_edge_list(std::int64_t n,
                            const std::vector<std::pair<std::int64_t, std::int64_t>>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
        g.add_edge(u, v);
    }
    return g;
}

void Graph::check_vertex(std::int64_t v) const {
    if (v < 0 || v >= n_) {
        throw InputError("vertex " + std::to_string(v) + " out of range [0, " +
                         std::to_string(n_) + ")");
    }
}

void Graph::add_edge(std::int64_t u, std::int64_t v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
        throw InputError("self-loop at vertex " + std::to_string(u));
    }
    bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

bool Graph::has_edge(std::int64_t u, std::int64_t v) const {
    check_vertex(u);
    check_vertex(v);
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1;
}

std::int64_t Graph::degree(std::int64_t v) const {
    check_vertex(v);
    std::int64_t count = 0;
    const std::uint64_t* r = row(v);
    for (std::int64_t w = 0; w < words_; ++w) {
        count += std::popcount(r[w]);
    }
    return count;
}

std::int64_t Graph::edge_count() const {
    std::int64_t twice = 0;
    for (std::int64_t v = 0; v < n_; ++v) {
        twice += degree(v);
    }
    return twice / 2;
}

std::int64_t Graph::common_neighbors(std::int64_t u, std::int64_t v) const {
    check_vertex(u);
    check_vertex(v);
    std::int64_t count = 0;
    const std::uint64_t* ru = row(u);
    const std::uint64_t* rv = row(v);
    for (std::int64_t w = 0; w < words_; ++w) {
        count += std::popcount(ru[w] & rv[w]);
    }
    return count;
}

std::vector<std::int64_t> Graph::neighbors(std::int64_t v) const {
    check_vertex(v);
    std::vector<std::int64_t> out;
    const std::uint64_t* r = row(v);
    for (std::int64_t w = 0; w < words_; ++w) {
        std::uint64_t bitsword = r[w];
        while (bitsword != 0) {
            const int b = std::countr_zero(bitsword);
            out.push_back(w * 64 + b);
            bitsword &= bitsword - 1;
        }
    }
    return out;
}

Graph Graph::complement() const {
    Graph c(n_);
    const std::uint64_t tail_bits = static_cast<std::uint64_t>(n_) % 64;
    const std::uint64_t tail_mask = tail_bits == 0 ? ~std::uint64_t{0}
                                                   : ((std::uint64_t{1} << tail_bits) - 1);
    for (std::int64_t v = 0; v < n_; ++v) {
        for (std::int64_t w = 0; w < words_; ++w) {
            std::uint64_t inv = ~bits_[v * words_ + w];
            if (w == words_ - 1) {
                inv &= tail_mask;
            }
            c.bits_[v * words_ + w] = inv;
        }
        // no loops
        c.bits_[v * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
    return c;
}

namespace {

// Single-source BFS writing distances into dist (must be n entries, -1 = unseen).
void bfs(const Graph& g, std::int64_t src, std::vector<int>& dist) {
    std::fill(dist.begin(), dist.end(), -1);
    std::vector<std::int64_t> frontier{src};
    dist[src] = 0;
    int level = 0;
    while (!frontier.empty()) {
        ++level;
        std::vector<std::int64_t> next;
        for (const auto u : frontier) {
            for (const auto v : g.neighbors(u)) {
                if (dist[v] < 0) {
                    dist[v] = level;
                    next.push_back(v);
                }
            }
        }
        frontier = std::move(next);
    }
}

}  // namespace

bool Graph::is_connected() const {
    std::vector<int> dist(n_);
    bfs(*this, 0, dist);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

DistanceMatrix distance_matrix(const Graph& g) {
    const std::int64_t n = g.order();
    DistanceMatrix dm;
    dm.n = n;
    dm.d.assign(static_cast<std::size_t>(n * n), 0);
    std::vector<int> dist(n);
    for (std::int64_t src = 0; src < n; ++src) {
        bfs(g, src, dist);
        for (std::int64_t v = 0; v < n; ++v) {
            if (dist[v] < 0) {
                throw DisconnectedError("graph is disconnected: no path from vertex " +
                                        std::to_string(src) + " to " + std::to_string(v));
            }
            dm.d[src * n + v] = dist[v];
            dm.diameter = std::max(dm.diameter, dist[v]);
        }
    }
    return dm;
}

std::int64_t DistanceMatrix::row_sum(std::int64_t x) const {
    std::int64_t sum = 0;
    for (std::int64_t y = 0; y < n; ++y) {
        sum += at(x, y);
    }
    return sum;
}

SrgDetection detect_srg(const Graph& g) {
    const std::int64_t n = g.order();
    SrgDetection out;

    const std::int64_t k = g.degree(0);
    for (std::int64_t v = 1; v < n; ++v) {
        if (g.degree(v) != k) {
            return out;  // not regular
        }
    }

    std::int64_t lambda = -1;
    std::int64_t mu = -1;
    for (std::int64_t u = 0; u < n; ++u) {
        for (std::int64_t v = u + 1; v < n; ++v) {
            const std::int64_t c = g.common_neighbors(u, v);
            if (g.has_edge(u, v)) {
                if (lambda < 0) {
                    lambda = c;
                } else if (c != lambda) {
                    return out;
                }
            } else {
                if (mu < 0) {
                    mu = c;
                } else if (c != mu) {
                    return out;
                }
            }
        }
    }

    if (mu < 0) {
        // No non-adjacent pair: complete graph (covers n == 1 as well).
        out.kind = SrgKind::complete_graph;
        out.params = {n, k, n >= 2 ? n - 2 : -1, -1};
        return out;
    }
    if (lambda < 0) {
        // No adjacent pair: empty graph.
        out.kind = SrgKind::empty_graph;
        out.params = {n, 0, -1, 0};
        return out;
    }
    out.kind = SrgKind::srg;
    out.params = {n, k, lambda, mu};
    return out;
}

namespace {

std::vector<std::int64_t> integer_tokens(std::istream& in) {
    std::string line;
    std::string cleaned;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        cleaned += line;
        cleaned += '\n';
    }
    std::istringstream tokens(cleaned);
    std::vector<std::int64_t> out;
    std::string tok;
    while (tokens >> tok) {
        try {
            std::size_t used = 0;
            const std::int64_t value = std::stoll(tok, &used);
            if (used != tok.size()) {
                throw std::invalid_argument(tok);
            }
            out.push_back(value);
        } catch (const std::exception&) {
            throw ParseError("expected integer token, got '" + tok + "'");
        }
    }
    return out;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    const auto tok = integer_tokens(in);
    if (tok.size() < 2) {
        throw ParseError("missing 'n m' header line");
    }
    const std::int64_t n = tok[0];
    const std::int64_t m = tok[1];
    if (n < 1) {
        throw ParseError("vertex count must be >= 1, got " + std::to_string(n));
    }
    if (m < 0) {
        throw ParseError("edge count must be >= 0, got " + std::to_string(m));
    }
    if (static_cast<std::int64_t>(tok.size()) != 2 + 2 * m) {
        throw ParseError("header announces " + std::to_string(m) + " edges but " +
                         std::to_string(tok.size() - 2) + " endpoint values follow");
    }
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (std::int64_t i = 0; i < m; ++i) {
        edges.emplace_back(tok[2 + 2 * i], tok[3 + 2 * i]);
    }
    return Graph::from_edge_list(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open file: " + path);
    }
    return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (std::int64_t u = 0; u < g.order(); ++u) {
        for (const auto v : g.neighbors(u)) {
            if (v > u) {
                out << u << ' ' << v << '\n';
            }
        }
    }
}

}  // namespace qeg
