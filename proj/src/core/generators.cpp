#include "core/generators.hpp"

#include <bit>
#include <numeric>
#include <utility>

#include "core/errors.hpp"

namespace qeg {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) {
        throw InputError(message);
    }
}

bool is_prime(std::int64_t q) {
    if (q < 2) {
        return false;
    }
    for (std::int64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            return false;
        }
    }
    return true;
}

// 2-subsets {a, b} of {1..n}, a < b, in lexicographic order.
std::vector<std::pair<int, int>> two_subsets(std::int64_t n) {
    std::vector<std::pair<int, int>> out;
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            out.emplace_back(a, b);
        }
    }
    return out;
}

}  // namespace

Graph cycle(std::int64_t n) {
    require(n >= 3, "cycle needs n >= 3");
    Graph g(n);
    for (std::int64_t v = 0; v < n; ++v) {
        g.add_edge(v, (v + 1) % n);
    }
    return g;
}

Graph complete(std::int64_t n) {
    require(n >= 1, "complete graph needs n >= 1");
    Graph g(n);
    for (std::int64_t u = 0; u < n; ++u) {
        for (std::int64_t v = u + 1; v < n; ++v) {
            g.add_edge(u, v);
        }
    }
    return g;
}

Graph complete_multipartite(const std::vector<std::int64_t>& parts) {
    require(!parts.empty(), "complete_multipartite needs at least one part");
    for (const auto p : parts) {
        require(p >= 1, "complete_multipartite parts must be >= 1");
    }
    const std::int64_t n = std::accumulate(parts.begin(), parts.end(), std::int64_t{0});
    std::vector<int> island(n);
    std::int64_t v = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::int64_t j = 0; j < parts[i]; ++j) {
            island[v++] = static_cast<int>(i);
        }
    }
    Graph g(n);
    for (std::int64_t a = 0; a < n; ++a) {
        for (std::int64_t b = a + 1; b < n; ++b) {
            if (island[a] != island[b]) {
                g.add_edge(a, b);
            }
        }
    }
    return g;
}

Graph cocktail_party(std::int64_t p) {
    require(p >= 2, "cocktail_party needs p >= 2");
    Graph matching(2 * p);
    for (std::int64_t i = 0; i < p; ++i) {
        matching.add_edge(2 * i, 2 * i + 1);
    }
    return matching.complement();
}

Graph petersen() {
    const auto verts = two_subsets(5);
    Graph g(static_cast<std::int64_t>(verts.size()));
    for (std::size_t u = 0; u < verts.size(); ++u) {
        for (std::size_t v = u + 1; v < verts.size(); ++v) {
            const bool disjoint = verts[u].first != verts[v].first &&
                                  verts[u].first != verts[v].second &&
                                  verts[u].second != verts[v].first &&
                                  verts[u].second != verts[v].second;
            if (disjoint) {
                g.add_edge(static_cast<std::int64_t>(u), static_cast<std::int64_t>(v));
            }
        }
    }
    return g;
}

Graph triangular(std::int64_t n) {
    require(n >= 2, "triangular needs n >= 2");
    const auto verts = two_subsets(n);
    Graph g(static_cast<std::int64_t>(verts.size()));
    for (std::size_t u = 0; u < verts.size(); ++u) {
        for (std::size_t v = u + 1; v < verts.size(); ++v) {
            const bool intersect = verts[u].first == verts[v].first ||
                                   verts[u].first == verts[v].second ||
                                   verts[u].second == verts[v].first ||
                                   verts[u].second == verts[v].second;
            if (intersect) {
                g.add_edge(static_cast<std::int64_t>(u), static_cast<std::int64_t>(v));
            }
        }
    }
    return g;
}

Graph rook(std::int64_t n) {
    require(n >= 2, "rook needs n >= 2");
    Graph g(n * n);
    for (std::int64_t u = 0; u < n * n; ++u) {
        for (std::int64_t v = u + 1; v < n * n; ++v) {
            if (u / n == v / n || u % n == v % n) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

Graph paley(std::int64_t q) {
    require(q >= 5, "paley needs q >= 5");
    require(is_prime(q), "paley needs q prime, got " + std::to_string(q));
    require(q % 4 == 1, "paley needs q = 1 (mod 4), got " + std::to_string(q));
    std::vector<bool> residue(static_cast<std::size_t>(q), false);
    for (std::int64_t x = 1; x < q; ++x) {
        residue[static_cast<std::size_t>(x * x % q)] = true;
    }
    Graph g(q);
    for (std::int64_t u = 0; u < q; ++u) {
        for (std::int64_t v = u + 1; v < q; ++v) {
            if (residue[static_cast<std::size_t>(v - u)]) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

Graph clebsch() {
    Graph g(16);
    for (std::int64_t u = 0; u < 16; ++u) {
        for (std::int64_t v = u + 1; v < 16; ++v) {
            const int w = std::popcount(static_cast<unsigned>(u ^ v));
            if (w == 1 || w == 4) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

Graph shrikhande() {
    Graph g(16);
    const auto connected = [](int da, int db) {
        return (da == 1 && db == 0) || (da == 3 && db == 0) ||
               (da == 0 && db == 1) || (da == 0 && db == 3) ||
               (da == 1 && db == 1) || (da == 3 && db == 3);
    };
    for (std::int64_t u = 0; u < 16; ++u) {
        for (std::int64_t v = u + 1; v < 16; ++v) {
            const int da = static_cast<int>(((u / 4) - (v / 4) + 4) % 4);
            const int db = static_cast<int>(((u % 4) - (v % 4) + 4) % 4);
            if (connected(da, db)) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

Graph generate(const std::string& spec) {
    std::string family = spec;
    std::vector<std::int64_t> args;
    const auto colon = spec.find(':');
    if (colon != std::string::npos) {
        family = spec.substr(0, colon);
        std::string rest = spec.substr(colon + 1);
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            const auto comma = rest.find(',', pos);
            const std::string tok = rest.substr(pos, comma == std::string::npos
                                                         ? std::string::npos
                                                         : comma - pos);
            try {
                std::size_t used = 0;
                args.push_back(std::stoll(tok, &used));
                if (used != tok.size()) {
                    throw std::invalid_argument(tok);
                }
            } catch (const std::exception&) {
                throw InputError("bad generator parameter '" + tok + "' in spec '" + spec + "'");
            }
            if (comma == std::string::npos) {
                break;
            }
            pos = comma + 1;
        }
    }

    const auto arity = [&](std::size_t want) {
        require(args.size() == want,
                "generator '" + family + "' takes " + std::to_string(want) +
                    " parameter(s), got " + std::to_string(args.size()));
    };

    if (family == "cycle") {
        arity(1);
        return cycle(args[0]);
    }
    if (family == "complete") {
        arity(1);
        return complete(args[0]);
    }
    if (family == "complete_multipartite") {
        require(!args.empty(), "complete_multipartite needs a part-size list");
        return complete_multipartite(args);
    }
    if (family == "cocktail_party") {
        arity(1);
        return cocktail_party(args[0]);
    }
    if (family == "petersen") {
        arity(0);
        return petersen();
    }
    if (family == "triangular") {
        arity(1);
        return triangular(args[0]);
    }
    if (family == "rook") {
        arity(1);
        return rook(args[0]);
    }
    if (family == "paley") {
        arity(1);
        return paley(args[0]);
    }
    if (family == "clebsch") {
        arity(0);
        return clebsch();
    }
    if (family == "shrikhande") {
        arity(0);
        return shrikhande();
    }
    throw InputError("unknown graph family '" + family + "'");
}

}  // namespace qeg
