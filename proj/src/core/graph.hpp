#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace qeg {

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency is a dense bit-packed symmetric matrix with empty diagonal, so
/// common-neighbour counts are word-wise AND + popcount. Instances are
/// immutable once built (construction helpers aside) and safe to share
/// across threads.
class Graph {
public:
    explicit Graph(std::int64_t n);

    /// Builds a graph with exactly the given edges, symmetrized, duplicates
    /// collapsed. Throws InputError on out-of-range endpoints or self-loops.
    static Graph from_edge_list(std::int64_t n,
                                const std::vector<std::pair<std::int64_t, std::int64_t>>& edges);

    std::int64_t order() const { return n_; }
    std::int64_t edge_count() const;

    bool has_edge(std::int64_t u, std::int64_t v) const;
    void add_edge(std::int64_t u, std::int64_t v);

    std::int64_t degree(std::int64_t v) const;
    std::int64_t common_neighbors(std::int64_t u, std::int64_t v) const;

    /// x~y in the complement iff x != y and x is not adjacent to y here.
    Graph complement() const;

    bool is_connected() const;

    /// Neighbours of v in increasing order.
    std::vector<std::int64_t> neighbors(std::int64_t v) const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(std::int64_t v) const;
    const std::uint64_t* row(std::int64_t v) const { return bits_.data() + v * words_; }

    std::int64_t n_ = 0;
    std::int64_t words_ = 0;           // 64-bit words per adjacency row
    std::vector<std::uint64_t> bits_;  // n_ * words_
};

/// All-pairs shortest-path distances in graph-distance units.
struct DistanceMatrix {
    std::int64_t n = 0;
    std::vector<int> d;  // row-major n*n
    int diameter = 0;

    int at(std::int64_t x, std::int64_t y) const { return d[x * n + y]; }
    std::int64_t row_sum(std::int64_t x) const;
};

/// BFS from every vertex. Throws DisconnectedError when some pair has no
/// connecting path.
DistanceMatrix distance_matrix(const Graph& g);

/// The parameter tuple (n, k, lambda, mu) of a strongly regular graph.
struct SrgParams {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t lambda = 0;
    std::int64_t mu = 0;

    bool operator==(const SrgParams&) const = default;
};

/// Outcome of detect_srg. complete_graph / empty_graph flag the degenerate
/// cases where mu (resp. lambda) is undetermined because no vertex pair of
/// the relevant kind exists; the corresponding params field is set to the
/// sentinel -1 and must not be read as a count.
enum class SrgKind { srg, not_srg, complete_graph, empty_graph };

struct SrgDetection {
    SrgKind kind = SrgKind::not_srg;
    SrgParams params;
};

/// Tests regularity plus constant common-neighbour counts over adjacent and
/// non-adjacent pairs. Never fabricates undetermined parameters.
SrgDetection detect_srg(const Graph& g);

/// Edge-list text format: first non-comment line "n m", then m pairs "u v"
/// (0-based, whitespace separated). '#' starts a comment running to the end
/// of the line. Throws ParseError on malformed input.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace qeg
