#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/graph.hpp"

namespace qeg {

Graph cycle(std::int64_t n);     // n >= 3
Graph complete(std::int64_t n);  // n >= 1

/// One island per entry, entry = island size; edges between distinct islands.
Graph complete_multipartite(const std::vector<std::int64_t>& parts);

/// K_{p x 2}: complement of p disjoint edges.
Graph cocktail_party(std::int64_t p);  // p >= 2

/// 2-subsets of {1..5} in lexicographic order, adjacent iff disjoint.
Graph petersen();

/// Line graph of K_n: 2-subsets of {1..n} in lexicographic order, adjacent
/// iff the subsets intersect.
Graph triangular(std::int64_t n);  // n >= 2

/// Line graph of K_{n,n}: vertices (i,j) on an n x n board, adjacent iff
/// same row or same column.
Graph rook(std::int64_t n);  // n >= 2

/// Vertices Z_q, adjacent iff the difference is a nonzero quadratic residue.
/// Requires q prime with q = 1 (mod 4), which makes the relation symmetric.
Graph paley(std::int64_t q);

/// Vertices F_2^4, adjacent iff the difference has Hamming weight 1 or 4.
Graph clebsch();

/// Vertices Z_4 x Z_4, adjacent iff the difference is one of
/// +-(1,0), +-(0,1), +-(1,1).
Graph shrikhande();

/// Builds a named graph from a spec string "family[:p1[,p2...]]",
/// e.g. "petersen", "cycle:5", "paley:13", "complete_multipartite:3,3,3".
/// Throws InputError on unknown families or invalid parameters.
Graph generate(const std::string& spec);

}  // namespace qeg
