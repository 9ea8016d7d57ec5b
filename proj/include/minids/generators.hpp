#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "minids/graph.hpp"

namespace minids {

/// Erdos-Renyi G(n, p): every unordered pair {i, j}, i < j, visited in
/// lexicographic order, is kept iff Rng(seed).unit() < p. Deterministic per
/// (n, p, seed). Throws std::invalid_argument unless 0 <= p <= 1.
Graph gen_random(std::size_t n, double p, std::uint64_t seed);

/// width x height grid; vertex (i, j), 1-based, has id (j-1)*width + (i-1).
/// Two points are adjacent iff their Manhattan distance is 1.
Graph gen_grid(std::size_t width, std::size_t height);

/// DIMACS `hammingN-D`: all N-bit words (id = word value), adjacent iff the
/// Hamming distance is at least D.
Graph gen_hamming(unsigned bits, unsigned min_distance);

/// DIMACS `johnsonN-W-D`: N-bit words of weight W in increasing numeric
/// order, adjacent iff the Hamming distance is at least D.
Graph gen_johnson(unsigned bits, unsigned weight, unsigned min_distance);

/// DIMACS `c-fatN-C` family: floor(N / (C ln N)) consecutive clusters whose
/// sizes differ by at most one (larger clusters first); each cluster is a
/// clique and cyclically consecutive clusters are completely joined.
Graph gen_cfat(std::size_t n, unsigned c);

/// DIMACS `MANN_a9` up to vertex numbering: the clique form of the set
/// cover problem for the Steiner triple system on 9 points (the lines of
/// the affine plane over Z3). Its complement has one vertex per point
/// (ids 0..8) and a triangle per triple (ids 9..44), each triangle vertex
/// also joined to its own point. n = 45, m = 918.
Graph gen_mann_a9();

enum class GenKind { random, grid, hamming, johnson, cfat, mann_a9 };

/// Textual generator description, as accepted on the command line:
///   random:N:P[:seed=S]   grid:WxH   hamming:N:D   johnson:N:W:D   cfat:N:C   mann_a9
/// A random spec without seed= uses seed 1, so the string alone fixes the graph.
struct GenParams {
    GenKind kind = GenKind::random;
    std::size_t n = 0;
    double p = 0.0;
    std::size_t width = 0;
    std::size_t height = 0;
    unsigned a = 0;
    unsigned b = 0;
    unsigned c = 0;
    std::uint64_t seed = 1;

    static GenParams parse(std::string_view spec);
    std::string to_string() const;
};

Graph generate(const GenParams& params);

} // namespace minids
