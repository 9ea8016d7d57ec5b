#include "minids/generators.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "minids/rng.hpp"

namespace minids {

Graph gen_random(std::size_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("edge probability must lie in [0, 1]");
    }
    Rng rng(seed);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(p * static_cast<double>(n) * static_cast<double>(n) / 2.0) + 16);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (rng.unit() < p) {
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
            }
        }
    }
    return Graph::from_edges(n, edges);
}

Graph gen_grid(std::size_t width, std::size_t height) {
    if (width == 0 || height == 0) {
        throw std::invalid_argument("grid dimensions must be positive");
    }
    std::vector<Edge> edges;
    const auto id = [width](std::size_t i, std::size_t j) { return static_cast<Vertex>(j * width + i); };
    for (std::size_t j = 0; j < height; ++j) {
        for (std::size_t i = 0; i < width; ++i) {
            if (i + 1 < width) {
                edges.emplace_back(id(i, j), id(i + 1, j));
            }
            if (j + 1 < height) {
                edges.emplace_back(id(i, j), id(i, j + 1));
            }
        }
    }
    return Graph::from_edges(width * height, edges);
}

namespace {

Graph words_by_distance(const std::vector<std::uint32_t>& words, unsigned min_distance) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            if (static_cast<unsigned>(std::popcount(words[i] ^ words[j])) >= min_distance) {
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
            }
        }
    }
    return Graph::from_edges(words.size(), edges);
}

} // namespace

Graph gen_hamming(unsigned bits, unsigned min_distance) {
    if (bits == 0 || bits > 16) {
        throw std::invalid_argument("hamming word length must be in [1, 16]");
    }
    std::vector<std::uint32_t> words(std::size_t{1} << bits);
    for (std::uint32_t w = 0; w < words.size(); ++w) {
        words[w] = w;
    }
    return words_by_distance(words, min_distance);
}

Graph gen_johnson(unsigned bits, unsigned weight, unsigned min_distance) {
    if (bits == 0 || bits > 24 || weight > bits) {
        throw std::invalid_argument("johnson parameters out of range");
    }
    std::vector<std::uint32_t> words;
    for (std::uint32_t w = 0; w < (std::uint32_t{1} << bits); ++w) {
        if (static_cast<unsigned>(std::popcount(w)) == weight) {
            words.push_back(w);
        }
    }
    return words_by_distance(words, min_distance);
}

Graph gen_cfat(std::size_t n, unsigned c) {
    if (n < 3 || c == 0) {
        throw std::invalid_argument("c-fat parameters out of range");
    }
    const auto clusters = static_cast<std::size_t>(
        std::floor(static_cast<double>(n) / (static_cast<double>(c) * std::log(static_cast<double>(n)))));
    if (clusters < 3) {
        throw std::invalid_argument("c-fat parameters give fewer than three clusters");
    }
    std::vector<std::size_t> begin(clusters + 1, 0);
    const std::size_t base = n / clusters;
    const std::size_t extra = n % clusters;
    for (std::size_t i = 0; i < clusters; ++i) {
        begin[i + 1] = begin[i] + base + (i < extra ? 1 : 0);
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < clusters; ++i) {
        const std::size_t next = (i + 1) % clusters;
        for (std::size_t u = begin[i]; u < begin[i + 1]; ++u) {
            for (std::size_t v = u + 1; v < begin[i + 1]; ++v) {
                edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
            }
            for (std::size_t v = begin[next]; v < begin[next + 1]; ++v) {
                edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
            }
        }
    }
    return Graph::from_edges(n, edges);
}

Graph gen_mann_a9() {
    // points (x, y) of Z3 x Z3 get id 3x + y; each line is {p + t d : t in Z3}
    std::vector<std::array<Vertex, 3>> triples;
    const int directions[4][2] = {{0, 1}, {1, 0}, {1, 1}, {1, 2}};
    for (const auto& d : directions) {
        std::vector<char> seen(9, 0);
        for (int start = 0; start < 9; ++start) {
            if (seen[start]) {
                continue;
            }
            std::array<Vertex, 3> line{};
            for (int t = 0; t < 3; ++t) {
                const int x = (start / 3 + t * d[0]) % 3;
                const int y = (start % 3 + t * d[1]) % 3;
                line[t] = static_cast<Vertex>(3 * x + y);
                seen[line[t]] = 1;
            }
            triples.push_back(line);
        }
    }
    std::vector<Edge> cover;
    Vertex next = 9;
    for (const auto& line : triples) {
        const Vertex first = next;
        for (int t = 0; t < 3; ++t) {
            cover.emplace_back(line[t], next);
            for (Vertex prev = first; prev < next; ++prev) {
                cover.emplace_back(prev, next);
            }
            ++next;
        }
    }
    return Graph::from_edges(next, cover).complement();
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

template <typename T>
T parse_number(std::string_view token, std::string_view spec) {
    T value{};
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw std::invalid_argument("bad number '" + std::string(token) + "' in generator spec '" +
                                    std::string(spec) + "'");
    }
    return value;
}

double parse_probability(std::string_view token, std::string_view spec) {
    // from_chars for double is missing from older libstdc++ releases.
    std::istringstream in{std::string(token)};
    double value = 0.0;
    in >> value;
    if (in.fail() || !in.eof()) {
        throw std::invalid_argument("bad probability '" + std::string(token) + "' in generator spec '" +
                                    std::string(spec) + "'");
    }
    return value;
}

} // namespace

GenParams GenParams::parse(std::string_view spec) {
    const auto parts = split(spec, ':');
    GenParams out;
    const auto fail = [&]() -> GenParams {
        throw std::invalid_argument("unrecognized generator spec '" + std::string(spec) +
                                    "' (expected random:N:P[:seed=S], grid:WxH, hamming:N:D, "
                                    "johnson:N:W:D, cfat:N:C or mann_a9)");
    };
    if (parts.empty()) {
        return fail();
    }
    const auto kind = parts[0];
    if (kind == "random") {
        if (parts.size() != 3 && parts.size() != 4) {
            return fail();
        }
        out.kind = GenKind::random;
        out.n = parse_number<std::size_t>(parts[1], spec);
        out.p = parse_probability(parts[2], spec);
        if (parts.size() == 4) {
            if (parts[3].substr(0, 5) != "seed=") {
                return fail();
            }
            out.seed = parse_number<std::uint64_t>(parts[3].substr(5), spec);
        }
        if (!(out.p >= 0.0 && out.p <= 1.0)) {
            throw std::invalid_argument("edge probability must lie in [0, 1]");
        }
    } else if (kind == "grid") {
        if (parts.size() != 2) {
            return fail();
        }
        const auto dims = split(parts[1], 'x');
        if (dims.size() != 2) {
            return fail();
        }
        out.kind = GenKind::grid;
        out.width = parse_number<std::size_t>(dims[0], spec);
        out.height = parse_number<std::size_t>(dims[1], spec);
    } else if (kind == "hamming" && parts.size() == 3) {
        out.kind = GenKind::hamming;
        out.a = parse_number<unsigned>(parts[1], spec);
        out.b = parse_number<unsigned>(parts[2], spec);
    } else if (kind == "johnson" && parts.size() == 4) {
        out.kind = GenKind::johnson;
        out.a = parse_number<unsigned>(parts[1], spec);
        out.b = parse_number<unsigned>(parts[2], spec);
        out.c = parse_number<unsigned>(parts[3], spec);
    } else if (kind == "mann_a9" && parts.size() == 1) {
        out.kind = GenKind::mann_a9;
    } else if (kind == "cfat" && parts.size() == 3) {
        out.kind = GenKind::cfat;
        out.n = parse_number<std::size_t>(parts[1], spec);
        out.c = parse_number<unsigned>(parts[2], spec);
    } else {
        return fail();
    }
    return out;
}

std::string GenParams::to_string() const {
    std::ostringstream s;
    switch (kind) {
    case GenKind::random: s << "random:" << n << ':' << p << ":seed=" << seed; break;
    case GenKind::grid: s << "grid:" << width << 'x' << height; break;
    case GenKind::hamming: s << "hamming:" << a << ':' << b; break;
    case GenKind::johnson: s << "johnson:" << a << ':' << b << ':' << c; break;
    case GenKind::cfat: s << "cfat:" << n << ':' << c; break;
    case GenKind::mann_a9: s << "mann_a9"; break;
    }
    return s.str();
}

Graph generate(const GenParams& params) {
    switch (params.kind) {
    case GenKind::random: return gen_random(params.n, params.p, params.seed);
    case GenKind::grid: return gen_grid(params.width, params.height);
    case GenKind::hamming: return gen_hamming(params.a, params.b);
    case GenKind::johnson: return gen_johnson(params.a, params.b, params.c);
    case GenKind::cfat: return gen_cfat(params.n, params.c);
    case GenKind::mann_a9: return gen_mann_a9();
    }
    throw std::logic_error("unknown generator kind");
}

} // namespace minids
