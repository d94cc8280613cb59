#include "blowup/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <string>

#include "blowup/eigensolve.hpp"
#include "blowup/weights.hpp"

namespace blowup {

Graph::Graph(int n) : n_(n), rows_(static_cast<size_t>(n), 0) {
    if (n < 0 || n > kMaxVertices)
        throw ValidationError("vertex count out of range [0, 62]: " + std::to_string(n));
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw ValidationError("edge endpoint out of range: " + std::to_string(u) + " " +
                              std::to_string(v));
    if (u == v) throw ValidationError("self-loop rejected: " + std::to_string(u));
    if (adjacent(u, v)) return;
    rows_[u] |= 1ull << v;
    rows_[v] |= 1ull << u;
    edges_.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(edges_.begin(), edges_.end());
}

int Graph::degree(int v) const { return std::popcount(rows_[v]); }

std::vector<int> VertexSubset::vertices() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(count()));
    for (std::uint64_t m = members; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

VertexSubset VertexSubset::full(int n) {
    return {n, n == 0 ? 0 : (~0ull >> (64 - n))};
}

VertexSubset VertexSubset::of(int parent_n, std::initializer_list<int> vs) {
    VertexSubset s{parent_n, 0};
    for (int v : vs) s.members |= 1ull << v;
    return s;
}

// --- parsing ----------------------------------------------------------

namespace {

struct Tokens {
    std::vector<std::string_view> fields;
};

std::vector<std::pair<int, Tokens>> split_lines(std::string_view text) {
    std::vector<std::pair<int, Tokens>> out;
    int lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
        ++lineno;
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        // strip comments and whitespace
        if (size_t h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
        Tokens t;
        size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
            size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
            if (j > i) t.fields.push_back(line.substr(i, j - i));
            i = j;
        }
        if (!t.fields.empty()) out.emplace_back(lineno, std::move(t));
    }
    return out;
}

int parse_int(std::string_view tok, int lineno) {
    int value = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || p != tok.data() + tok.size() || value < 0)
        throw ParseError("line " + std::to_string(lineno) + ": malformed token '" +
                         std::string(tok) + "'");
    return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    auto lines = split_lines(text);
    int declared_n = -1;
    size_t start = 0;
    if (!lines.empty() && lines[0].second.fields.size() == 2 && lines[0].second.fields[0] == "n") {
        declared_n = parse_int(lines[0].second.fields[1], lines[0].first);
        if (declared_n > Graph::kMaxVertices)
            throw ValidationError("declared vertex count exceeds 62");
        start = 1;
    }
    std::vector<std::pair<int, int>> edges;
    int max_label = -1;
    for (size_t li = start; li < lines.size(); ++li) {
        const auto& [lineno, toks] = lines[li];
        if (toks.fields.size() != 2)
            throw ParseError("line " + std::to_string(lineno) + ": expected 'u v'");
        int u = parse_int(toks.fields[0], lineno);
        int v = parse_int(toks.fields[1], lineno);
        if (u == v)
            throw ValidationError("line " + std::to_string(lineno) + ": self-loop " +
                                  std::to_string(u) + " " + std::to_string(v));
        max_label = std::max({max_label, u, v});
        edges.emplace_back(u, v);
    }
    int n = declared_n >= 0 ? declared_n : max_label + 1;
    if (declared_n >= 0 && max_label >= declared_n)
        throw ValidationError("vertex label " + std::to_string(max_label) +
                              " >= declared count " + std::to_string(declared_n));
    if (n > Graph::kMaxVertices) throw ValidationError("vertex count exceeds 62");
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph parse_graph6(std::string_view text) {
    // trim surrounding whitespace
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    while (!text.empty() && (text.front() == ' ')) text.remove_prefix(1);
    if (text.empty()) throw ParseError("graph6: empty input");
    for (unsigned char c : text)
        if (c < 63 || c > 126)
            throw ParseError("graph6: byte outside [63,126]: " + std::to_string(int(c)));
    if (text[0] == 126)
        throw ParseError("graph6: long size forms (n > 62) not supported");
    int n = text[0] - 63;
    Graph g(n);
    long bits_needed = static_cast<long>(n) * (n - 1) / 2;
    long bytes_needed = (bits_needed + 5) / 6;
    if (static_cast<long>(text.size()) - 1 != bytes_needed)
        throw ParseError("graph6: expected " + std::to_string(bytes_needed) +
                         " data bytes, got " + std::to_string(text.size() - 1));
    long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = text[1 + bit / 6] - 63;
            if ((byte >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    // padding bits must be zero
    for (long b = bits_needed; b < bytes_needed * 6; ++b) {
        int byte = text[1 + b / 6] - 63;
        if ((byte >> (5 - b % 6)) & 1) throw ParseError("graph6: nonzero padding bits");
    }
    return g;
}

// --- subgraphs --------------------------------------------------------

InducedSubgraph induced_subgraph(const Graph& g, const VertexSubset& sub) {
    if (sub.empty()) throw ValidationError("induced_subgraph: empty subset");
    if (sub.parent_n != g.vertex_count() ||
        (sub.members >> g.vertex_count()) != 0)
        throw ValidationError("induced_subgraph: subset out of range");
    InducedSubgraph out;
    out.original_labels = sub.vertices();
    out.graph = Graph(static_cast<int>(out.original_labels.size()));
    for (size_t a = 0; a < out.original_labels.size(); ++a)
        for (size_t b = a + 1; b < out.original_labels.size(); ++b)
            if (g.adjacent(out.original_labels[a], out.original_labels[b]))
                out.graph.add_edge(static_cast<int>(a), static_cast<int>(b));
    return out;
}

namespace {

std::uint64_t neighbors_of_set(const Graph& g, std::uint64_t set) {
    std::uint64_t nb = 0;
    for (std::uint64_t m = set; m; m &= m - 1) nb |= g.neighbors(std::countr_zero(m));
    return nb & ~set;
}

// Anchored growth: every connected set containing `anchor` and only
// vertices > anchor is generated exactly once (the branch on the smallest
// new extension vertex is unique).
void grow(const Graph& g, std::uint64_t cur, std::uint64_t forbidden, std::uint64_t allowed,
          std::vector<std::uint64_t>& out) {
    out.push_back(cur);
    std::uint64_t ext = neighbors_of_set(g, cur) & allowed & ~forbidden;
    std::uint64_t before = 0;
    for (std::uint64_t m = ext; m; m &= m - 1) {
        std::uint64_t w = m & (~m + 1);
        grow(g, cur | w, forbidden | before, allowed, out);
        before |= w;
    }
}

}  // namespace

std::vector<VertexSubset> enumerate_connected_subsets(const Graph& g) {
    int n = g.vertex_count();
    std::vector<VertexSubset> out;
    for (int a = 0; a < n; ++a) {
        std::uint64_t allowed = (n == 64) ? ~0ull : ((~0ull >> (64 - n)) & ~((1ull << (a + 1)) - 1));
        std::vector<std::uint64_t> masks;
        grow(g, 1ull << a, 0, allowed, masks);
        std::sort(masks.begin(), masks.end());
        for (auto m : masks) out.push_back({n, m});
    }
    return out;
}

std::vector<VertexSubset> enumerate_all_subsets(const Graph& g) {
    int n = g.vertex_count();
    std::vector<VertexSubset> out;
    if (n == 0) return out;
    std::vector<std::uint64_t> masks;
    masks.reserve((1ull << n) - 1);
    for (std::uint64_t m = 1; m < (1ull << n); ++m) masks.push_back(m);
    std::sort(masks.begin(), masks.end(), [](std::uint64_t x, std::uint64_t y) {
        int ax = std::countr_zero(x), ay = std::countr_zero(y);
        return ax != ay ? ax < ay : x < y;
    });
    for (auto m : masks) out.push_back({n, m});
    return out;
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return false;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t nb = neighbors_of_set(g, seen);
        frontier = nb & ~seen;
        seen |= frontier;
    }
    return std::popcount(seen) == n;
}

double spectral_radius(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0 || g.edge_count() == 0) return 0.0;
    ComplexMatrix m(n);
    for (auto [u, v] : g.edges()) {
        m.at(u, v) = 1.0;
        m.at(v, u) = 1.0;
    }
    auto eig = symmetric_eigenpairs(m);
    return eig.values.back();
}

}  // namespace blowup
