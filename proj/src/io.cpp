#include "kchrom/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace kchrom {

namespace {

void append_size(std::string& out, int n) {
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else {
        // 18-bit big-endian size, three 6-bit groups
        out.push_back(126);
        out.push_back(char(((n >> 12) & 63) + 63));
        out.push_back(char(((n >> 6) & 63) + 63));
        out.push_back(char((n & 63) + 63));
    }
}

} // namespace

std::string graph6_encode(const Graph& g) {
    std::string out;
    append_size(out, g.n);
    int bit = 0;
    int acc = 0;
    for (int v = 1; v < g.n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++bit == 6) {
                out.push_back(char(acc + 63));
                acc = 0;
                bit = 0;
            }
        }
    if (bit > 0) out.push_back(char((acc << (6 - bit)) + 63));
    return out;
}

Graph graph6_decode(std::string_view line) {
    size_t pos = 0;
    auto need = [&](size_t k) {
        if (line.size() - pos < k)
            throw std::invalid_argument("graph6: truncated input");
    };
    auto byte = [&]() {
        int c = static_cast<unsigned char>(line[pos++]);
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6: byte out of range");
        return c - 63;
    };
    need(1);
    int n;
    if (static_cast<unsigned char>(line[pos]) == 126) {
        ++pos;
        need(3);
        int a = byte(), b = byte(), c = byte();
        n = (a << 12) | (b << 6) | c;
    } else {
        n = byte();
    }
    if (n > VertexSet::capacity)
        throw std::invalid_argument("graph6: order exceeds 128");
    long bits = long(n) * (n - 1) / 2;
    size_t body = size_t((bits + 5) / 6);
    if (line.size() - pos != body)
        throw std::invalid_argument("graph6: wrong body length");
    Graph g(n);
    long i = 0;
    int u = 0, v = 1;
    while (i < bits) {
        int grp = byte();
        for (int b = 5; b >= 0 && i < bits; --b, ++i) {
            if ((grp >> b) & 1) g.add_edge(u, v);
            if (++u == v) {
                u = 0;
                ++v;
            }
        }
        // bits below the last data bit in the final group must be zero
        if (i == bits && (grp & ((1 << (6 - (bits % 6 ? bits % 6 : 6))) - 1)))
            throw std::invalid_argument("graph6: nonzero padding");
    }
    return g;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (first && line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
        first = false;
        if (line.empty()) continue;
        out.push_back(graph6_decode(line));
    }
    return out;
}

void write_graph6_stream(std::ostream& out, const std::vector<Graph>& gs) {
    for (const Graph& g : gs) out << graph6_encode(g) << '\n';
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_graph6_stream(in);
}

void write_graph6_file(const std::string& path, const std::vector<Graph>& gs) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    write_graph6_stream(out, gs);
}

Graph parse_adjacency_list(std::istream& in) {
    std::vector<std::pair<int, std::vector<int>>> rows;
    std::string line;
    int maxid = -1;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("adjacency list: missing ':'");
        std::istringstream head(line.substr(0, colon));
        int v;
        if (!(head >> v) || v < 0)
            throw std::invalid_argument("adjacency list: bad vertex id");
        std::string rest;
        if (head >> rest)
            throw std::invalid_argument("adjacency list: junk before ':'");
        std::istringstream tail(line.substr(colon + 1));
        std::vector<int> nbrs;
        int u;
        while (tail >> u) {
            if (u < 0) throw std::invalid_argument("adjacency list: bad id");
            if (u == v) throw std::invalid_argument("adjacency list: self-loop");
            nbrs.push_back(u);
            maxid = std::max(maxid, u);
        }
        if (!tail.eof())
            throw std::invalid_argument("adjacency list: non-numeric entry");
        maxid = std::max(maxid, v);
        rows.emplace_back(v, std::move(nbrs));
    }
    int n = maxid + 1;
    if (n > VertexSet::capacity)
        throw std::invalid_argument("adjacency list: order exceeds 128");
    Graph g(n);
    for (auto& [v, nbrs] : rows)
        for (int u : nbrs) g.add_edge(v, u);
    return g;
}

Graph read_adjacency_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_adjacency_list(in);
}

} // namespace kchrom
