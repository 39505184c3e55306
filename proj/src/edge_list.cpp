#include "treecentral/edge_list.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace treecentral {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

bool next_content_line(std::istream& in, std::string& line, std::size_t& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        return true;
    }
    return false;
}

}  // namespace

Tree read_edge_list(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    if (!next_content_line(in, line, lineno)) {
        throw ParseError(0, "empty input, expected vertex count");
    }
    long long n = 0;
    {
        std::istringstream ss(line);
        std::string extra;
        if (!(ss >> n) || (ss >> extra)) throw ParseError(lineno, "expected a single vertex count");
        if (n <= 0) throw ParseError(lineno, "vertex count must be positive");
    }
    const auto count = static_cast<std::size_t>(n);
    std::vector<Edge> edges;
    std::vector<std::vector<VertexId>> seen(count);
    // Union-find so a cycle is reported on the line that closes it.
    std::vector<std::size_t> root(count);
    for (std::size_t i = 0; i < count; ++i) root[i] = i;
    auto find = [&](std::size_t x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    while (edges.size() + 1 < count) {
        if (!next_content_line(in, line, lineno)) {
            throw ParseError(0, "expected " + std::to_string(count - 1) + " edges, got " +
                                    std::to_string(edges.size()));
        }
        std::istringstream ss(line);
        long long u = 0, v = 0;
        std::string extra;
        if (!(ss >> u >> v) || (ss >> extra)) throw ParseError(lineno, "expected \"u v\"");
        if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(lineno, "vertex id out of range");
        if (u == v) throw ParseError(lineno, "self-loop");
        auto ru = find(static_cast<std::size_t>(u));
        auto rv = find(static_cast<std::size_t>(v));
        if (ru == rv) throw ParseError(lineno, "edge closes a cycle or repeats an edge");
        root[ru] = rv;
        edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
    }
    if (next_content_line(in, line, lineno)) {
        throw ParseError(lineno, "unexpected content after the last edge");
    }
    return Tree::from_edges(count, edges);
}

Tree read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Tree& t) {
    out << t.size() << '\n';
    for (const auto& e : t.edges()) {
        out << e.u << ' ' << e.v << '\n';
    }
}

}  // namespace treecentral
