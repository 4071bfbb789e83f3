#include "rlab/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "rlab/errors.hpp"

namespace rlab {

namespace {

// Next non-comment, non-blank line; false at end of stream.
bool next_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        return true;
    }
    return false;
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return in;
}

} // namespace

Graph parse_graph(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) throw InputError("graph file: missing header line");
    std::istringstream header(line);
    long long n = 0, m = 0;
    if (!(header >> n >> m) || n < 0 || m < 0)
        throw InputError("graph file: header must be \"n m\"");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_line(in, line)) throw InputError("graph file: expected " + std::to_string(m) +
                                                   " edges, got " + std::to_string(i));
        std::istringstream es(line);
        long long u = 0, v = 0;
        if (!(es >> u >> v)) throw InputError("graph file: bad edge line: " + line);
        if (u >= v) throw InputError("graph file: edges must satisfy u < v: " + line);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

Graph load_graph(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

DegreeMatrix parse_degmat(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) throw InputError("degree matrix file: missing order line");
    std::istringstream header(line);
    int t = 0;
    if (!(header >> t) || t < 1) throw InputError("degree matrix file: bad order");
    std::vector<std::vector<std::int64_t>> rows(t, std::vector<std::int64_t>(t));
    for (int i = 0; i < t; ++i) {
        if (!next_line(in, line)) throw InputError("degree matrix file: missing row " +
                                                   std::to_string(i + 1));
        std::istringstream rs(line);
        for (int j = 0; j < t; ++j)
            if (!(rs >> rows[i][j]))
                throw InputError("degree matrix file: row " + std::to_string(i + 1) +
                                 " needs " + std::to_string(t) + " integers");
    }
    return DegreeMatrix::from_rows(rows);
}

DegreeMatrix load_degmat(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_degmat(in);
}

void write_degmat(std::ostream& out, const DegreeMatrix& d) {
    out << d.order() << '\n';
    for (int i = 0; i < d.order(); ++i) {
        for (int j = 0; j < d.order(); ++j) out << (j ? " " : "") << d.at(i, j);
        out << '\n';
    }
}

std::vector<VertexSet> parse_partition(std::istream& in, int expected_classes) {
    std::vector<VertexSet> sets(expected_classes);
    std::vector<bool> seen(expected_classes, false);
    std::string line;
    while (next_line(in, line)) {
        std::size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw InputError("partition file: expected \"i: v1 v2 ...\": " + line);
        int cls = 0;
        try {
            cls = std::stoi(line.substr(0, colon));
        } catch (...) {
            throw InputError("partition file: bad class index: " + line);
        }
        if (cls < 1 || cls > expected_classes)
            throw InputError("partition file: class " + std::to_string(cls) + " out of range");
        if (seen[cls - 1]) throw InputError("partition file: class repeated");
        seen[cls - 1] = true;
        std::istringstream vs(line.substr(colon + 1));
        int v = 0;
        while (vs >> v) sets[cls - 1].push_back(v);
        std::sort(sets[cls - 1].begin(), sets[cls - 1].end());
        if (std::adjacent_find(sets[cls - 1].begin(), sets[cls - 1].end()) != sets[cls - 1].end())
            throw InputError("partition file: repeated vertex in class " + std::to_string(cls));
    }
    for (int i = 0; i < expected_classes; ++i)
        if (!seen[i]) throw InputError("partition file: missing class " + std::to_string(i + 1));
    return sets;
}

std::vector<VertexSet> load_partition(const std::string& path, int expected_classes) {
    auto in = open_or_throw(path);
    return parse_partition(in, expected_classes);
}

void write_ball_labels(std::ostream& out, const TypedTreeBall& ball) {
    for (int v = 0; v < ball.graph.vertex_count(); ++v)
        out << v << ' ' << ball.graph.label(v) << ' ' << ball.depth[v] << '\n';
}

std::string content_digest(const std::string& bytes) {
    std::uint64_t hash = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return std::string(buf);
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return content_digest(ss.str());
}

} // namespace rlab
