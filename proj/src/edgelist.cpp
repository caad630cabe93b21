#include "rewirekit/edgelist.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rewirekit {

namespace {

// Next non-empty, non-comment line; false on EOF.
bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        std::size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos) continue;
        if (line[i] == '#') continue;
        return true;
    }
    return false;
}

[[noreturn]] void parse_fail(const std::string& what) {
    throw std::runtime_error("edge list: " + what);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    if (!next_data_line(in, line)) parse_fail("missing header line");
    std::istringstream header(line);
    long long n = 0, m = 0;
    if (!(header >> n >> m) || n < 0 || m < 0) parse_fail("bad header '" + line + "'");

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(in, line)) parse_fail("expected " + std::to_string(m) + " edges");
        std::istringstream ss(line);
        long long u = 0, v = 0;
        if (!(ss >> u >> v)) parse_fail("bad edge line '" + line + "'");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }

    if (!next_data_line(in, line)) return Graph(static_cast<int>(n), edges);

    std::istringstream cc(line);
    long long c = 0;
    if (!(cc >> c) || c < 0) parse_fail("bad colour count '" + line + "'");
    std::vector<int> colour(static_cast<std::size_t>(n), Graph::kUncoloured);
    for (long long i = 0; i < c; ++i) {
        if (!next_data_line(in, line)) parse_fail("expected " + std::to_string(c) + " colour lines");
        std::istringstream ss(line);
        long long node = 0, col = 0;
        if (!(ss >> node >> col)) parse_fail("bad colour line '" + line + "'");
        if (node < 0 || node >= n) parse_fail("colour node out of range");
        if (col < 0) parse_fail("negative colour id");
        colour[static_cast<std::size_t>(node)] = static_cast<int>(col);
    }
    return Graph(static_cast<int>(n), edges, std::move(colour));
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.num_nodes() << ' ' << g.num_edges() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    if (g.has_colours()) {
        int count = 0;
        for (int c : g.colours())
            if (c != Graph::kUncoloured) ++count;
        out << count << '\n';
        for (int u = 0; u < g.num_nodes(); ++u)
            if (g.colour_of(u) != Graph::kUncoloured) out << u << ' ' << g.colour_of(u) << '\n';
    }
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_edge_list(g, out);
    if (!out) throw std::runtime_error("write failed: " + path);
}

Graph apply_colour_file(const Graph& g, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<int> colour(static_cast<std::size_t>(g.num_nodes()), Graph::kUncoloured);
    std::string line;
    while (next_data_line(in, line)) {
        std::istringstream ss(line);
        long long node = 0, col = 0;
        if (!(ss >> node >> col)) parse_fail("bad colour line '" + line + "'");
        if (node < 0 || node >= g.num_nodes()) parse_fail("colour node out of range");
        if (col < 0) parse_fail("negative colour id");
        colour[static_cast<std::size_t>(node)] = static_cast<int>(col);
    }
    return g.with_colours(std::move(colour));
}

}  // namespace rewirekit
