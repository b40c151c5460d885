#include "sqw/edge_list.hpp"

#include "sqw/error.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

namespace sqw {

namespace {

bool parse_vertex(const std::string& token, VertexId& out) {
    const char* first = token.data();
    const char* last = first + token.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

}  // namespace

std::vector<Edge> read_edge_list(std::istream& in) {
    std::vector<Edge> edges;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;

        std::istringstream fields(line);
        std::string a, b, extra;
        fields >> a >> b;
        if (b.empty() || (fields >> extra)) {
            throw ParseError("line " + std::to_string(line_no) + ": expected two vertex ids");
        }
        VertexId u = 0, v = 0;
        if (!parse_vertex(a, u) || !parse_vertex(b, v)) {
            throw ParseError("line " + std::to_string(line_no) + ": vertex ids must be positive integers");
        }
        if (u == 0 || v == 0) {
            throw InvalidEdge("line " + std::to_string(line_no) + ": vertex ids are 1-indexed");
        }
        if (u == v) {
            throw InvalidEdge("line " + std::to_string(line_no) + ": self-loop on vertex " +
                              std::to_string(u));
        }
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    if (in.bad()) throw IoError("read failure while reading edge list");

    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

std::vector<Edge> read_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    return read_edge_list(in);
}

}  // namespace sqw
