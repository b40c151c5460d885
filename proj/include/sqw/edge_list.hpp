#pragma once

#include "sqw/complex.hpp"

#include <filesystem>
#include <istream>
#include <vector>

namespace sqw {

/**
 * Reads a whitespace-separated edge list: one edge "u v" per line, 1-indexed
 * positive vertex ids, blank lines and lines starting with '#' ignored.
 *
 * Throws ParseError on malformed lines and InvalidEdge on self-loops.
 * Duplicate edges (in either direction) are collapsed.
 */
std::vector<Edge> read_edge_list(std::istream& in);

/// Throws IoError when the file cannot be opened.
std::vector<Edge> read_edge_list(const std::filesystem::path& path);

}  // namespace sqw
