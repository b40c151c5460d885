#pragma once

// Small complexes and karate-club reference data shared by the test suites.

#include "sqw/complex.hpp"
#include "sqw/edge_list.hpp"

#include <algorithm>
#include <filesystem>
#include <set>
#include <vector>

namespace fixtures {

using sqw::Edge;
using sqw::Simplex;
using sqw::SimplicialComplex;
using sqw::VertexId;

inline Simplex S(std::initializer_list<VertexId> v) { return sqw::canonical_simplex(v); }

inline SimplicialComplex filled_triangle() {
    const std::vector<Edge> e{{1, 2}, {1, 3}, {2, 3}};
    return sqw::clique_complex(e, 2);
}

inline SimplicialComplex hollow_triangle() {
    const std::vector<Edge> e{{1, 2}, {1, 3}, {2, 3}};
    return sqw::clique_complex(e, 1);
}

inline SimplicialComplex path() {
    const std::vector<Edge> e{{1, 2}, {2, 3}};
    return sqw::clique_complex(e, 2);
}

/// Triangles (1,2,3) and (3,4,5) glued at vertex 3.
inline SimplicialComplex bowtie() {
    const std::vector<Edge> e{{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}};
    return sqw::clique_complex(e, 2);
}

inline SimplicialComplex two_disjoint_edges() {
    const std::vector<Edge> e{{1, 2}, {3, 4}};
    return sqw::clique_complex(e, 2);
}

/// Two tetrahedra sharing the triangle (1,2,3), plus a pendant edge.
inline SimplicialComplex double_tetrahedron() {
    const std::vector<Edge> e{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4},
                              {2, 5}, {3, 4}, {3, 5}, {5, 6}};
    return sqw::clique_complex(e, 3);
}

inline std::vector<SimplicialComplex> toy_complexes() {
    return {filled_triangle(), hollow_triangle(), path(), bowtie(), two_disjoint_edges(), double_tetrahedron()};
}

inline std::vector<Edge> karate_edges() { return sqw::read_edge_list(std::filesystem::path(SQW_KARATE_PATH)); }

inline SimplicialComplex karate() { return sqw::clique_complex(karate_edges(), 4); }

/// Members of the instructor's ("Mr. Hi") faction in Zachary's study.
inline const std::set<VertexId>& mr_hi_faction() {
    static const std::set<VertexId> members{1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 12, 13, 14, 17, 18, 20, 22};
    return members;
}

/// Cross-faction edges reported in the first (instructor-side) 1-down community.
inline std::vector<Simplex> fig1_cross_first() {
    return {S({1, 32}), S({2, 31}), S({3, 10}), S({3, 28}), S({3, 29})};
}

/// Cross-faction edges reported in the second (officer-side) 1-down community.
inline std::vector<Simplex> fig1_cross_second() {
    return {S({3, 33}), S({9, 31}), S({9, 33}), S({9, 34}), S({14, 34}), S({20, 34})};
}

/// The two reported 1-down communities: faction-internal edges plus the
/// listed cross edges.
inline std::vector<std::vector<Simplex>> fig1_partition(const SimplicialComplex& k) {
    std::vector<std::vector<Simplex>> out(2);
    const auto& hi = mr_hi_faction();
    const auto first_cross = fig1_cross_first();
    for (const auto& e : k.simplices(1)) {
        const bool a = hi.contains(e[0]), b = hi.contains(e[1]);
        bool first = a && b;
        if (a != b) first = std::find(first_cross.begin(), first_cross.end(), e) != first_cross.end();
        out[first ? 0 : 1].push_back(e);
    }
    return out;
}

inline std::vector<std::vector<Simplex>> table1_dim2() {
    return {
        {S({1, 2, 3}), S({1, 2, 4}), S({1, 2, 8}), S({1, 2, 14}), S({1, 2, 18}), S({1, 2, 20}), S({1, 2, 22}),
         S({1, 3, 4}), S({1, 3, 8}), S({1, 3, 9}), S({1, 3, 14}), S({1, 4, 8}), S({1, 4, 13}), S({1, 4, 14}),
         S({2, 3, 4}), S({2, 3, 8}), S({2, 3, 14}), S({2, 4, 8}), S({2, 4, 14}), S({3, 4, 8}), S({3, 4, 14})},
        {S({3, 9, 33}), S({9, 31, 33}), S({9, 31, 34}), S({9, 33, 34}), S({15, 33, 34}), S({16, 33, 34}),
         S({19, 33, 34}), S({21, 33, 34}), S({23, 33, 34}), S({24, 28, 34}), S({24, 30, 33}), S({24, 30, 34}),
         S({24, 33, 34}), S({27, 30, 34}), S({29, 32, 34}), S({30, 33, 34}), S({31, 33, 34}), S({32, 33, 34})},
        {S({1, 5, 7}), S({1, 5, 11}), S({1, 6, 7}), S({1, 6, 11}), S({6, 7, 17})},
        {S({25, 26, 32})},
    };
}

inline std::vector<std::vector<Simplex>> table1_dim3() {
    return {
        {S({1, 2, 3, 4}), S({1, 2, 3, 8}), S({1, 2, 3, 14}), S({1, 2, 4, 8}), S({1, 2, 4, 14}), S({1, 3, 4, 8}),
         S({1, 3, 4, 14}), S({2, 3, 4, 8}), S({2, 3, 4, 14})},
        {S({9, 31, 33, 34})},
        {S({24, 30, 33, 34})},
    };
}

inline std::vector<std::vector<Simplex>> table1_dim4() {
    return {{S({1, 2, 3, 4, 8}), S({1, 2, 3, 4, 14})}};
}

/// Order-free comparison of two partitions given as simplex lists.
inline std::set<std::set<Simplex>> as_sets(const std::vector<std::vector<Simplex>>& p) {
    std::set<std::set<Simplex>> out;
    for (const auto& c : p) out.emplace(c.begin(), c.end());
    return out;
}

}  // namespace fixtures
