#include "fixtures.hpp"

#include "sqw/complex.hpp"
#include "sqw/edge_list.hpp"
#include "sqw/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

using namespace sqw;
using fixtures::S;

namespace {

// Brute-force clique counts: every vertex subset checked against the raw
// edge set, independent of the forward-neighbour enumeration.
std::map<int, std::size_t> brute_force_clique_counts(const std::vector<Edge>& edges, int max_dim) {
    std::set<VertexId> vs;
    std::set<Edge> es;
    for (auto [a, b] : edges) {
        vs.insert(a);
        vs.insert(b);
        es.insert({std::min(a, b), std::max(a, b)});
    }
    const std::vector<VertexId> v(vs.begin(), vs.end());
    std::map<int, std::size_t> counts;
    std::vector<VertexId> current;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (!current.empty()) ++counts[static_cast<int>(current.size()) - 1];
        if (static_cast<int>(current.size()) == max_dim + 1) return;
        for (std::size_t i = from; i < v.size(); ++i) {
            bool ok = true;
            for (VertexId u : current) ok = ok && es.contains({u, v[i]});
            if (!ok) continue;
            current.push_back(v[i]);
            self(self, i + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);
    return counts;
}

}  // namespace

TEST_CASE("canonical_simplex sorts and rejects repeats") {
    CHECK(S({3, 1, 2}).vertices() == std::vector<VertexId>{1, 2, 3});
    CHECK(S({7}).dim() == 0);
    CHECK_THROWS_AS(S({1, 1, 2}), DegenerateSimplex);
    CHECK_THROWS_AS(canonical_simplex(std::vector<VertexId>{}), InvalidParameter);
    CHECK_THROWS_AS(S({0, 2}), InvalidParameter);
    CHECK(S({1, 2}) < S({1, 3}));
    CHECK(S({1, 3}) < S({2, 3}));
}

TEST_CASE("faces enumerates vertex subsets lexicographically") {
    CHECK(faces(S({1, 2, 3}), 1) == std::vector<Simplex>{S({1, 2}), S({1, 3}), S({2, 3})});
    CHECK(faces(S({1, 2, 3, 4}), 0) == std::vector<Simplex>{S({1}), S({2}), S({3}), S({4})});
    const auto tets = faces(S({1, 2, 3, 4, 8}), 3);
    CHECK(tets.size() == 5);
    CHECK(std::is_sorted(tets.begin(), tets.end()));
    CHECK_THROWS_AS(faces(S({1, 2}), 1), InvalidParameter);
    CHECK_THROWS_AS(faces(S({1, 2}), -1), InvalidParameter);
}

TEST_CASE("clique complex of small graphs") {
    const auto tri = fixtures::filled_triangle();
    CHECK(tri.count(0) == 3);
    CHECK(tri.count(1) == 3);
    CHECK(tri.count(2) == 1);
    CHECK(fixtures::path().count(2) == 0);

    const std::vector<Edge> loop{{1, 1}};
    CHECK_THROWS_AS(clique_complex(loop, 2), InvalidEdge);
    const std::vector<Edge> ok{{1, 2}};
    CHECK_THROWS_AS(clique_complex(ok, 0), InvalidParameter);

    const std::vector<VertexId> lonely{9};
    const auto with_isolated = clique_complex(ok, 2, lonely);
    CHECK(with_isolated.count(0) == 3);
    CHECK(with_isolated.contains(S({9})));
}

TEST_CASE("karate clique complex matches simplex counts and a brute-force oracle") {
    const auto edges = fixtures::karate_edges();
    REQUIRE(edges.size() == 78);
    const auto k = fixtures::karate();
    CHECK(k.max_dim() == 4);
    CHECK(k.count(0) == 34);
    CHECK(k.count(1) == 78);
    CHECK(k.count(2) == 45);
    CHECK(k.count(3) == 11);
    CHECK(k.count(4) == 2);

    const auto oracle = brute_force_clique_counts(edges, 6);
    CHECK(oracle.count(5) == 0);  // no 6-cliques: dimension 4 is the top
    for (int n = 0; n <= 4; ++n) CHECK(k.count(n) == oracle.at(n));
}

TEST_CASE("clique complex is closed under faces and independent of edge order") {
    const auto edges = fixtures::karate_edges();
    const auto reference = clique_complex(edges, 4);
    for (int n = 1; n <= reference.max_dim(); ++n) {
        for (const auto& s : reference.simplices(n)) {
            for (int k = 0; k < n; ++k) {
                for (const auto& f : faces(s, k)) CHECK(reference.contains(f));
            }
        }
    }

    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 5; ++trial) {
        auto shuffled = edges;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        for (auto& e : shuffled) {
            if (rng() % 2) std::swap(e.first, e.second);
        }
        const auto other = clique_complex(shuffled, 4);
        for (int n = 0; n <= 4; ++n) {
            const auto a = reference.simplices(n), b = other.simplices(n);
            CHECK(std::equal(a.begin(), a.end(), b.begin(), b.end()));
        }
    }
}

TEST_CASE("from_simplices adds missing faces") {
    const auto k = SimplicialComplex::from_simplices({S({1, 2, 3}), S({3, 4})});
    CHECK(k.count(0) == 4);
    CHECK(k.count(1) == 4);
    CHECK(k.count(2) == 1);
    CHECK(k.index_of(S({2, 3})) == 2);
    CHECK_THROWS_AS(k.index_of(S({1, 4})), UnknownSimplex);
}

TEST_CASE("boundary matrices") {
    const std::vector<Edge> single{{1, 2}};
    const auto edge = clique_complex(single, 1);
    const Eigen::MatrixXi b1 = boundary_matrix(edge, 1).entries;
    CHECK(b1(0, 0) == -1);
    CHECK(b1(1, 0) == 1);

    const auto tri = fixtures::filled_triangle();
    const Eigen::MatrixXi b2 = boundary_matrix(tri, 2).entries;
    CHECK(b2.rows() == 3);
    // rows (1,2), (1,3), (2,3)
    CHECK(b2(0, 0) == 1);
    CHECK(b2(1, 0) == -1);
    CHECK(b2(2, 0) == 1);

    CHECK_THROWS_AS(boundary_matrix(tri, 0), InvalidParameter);
    CHECK_THROWS_AS(boundary_matrix(tri, 3), InvalidParameter);

    const auto k = fixtures::karate();
    for (int n = 1; n < k.max_dim(); ++n) {
        const auto lo = boundary_matrix(k, n).entries;
        const auto hi = boundary_matrix(k, n + 1).entries;
        const Eigen::MatrixXi product = lo * hi;
        CHECK(product.cwiseAbs().maxCoeff() == 0);
    }
    for (int n = 1; n <= k.max_dim(); ++n) {
        const Eigen::MatrixXi b = boundary_matrix(k, n).entries;
        for (Eigen::Index j = 0; j < b.cols(); ++j) {
            CHECK(b.col(j).cwiseAbs().sum() == n + 1);
            CHECK(b.col(j).sum() == ((n + 1) % 2 == 0 ? 0 : 1));
        }
    }
}

TEST_CASE("boundary of a chain") {
    const auto tri = fixtures::filled_triangle();
    ChainVector c{2, Eigen::VectorXi::Ones(1)};
    const auto edge_chain = boundary(boundary_matrix(tri, 2), c);
    CHECK(edge_chain.n == 1);
    CHECK(edge_chain.coefficients == Eigen::Vector3i(1, -1, 1));
    const auto vertex_chain = boundary(boundary_matrix(tri, 1), edge_chain);
    CHECK(vertex_chain.coefficients.isZero());
    CHECK_THROWS_AS(boundary(boundary_matrix(tri, 1), c), InvalidParameter);
}

TEST_CASE("upper and lower adjacency") {
    const auto tri = fixtures::filled_triangle();
    const Eigen::MatrixXi up = adjacency(tri, 1, Adjacency::upper).entries;
    CHECK(up == (Eigen::Matrix3i() << 0, 1, 1, 1, 0, 1, 1, 1, 0).finished());

    const Eigen::MatrixXi low_path = adjacency(fixtures::path(), 1, Adjacency::lower).entries;
    CHECK(low_path(0, 1) == 1);
    CHECK(low_path(1, 0) == 1);

    const Eigen::MatrixXi bow = adjacency(fixtures::bowtie(), 2, Adjacency::lower).entries;
    CHECK(bow.isZero());

    CHECK(Eigen::MatrixXi(adjacency(fixtures::path(), 1, Adjacency::upper).entries).isZero());
    CHECK_THROWS_AS(adjacency(tri, 0, Adjacency::lower), InvalidParameter);
}

TEST_CASE("adjacency invariants on every fixture") {
    auto complexes = fixtures::toy_complexes();
    complexes.push_back(fixtures::karate());
    for (const auto& k : complexes) {
        for (int n = 1; n <= k.max_dim(); ++n) {
            const Eigen::MatrixXi up = adjacency(k, n, Adjacency::upper).entries;
            const Eigen::MatrixXi low = adjacency(k, n, Adjacency::lower).entries;
            CHECK(up == up.transpose());
            CHECK(low == low.transpose());
            CHECK(up.diagonal().isZero());
            CHECK(low.diagonal().isZero());
            CHECK(up.maxCoeff() <= 1);
            CHECK(low.maxCoeff() <= 1);
            CHECK((up.array() <= low.array()).all());  // upper adjacent implies lower adjacent

            const auto nbrs = lower_neighbourhoods(k, n);
            std::size_t m = 0;
            for (std::size_t i = 0; i < nbrs.size(); ++i) {
                CHECK(static_cast<int>(nbrs[i].size()) == low.row(static_cast<Eigen::Index>(i)).sum());
                m += nbrs[i].size();
            }
            CHECK(m % 2 == 0);
            CHECK(m == lower_arc_count(k, n));
        }
    }
}

TEST_CASE("degrees") {
    const auto tri = fixtures::filled_triangle();
    CHECK(degree(tri, 1, S({1, 2}), Adjacency::upper) == 1);
    CHECK(degree(tri, 2, S({1, 2, 3}), Adjacency::lower) == 3);
    CHECK_THROWS_AS(degree(tri, 1, S({1, 4}), Adjacency::upper), UnknownSimplex);

    // Triangles through edge (1,2): common neighbours of 1 and 2 in the raw graph.
    const auto edges = fixtures::karate_edges();
    std::set<Edge> es(edges.begin(), edges.end());
    int common = 0;
    for (VertexId w = 1; w <= 34; ++w) {
        if (es.contains({std::min<VertexId>(1, w), std::max<VertexId>(1, w)}) &&
            es.contains({std::min<VertexId>(2, w), std::max<VertexId>(2, w)})) {
            ++common;
        }
    }
    const auto k = fixtures::karate();
    CHECK(degree(k, 1, S({1, 2}), Adjacency::upper) == common);
    CHECK(common == 7);
}

TEST_CASE("lower neighbourhoods") {
    const auto tri = fixtures::filled_triangle();
    CHECK(lower_neighbourhood(tri, 1, S({1, 2})) == std::vector<Simplex>{S({1, 3}), S({2, 3})});
    CHECK(lower_neighbourhood(fixtures::path(), 1, S({1, 2})) == std::vector<Simplex>{S({2, 3})});
    CHECK(lower_neighbourhood(fixtures::bowtie(), 2, S({1, 2, 3})).empty());
    CHECK_THROWS_AS(lower_neighbourhood(tri, 1, S({1, 5})), UnknownSimplex);

    // m_1 = sum over vertices of d_v (d_v - 1), from raw graph degrees.
    const auto edges = fixtures::karate_edges();
    std::map<VertexId, std::size_t> deg;
    for (auto [a, b] : edges) {
        ++deg[a];
        ++deg[b];
    }
    std::size_t expected = 0;
    for (auto [v, d] : deg) expected += d * (d - 1);
    const auto k = fixtures::karate();
    CHECK(lower_arc_count(k, 1) == expected);

    // m_2 by pairwise enumeration of triangles sharing exactly two vertices.
    const auto tris = k.simplices(2);
    std::size_t pairs = 0;
    for (const auto& a : tris) {
        for (const auto& b : tris) {
            std::vector<VertexId> shared;
            std::set_intersection(a.vertices().begin(), a.vertices().end(), b.vertices().begin(),
                                  b.vertices().end(), std::back_inserter(shared));
            if (a != b && shared.size() == 2) ++pairs;
        }
    }
    CHECK(lower_arc_count(k, 2) == pairs);
}

TEST_CASE("edge list parsing") {
    std::istringstream good("# comment\n1 2\n\n  2\t3\n3 1\n2 1\n");
    const auto edges = read_edge_list(good);
    CHECK(edges == std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}});

    std::istringstream loop("4 4\n");
    CHECK_THROWS_AS(read_edge_list(loop), InvalidEdge);
    std::istringstream zero("0 4\n");
    CHECK_THROWS_AS(read_edge_list(zero), InvalidEdge);
    std::istringstream junk("1 x\n");
    CHECK_THROWS_AS(read_edge_list(junk), ParseError);
    std::istringstream three("1 2 3\n");
    CHECK_THROWS_AS(read_edge_list(three), ParseError);
    std::istringstream negative("-1 2\n");
    CHECK_THROWS_AS(read_edge_list(negative), ParseError);
    CHECK_THROWS_AS(read_edge_list(std::filesystem::path("/nonexistent/edges.txt")), IoError);
}
