#pragma once

// Simplicial complexes with a canonical (ascending-vertex) orientation,
// clique-complex construction and the integer incidence / adjacency
// matrices derived from them.

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sqw {

/// 1-indexed vertex label.
using VertexId = std::uint32_t;

using Edge = std::pair<VertexId, VertexId>;

/**
 * An oriented simplex. The vertex list is always strictly ascending; that
 * ordering is the orientation used by every boundary matrix in the library.
 */
class Simplex {
public:
    Simplex() = default;

    const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
    int dim() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
    std::size_t size() const noexcept { return vertices_.size(); }
    VertexId operator[](std::size_t i) const { return vertices_[i]; }

    /// The face obtained by dropping the vertex at position k.
    Simplex without(std::size_t k) const;

    /// True when every vertex of `face` is a vertex of this simplex.
    bool contains(const Simplex& face) const;

    /// "(1,2,3)"
    std::string to_string() const;

    friend auto operator<=>(const Simplex&, const Simplex&) = default;
    friend bool operator==(const Simplex&, const Simplex&) = default;

private:
    friend Simplex canonical_simplex(std::span<const VertexId>);
    explicit Simplex(std::vector<VertexId> sorted) : vertices_(std::move(sorted)) {}

    std::vector<VertexId> vertices_;
};

/// Sorts the vertices. Throws DegenerateSimplex on repeats and
/// InvalidParameter on an empty sequence or a zero vertex id.
Simplex canonical_simplex(std::span<const VertexId> vertices);
Simplex canonical_simplex(std::initializer_list<VertexId> vertices);

/// All k-dimensional faces of `s` in lexicographic order; requires 0 <= k < dim(s).
std::vector<Simplex> faces(const Simplex& s, int k);

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept;
};

/**
 * Immutable simplicial complex. Simplices of each dimension are stored in
 * lexicographic order; the position in that list is the simplex's index in
 * every matrix built from the complex.
 */
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Builds the smallest complex containing `simplices` (adds all faces).
    static SimplicialComplex from_simplices(std::vector<Simplex> simplices);

    /// Highest dimension with at least one simplex; -1 for the empty complex.
    int max_dim() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }

    /// N_n; zero for dimensions outside [0, max_dim].
    std::size_t count(int n) const noexcept;

    std::span<const Simplex> simplices(int n) const noexcept;

    std::optional<std::size_t> find(const Simplex& s) const;
    bool contains(const Simplex& s) const { return find(s).has_value(); }

    /// Position of `s` within dimension dim(s); throws UnknownSimplex.
    std::size_t index_of(const Simplex& s) const;

private:
    std::vector<std::vector<Simplex>> by_dim_;
    std::unordered_map<Simplex, std::size_t, SimplexHash> index_;
};

/**
 * Clique complex of the graph given by `edges`: every clique with at most
 * max_dim + 1 vertices becomes a simplex. Vertices listed in `extra_vertices`
 * are kept as 0-simplices even when no edge touches them.
 *
 * Throws InvalidEdge on self-loops or zero ids, InvalidParameter when max_dim < 1.
 */
SimplicialComplex clique_complex(std::span<const Edge> edges, int max_dim,
                                 std::span<const VertexId> extra_vertices = {});

enum class Adjacency { upper, lower };

/// B_n: signed N_{n-1} x N_n integer matrix of the boundary operator.
struct IncidenceMatrix {
    int n = 0;
    Eigen::SparseMatrix<int> entries;
};

/// Symmetric 0/1 matrix over the n-simplices.
struct AdjacencyMatrix {
    int n = 0;
    Adjacency flavor = Adjacency::upper;
    Eigen::SparseMatrix<int> entries;
};

/// Integer chain over the canonical n-simplex basis.
struct ChainVector {
    int n = 0;
    Eigen::VectorXi coefficients;
};

/// Throws InvalidParameter unless 1 <= n <= max_dim.
IncidenceMatrix boundary_matrix(const SimplicialComplex& complex, int n);

/// Applies B_n to a chain of dimension n.
ChainVector boundary(const IncidenceMatrix& b, const ChainVector& chain);

/// Upper adjacency is defined for n >= 0 (all zero when dimension n+1 is
/// empty). Lower adjacency requires n >= 1.
AdjacencyMatrix adjacency(const SimplicialComplex& complex, int n, Adjacency flavor);

/// Upper: number of (n+1)-cofaces. Lower: number of (n-1)-faces, n+1.
int degree(const SimplicialComplex& complex, int n, const Simplex& s, Adjacency flavor);

/// For each n-simplex, the indices of the (n+1)-simplices containing it (ascending).
std::vector<std::vector<std::size_t>> coface_indices(const SimplicialComplex& complex, int n);

/// One lower neighbour of an n-simplex and the (n-1)-face the two share.
struct LowerNeighbour {
    std::size_t simplex = 0;
    std::size_t shared_face = 0;
};

/**
 * Lower neighbourhoods N^l of every n-simplex (n >= 1), as indices sorted in
 * canonical simplex order. Two distinct n-simplices share at most one
 * (n-1)-face, so the shared face is unique.
 */
std::vector<std::vector<LowerNeighbour>> lower_neighbourhoods(const SimplicialComplex& complex,
                                                              int n);

/// N^l(s) as simplices in canonical order; throws UnknownSimplex.
std::vector<Simplex> lower_neighbourhood(const SimplicialComplex& complex, int n, const Simplex& s);

/// m_n = sum over n-simplices of |N^l|.
std::size_t lower_arc_count(const SimplicialComplex& complex, int n);

}  // namespace sqw
