#include "sqw/complex.hpp"

#include "sqw/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sqw {

// ---------------------------------------------------------------------------
// Simplex

Simplex Simplex::without(std::size_t k) const {
    std::vector<VertexId> rest;
    rest.reserve(vertices_.size() - 1);
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (i != k) rest.push_back(vertices_[i]);
    }
    return Simplex(std::move(rest));
}

bool Simplex::contains(const Simplex& face) const {
    return std::includes(vertices_.begin(), vertices_.end(), face.vertices_.begin(),
                         face.vertices_.end());
}

std::string Simplex::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(vertices_[i]);
    }
    out += ')';
    return out;
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
    std::size_t h = s.size();
    for (VertexId v : s.vertices()) {
        h ^= std::hash<VertexId>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

Simplex canonical_simplex(std::span<const VertexId> vertices) {
    if (vertices.empty()) throw InvalidParameter("a simplex needs at least one vertex");
    std::vector<VertexId> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() == 0) throw InvalidParameter("vertex ids are 1-indexed");
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw DegenerateSimplex("repeated vertex in simplex");
    }
    return Simplex(std::move(sorted));
}

Simplex canonical_simplex(std::initializer_list<VertexId> vertices) {
    return canonical_simplex(std::span<const VertexId>(vertices.begin(), vertices.size()));
}

std::vector<Simplex> faces(const Simplex& s, int k) {
    if (k < 0 || k >= s.dim()) {
        throw InvalidParameter("face dimension " + std::to_string(k) + " out of range for " +
                               s.to_string());
    }
    // Lexicographic enumeration of (k+1)-subsets by position.
    const std::size_t n = s.size();
    const std::size_t r = static_cast<std::size_t>(k) + 1;
    std::vector<std::size_t> pick(r);
    for (std::size_t i = 0; i < r; ++i) pick[i] = i;

    std::vector<Simplex> out;
    while (true) {
        std::vector<VertexId> verts(r);
        for (std::size_t i = 0; i < r; ++i) verts[i] = s[pick[i]];
        out.push_back(canonical_simplex(verts));

        std::size_t i = r;
        while (i > 0 && pick[i - 1] == n - r + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

// ---------------------------------------------------------------------------
// SimplicialComplex

SimplicialComplex SimplicialComplex::from_simplices(std::vector<Simplex> simplices) {
    std::set<Simplex> closed;
    for (auto& s : simplices) {
        if (s.size() == 0) continue;
        if (!closed.insert(s).second) continue;
        for (int k = 0; k < s.dim(); ++k) {
            for (auto& f : faces(s, k)) closed.insert(std::move(f));
        }
    }

    SimplicialComplex out;
    for (const auto& s : closed) {
        const auto d = static_cast<std::size_t>(s.dim());
        if (out.by_dim_.size() <= d) out.by_dim_.resize(d + 1);
        out.by_dim_[d].push_back(s);
    }
    // std::set already yields lexicographic order within each dimension.
    for (const auto& layer : out.by_dim_) {
        for (std::size_t i = 0; i < layer.size(); ++i) out.index_.emplace(layer[i], i);
    }
    return out;
}

std::size_t SimplicialComplex::count(int n) const noexcept {
    if (n < 0 || n > max_dim()) return 0;
    return by_dim_[static_cast<std::size_t>(n)].size();
}

std::span<const Simplex> SimplicialComplex::simplices(int n) const noexcept {
    if (n < 0 || n > max_dim()) return {};
    return by_dim_[static_cast<std::size_t>(n)];
}

std::optional<std::size_t> SimplicialComplex::find(const Simplex& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t SimplicialComplex::index_of(const Simplex& s) const {
    if (auto i = find(s)) return *i;
    throw UnknownSimplex(s.to_string() + " is not in the complex");
}

// ---------------------------------------------------------------------------
// Clique complex

SimplicialComplex clique_complex(std::span<const Edge> edges, int max_dim,
                                 std::span<const VertexId> extra_vertices) {
    if (max_dim < 1) throw InvalidParameter("max_dim must be at least 1");

    // Forward adjacency: each vertex keeps only its larger neighbours, so
    // every clique is generated exactly once, in ascending vertex order.
    std::map<VertexId, std::vector<VertexId>> forward;
    for (auto [a, b] : edges) {
        if (a == 0 || b == 0) throw InvalidEdge("vertex ids are 1-indexed");
        if (a == b) throw InvalidEdge("self-loop on vertex " + std::to_string(a));
        const VertexId lo = std::min(a, b), hi = std::max(a, b);
        forward[lo].push_back(hi);
        forward.try_emplace(hi);
    }
    for (VertexId v : extra_vertices) {
        if (v == 0) throw InvalidEdge("vertex ids are 1-indexed");
        forward.try_emplace(v);
    }
    for (auto& [v, nbrs] : forward) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }

    const std::size_t max_size = static_cast<std::size_t>(max_dim) + 1;
    std::vector<Simplex> cliques;
    std::vector<VertexId> current;

    // Depth-first extension by common forward neighbours, cut at max_size.
    auto extend = [&](auto&& self, const std::vector<VertexId>& candidates) -> void {
        cliques.push_back(canonical_simplex(current));
        if (current.size() == max_size) return;
        for (VertexId v : candidates) {
            const auto& fv = forward[v];
            std::vector<VertexId> next;
            std::set_intersection(candidates.begin(), candidates.end(), fv.begin(), fv.end(),
                                  std::back_inserter(next));
            current.push_back(v);
            self(self, next);
            current.pop_back();
        }
    };
    for (const auto& [v, nbrs] : forward) {
        current.assign(1, v);
        extend(extend, nbrs);
    }
    return SimplicialComplex::from_simplices(std::move(cliques));
}

// ---------------------------------------------------------------------------
// Matrices

IncidenceMatrix boundary_matrix(const SimplicialComplex& complex, int n) {
    if (n < 1 || n > complex.max_dim()) {
        throw InvalidParameter("boundary dimension " + std::to_string(n) + " outside [1, " +
                               std::to_string(complex.max_dim()) + "]");
    }
    const auto cols = complex.simplices(n);
    std::vector<Eigen::Triplet<int>> trips;
    trips.reserve(cols.size() * static_cast<std::size_t>(n + 1));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        for (std::size_t k = 0; k < cols[j].size(); ++k) {
            const auto row = complex.index_of(cols[j].without(k));
            trips.emplace_back(static_cast<int>(row), static_cast<int>(j), k % 2 == 0 ? 1 : -1);
        }
    }
    IncidenceMatrix b;
    b.n = n;
    b.entries.resize(static_cast<Eigen::Index>(complex.count(n - 1)),
                     static_cast<Eigen::Index>(cols.size()));
    b.entries.setFromTriplets(trips.begin(), trips.end());
    return b;
}

ChainVector boundary(const IncidenceMatrix& b, const ChainVector& chain) {
    if (chain.n != b.n || chain.coefficients.size() != b.entries.cols()) {
        throw InvalidParameter("chain does not match boundary matrix dimension");
    }
    return ChainVector{b.n - 1, b.entries * chain.coefficients};
}

std::vector<std::vector<std::size_t>> coface_indices(const SimplicialComplex& complex, int n) {
    std::vector<std::vector<std::size_t>> out(complex.count(n));
    const auto upper = complex.simplices(n + 1);
    for (std::size_t j = 0; j < upper.size(); ++j) {
        for (std::size_t k = 0; k < upper[j].size(); ++k) {
            out[complex.index_of(upper[j].without(k))].push_back(j);
        }
    }
    return out;  // ascending, since j increases monotonically
}

std::vector<std::vector<LowerNeighbour>> lower_neighbourhoods(const SimplicialComplex& complex,
                                                              int n) {
    if (n < 1) throw InvalidParameter("lower adjacency needs n >= 1");
    const auto layer = complex.simplices(n);
    const auto cofaces = coface_indices(complex, n - 1);

    std::vector<std::vector<LowerNeighbour>> out(layer.size());
    for (std::size_t i = 0; i < layer.size(); ++i) {
        for (std::size_t k = 0; k < layer[i].size(); ++k) {
            const auto face = complex.index_of(layer[i].without(k));
            for (std::size_t other : cofaces[face]) {
                if (other != i) out[i].push_back({other, face});
            }
        }
        std::sort(out[i].begin(), out[i].end(),
                  [](const LowerNeighbour& a, const LowerNeighbour& b) { return a.simplex < b.simplex; });
    }
    return out;
}

std::vector<Simplex> lower_neighbourhood(const SimplicialComplex& complex, int n, const Simplex& s) {
    if (n < 1) throw InvalidParameter("lower adjacency needs n >= 1");
    if (s.dim() != n) throw UnknownSimplex(s.to_string() + " is not an " + std::to_string(n) + "-simplex");
    const auto i = complex.index_of(s);
    const auto layer = complex.simplices(n);
    const auto nbrs = lower_neighbourhoods(complex, n);
    std::vector<Simplex> out;
    for (const auto& nb : nbrs[i]) out.push_back(layer[nb.simplex]);
    return out;
}

std::size_t lower_arc_count(const SimplicialComplex& complex, int n) {
    std::size_t m = 0;
    for (const auto& nbrs : lower_neighbourhoods(complex, n)) m += nbrs.size();
    return m;
}

AdjacencyMatrix adjacency(const SimplicialComplex& complex, int n, Adjacency flavor) {
    if (n < 0 || (flavor == Adjacency::lower && n < 1)) {
        throw InvalidParameter("invalid dimension for this adjacency flavor");
    }
    const auto size = static_cast<Eigen::Index>(complex.count(n));
    std::vector<Eigen::Triplet<int>> trips;

    if (flavor == Adjacency::lower) {
        const auto nbrs = lower_neighbourhoods(complex, n);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            for (const auto& nb : nbrs[i]) {
                trips.emplace_back(static_cast<int>(i), static_cast<int>(nb.simplex), 1);
            }
        }
    } else {
        // Pairs of n-faces of each (n+1)-simplex. A pair of distinct n-simplices
        // spans n+2 vertices, so it has at most one common coface.
        for (const auto& top : complex.simplices(n + 1)) {
            std::vector<std::size_t> members;
            for (std::size_t k = 0; k < top.size(); ++k) members.push_back(complex.index_of(top.without(k)));
            for (auto a : members) {
                for (auto b : members) {
                    if (a != b) trips.emplace_back(static_cast<int>(a), static_cast<int>(b), 1);
                }
            }
        }
    }

    AdjacencyMatrix adj;
    adj.n = n;
    adj.flavor = flavor;
    adj.entries.resize(size, size);
    adj.entries.setFromTriplets(trips.begin(), trips.end());
    return adj;
}

int degree(const SimplicialComplex& complex, int n, const Simplex& s, Adjacency flavor) {
    if (s.dim() != n || !complex.contains(s)) {
        throw UnknownSimplex(s.to_string() + " is not an " + std::to_string(n) + "-simplex of the complex");
    }
    if (flavor == Adjacency::lower) {
        if (n < 1) throw InvalidParameter("lower degree needs n >= 1");
        return n + 1;
    }
    int count = 0;
    for (const auto& top : complex.simplices(n + 1)) {
        if (top.contains(s)) ++count;
    }
    return count;
}

}  // namespace sqw
