#pragma once

// Simplicial communities: exact up/down connectivity, the up/down symmetry,
// simplicial modularity and quantum-walk community detection.

#include "sqw/complex.hpp"
#include "sqw/qwalk.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <vector>

namespace sqw {

/// Disjoint, exhaustive assignment of the n-simplices to communities.
/// Members are simplex indices in canonical order.
struct CommunityPartition {
    int n = 0;
    std::vector<std::vector<std::size_t>> communities;
    std::vector<std::size_t> labels;  // simplex index -> community index

    /// Validates disjointness, coverage of [0, simplex_count) and non-empty
    /// communities; throws InvalidParameter otherwise.
    static CommunityPartition from_communities(int n, std::size_t simplex_count,
                                               std::vector<std::vector<std::size_t>> communities);

    std::size_t size() const noexcept { return communities.size(); }
};

/// Looks up each simplex in `complex` (throws UnknownSimplex) and builds a
/// validated partition.
CommunityPartition partition_from_simplices(const SimplicialComplex& complex, int n,
                                            const std::vector<std::vector<Simplex>>& communities);

/// W: N_n x (number of communities), one 1 per row.
Eigen::MatrixXi membership_matrix(const CommunityPartition& partition);

/// Connected components of lower adjacency (n >= 1), in order of first member.
CommunityPartition exact_down_communities(const SimplicialComplex& complex, int n);

/// Connected components of upper adjacency (n >= 0), in order of first member.
CommunityPartition exact_up_communities(const SimplicialComplex& complex, int n);

struct SymmetryReport {
    bool holds = false;
    CommunityPartition down;  // (n+1)-down communities
    CommunityPartition up;    // n-up communities, including isolated ones
    /// mapping[i]: index into `up.communities` of the image of down community i.
    std::vector<std::size_t> mapping;
};

/**
 * Checks that sending each (n+1)-down community to the set of n-faces of its
 * members is a bijection onto the n-up communities with more than one member.
 */
SymmetryReport verify_symmetry(const SimplicialComplex& complex, int n);

struct ModularityReport {
    double q = 0.0;
    std::size_t m = 0;
    std::vector<double> contributions;  // one per community, summing to q
};

/// Q_n = (1/m_n) Tr(W^T M_n W) with M_n = A^l_n - k k^T / m_n, k_i = |N^l(s_i)|.
/// Throws NoAdjacency when m_n = 0.
ModularityReport simplicial_modularity(const SimplicialComplex& complex, int n,
                                       const CommunityPartition& partition);

enum class Threshold {
    strict,    // q > 1/m_n
    at_least,  // q >= 1/m_n
};

/// Absolute band around 1/m_n inside which q counts as a tie.
inline constexpr double kThresholdTieTolerance = 1e-12;

struct DetectionOptions {
    Estimator estimator = Estimator::finite;
    std::size_t time_steps = 100;
    Threshold threshold = Threshold::at_least;
    CoinOrdering ordering = CoinOrdering::face_grouped;
    unsigned threads = 1;
    double phase_tolerance = kDefaultPhaseTolerance;
};

/**
 * Greedy quantum-walk detection. Each round starts from the unassigned
 * simplex with the most lower neighbours (ties: canonical order), and
 * assigns to its community every unassigned simplex y with q(x -> y) above
 * 1/m_n. Simplices without lower neighbours become singletons.
 */
CommunityPartition detect_communities(const SimplicialComplex& complex, int n,
                                      const DetectionOptions& options = {});

}  // namespace sqw
