#pragma once

// Discrete-time Fourier-coined quantum walk on the lower adjacency of
// n-simplices.
//
// The Hilbert space has one basis state per ordered lower-adjacent pair
// (an "arc" s_i -> s_j). One step is U = S C: the coin C mixes the arcs
// leaving each simplex with a Fourier matrix, and the shift S sends every
// arc to its reverse.

#include "sqw/complex.hpp"

#include <Eigen/Core>

#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace sqw {

using QuantumState = Eigen::VectorXcd;

/// Enumeration of the arcs inside each coin block (the alpha/beta labels of
/// the Fourier matrix). Different enumerations give different walks.
enum class CoinOrdering {
    /// Neighbours grouped by the shared (n-1)-face, faces in lexicographic
    /// order, canonical simplex order within a face.
    face_grouped,
    /// Neighbours in canonical simplex order.
    canonical,
};

struct Arc {
    std::size_t source = 0;
    std::size_t target = 0;
};

class WalkSpace {
public:
    /// Throws InvalidParameter for n < 1.
    static WalkSpace build(const SimplicialComplex& complex, int n,
                           CoinOrdering ordering = CoinOrdering::face_grouped);

    int dim() const noexcept { return dim_; }
    CoinOrdering ordering() const noexcept { return ordering_; }

    /// m_n, the dimension of the Hilbert space.
    std::size_t arc_count() const noexcept { return arcs_.size(); }
    std::span<const Arc> arcs() const noexcept { return arcs_; }

    std::size_t simplex_count() const noexcept { return simplices_.size(); }
    std::span<const Simplex> simplices() const noexcept { return simplices_; }
    const Simplex& simplex(std::size_t i) const { return simplices_.at(i); }

    /// Throws UnknownSimplex.
    std::size_t simplex_index(const Simplex& s) const;

    /// |N^l(s_i)|.
    std::size_t degree(std::size_t i) const { return offsets_.at(i + 1) - offsets_.at(i); }
    std::size_t first_arc(std::size_t i) const { return offsets_.at(i); }
    std::span<const Arc> arcs_from(std::size_t i) const;

    std::optional<std::size_t> arc_index(std::size_t source, std::size_t target) const;
    std::size_t reverse(std::size_t arc) const { return reverse_.at(arc); }

    /// Simplices with at least one lower neighbour, in canonical order.
    std::span<const std::size_t> active() const noexcept { return active_; }
    /// Simplices without lower neighbours; they carry no basis states.
    std::span<const std::size_t> isolated() const noexcept { return isolated_; }
    bool is_isolated(std::size_t i) const { return degree(i) == 0; }

private:
    int dim_ = 0;
    CoinOrdering ordering_ = CoinOrdering::face_grouped;
    std::vector<Simplex> simplices_;
    std::vector<Arc> arcs_;
    std::vector<std::size_t> offsets_;
    std::vector<std::size_t> reverse_;
    std::vector<std::size_t> active_;
    std::vector<std::size_t> isolated_;
};

/// d x d Fourier matrix with entries exp(2 pi i a b / d) / sqrt(d).
Eigen::MatrixXcd fourier_matrix(std::size_t d);

/**
 * The step operator U = S C, applied sparsely: the coin as a block
 * multiply, the shift as a permutation.
 */
class UnitaryWalk {
public:
    explicit UnitaryWalk(WalkSpace space);

    const WalkSpace& space() const noexcept { return space_; }
    std::size_t dimension() const noexcept { return space_.arc_count(); }

    /// out = U in. `out` is resized; it must not alias `in`.
    void step(const QuantumState& in, QuantumState& out) const;
    QuantumState apply(const QuantumState& in) const;

    void apply_coin(const QuantumState& in, QuantumState& out) const;
    void apply_shift(const QuantumState& in, QuantumState& out) const;

    const Eigen::MatrixXcd& coin_block(std::size_t degree) const;

    Eigen::MatrixXcd coin_matrix() const;
    Eigen::MatrixXcd shift_matrix() const;
    /// Dense U; used by the spectral estimator and by tests.
    Eigen::MatrixXcd matrix() const;

private:
    WalkSpace space_;
    std::map<std::size_t, Eigen::MatrixXcd> blocks_;
};

Eigen::MatrixXcd coin_operator(const WalkSpace& space);
Eigen::MatrixXcd shift_operator(const WalkSpace& space);
UnitaryWalk step_operator(WalkSpace space);

QuantumState basis_state(const WalkSpace& space, std::size_t arc);

/// U^t applied to `state` (t = 0 returns the state unchanged).
QuantumState evolve(const UnitaryWalk& walk, QuantumState state, std::size_t t);

// ---------------------------------------------------------------------------
// Transition probabilities

/**
 * Normalized transition probability
 *   p(x -> y; t) = 1/(|N^l(x)| |N^l(y)|) sum_{w, v} |<y->w| U^t |x->v>|^2.
 * Throws IsolatedSimplex if either simplex has no lower neighbours.
 */
double transition_probability(const UnitaryWalk& walk, std::size_t source, std::size_t target,
                              std::size_t t);

/// p(source -> y; t) for every simplex y; isolated targets get 0.
std::vector<double> transition_probabilities(const UnitaryWalk& walk, std::size_t source,
                                             std::size_t t);

enum class Estimator { finite, spectral };

/// Time-averaged transition probabilities from one source to every active target.
struct TransitionTable {
    std::size_t source = 0;
    Estimator estimator = Estimator::finite;
    std::size_t time_steps = 0;          // 0 for the spectral estimator
    std::vector<std::size_t> targets;    // active simplices, canonical order
    std::vector<double> values;          // parallel to `targets`

    /// Throws IsolatedSimplex when `target` is not an active simplex.
    double at(std::size_t target) const;
};

/// q~_T(x -> y) = (1/T) sum_{t=1..T} p(x -> y; t). One evolution per arc of x.
TransitionTable finite_time_average(const UnitaryWalk& walk, std::size_t source, std::size_t T,
                                    unsigned threads = 1);

inline constexpr double kDefaultPhaseTolerance = 1e-8;

/// U = sum_k e^{i theta_k} |Phi_k><Phi_k| with phases grouped into
/// (numerically) degenerate eigenspaces.
struct UnitarySpectrum {
    std::vector<double> phases;                   // theta_k in [0, 2 pi)
    Eigen::MatrixXcd eigenvectors;                // orthonormal columns Phi_k
    std::vector<std::vector<std::size_t>> groups; // indices sharing one phase
    double residual = 0.0;                        // max |U Phi - Phi e^{i theta}|
};

/// Spectral decomposition from the complex Schur form. Throws NumericalError
/// when the residual exceeds 1e-8.
UnitarySpectrum spectral_decomposition(const UnitaryWalk& walk,
                                       double phase_tolerance = kDefaultPhaseTolerance);

/**
 * Long-time average q(x -> y) from the eigenspace projectors P_g:
 *   q = 1/(|N^l(x)| |N^l(y)|) sum_{w, v} sum_g |<y->w| P_g |x->v>|^2.
 * With all phases distinct this is the sum over single eigenvectors.
 */
TransitionTable long_time_average(const UnitaryWalk& walk, const UnitarySpectrum& spectrum,
                                  std::size_t source);

/// sum_g |<y| P_g |x>|^2 with |x> = (1/|N^l(x)|) sum_v |x->v> (not normalized).
/// Bounded above by q(x -> y).
double amplitude_lower_bound(const UnitaryWalk& walk, const UnitarySpectrum& spectrum,
                             std::size_t source, std::size_t target);

}  // namespace sqw
