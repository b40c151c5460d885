#include "sqw/qwalk.hpp"

#include "sqw/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

namespace sqw {

// ---------------------------------------------------------------------------
// WalkSpace

WalkSpace WalkSpace::build(const SimplicialComplex& complex, int n, CoinOrdering ordering) {
    if (n < 1) throw InvalidParameter("the walk is defined on n-simplices with n >= 1");

    WalkSpace ws;
    ws.dim_ = n;
    ws.ordering_ = ordering;
    const auto layer = complex.simplices(n);
    ws.simplices_.assign(layer.begin(), layer.end());

    auto nbrs = lower_neighbourhoods(complex, n);
    ws.offsets_.assign(1, 0);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        auto& local = nbrs[i];
        if (ordering == CoinOrdering::face_grouped) {
            std::stable_sort(local.begin(), local.end(), [](const LowerNeighbour& a, const LowerNeighbour& b) {
                return a.shared_face < b.shared_face;
            });
        }
        for (const auto& nb : local) ws.arcs_.push_back({i, nb.simplex});
        ws.offsets_.push_back(ws.arcs_.size());
        (local.empty() ? ws.isolated_ : ws.active_).push_back(i);
    }

    ws.reverse_.resize(ws.arcs_.size());
    for (std::size_t a = 0; a < ws.arcs_.size(); ++a) {
        const auto back = ws.arc_index(ws.arcs_[a].target, ws.arcs_[a].source);
        if (!back) throw NumericalError("lower adjacency is not symmetric");
        ws.reverse_[a] = *back;
    }
    return ws;
}

std::size_t WalkSpace::simplex_index(const Simplex& s) const {
    auto it = std::lower_bound(simplices_.begin(), simplices_.end(), s);
    if (it == simplices_.end() || *it != s) {
        throw UnknownSimplex(s.to_string() + " is not an " + std::to_string(dim_) + "-simplex of the complex");
    }
    return static_cast<std::size_t>(it - simplices_.begin());
}

std::span<const Arc> WalkSpace::arcs_from(std::size_t i) const {
    return std::span<const Arc>(arcs_).subspan(offsets_.at(i), degree(i));
}

std::optional<std::size_t> WalkSpace::arc_index(std::size_t source, std::size_t target) const {
    if (source >= simplices_.size()) return std::nullopt;
    for (std::size_t a = offsets_[source]; a < offsets_[source + 1]; ++a) {
        if (arcs_[a].target == target) return a;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Operators

Eigen::MatrixXcd fourier_matrix(std::size_t d) {
    Eigen::MatrixXcd f(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t b = 0; b < d; ++b) {
        for (std::size_t a = 0; a < d; ++a) {
            // Exact angle per entry; (a*b) mod d keeps the argument small.
            const double angle = 2.0 * std::numbers::pi * static_cast<double>((a * b) % d) / static_cast<double>(d);
            f(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(a)) = std::polar(scale, angle);
        }
    }
    return f;
}

UnitaryWalk::UnitaryWalk(WalkSpace space) : space_(std::move(space)) {
    for (std::size_t i : space_.active()) {
        const auto d = space_.degree(i);
        if (!blocks_.contains(d)) blocks_.emplace(d, fourier_matrix(d));
    }
}

const Eigen::MatrixXcd& UnitaryWalk::coin_block(std::size_t degree) const {
    auto it = blocks_.find(degree);
    if (it == blocks_.end()) throw InvalidParameter("no coin block of size " + std::to_string(degree));
    return it->second;
}

void UnitaryWalk::apply_coin(const QuantumState& in, QuantumState& out) const {
    out.resize(in.size());
    for (std::size_t i : space_.active()) {
        const auto first = static_cast<Eigen::Index>(space_.first_arc(i));
        const auto d = static_cast<Eigen::Index>(space_.degree(i));
        if (d == 1) {
            out[first] = in[first];
        } else {
            out.segment(first, d).noalias() = coin_block(static_cast<std::size_t>(d)) * in.segment(first, d);
        }
    }
}

void UnitaryWalk::apply_shift(const QuantumState& in, QuantumState& out) const {
    out.resize(in.size());
    for (std::size_t a = 0; a < space_.arc_count(); ++a) {
        out[static_cast<Eigen::Index>(space_.reverse(a))] = in[static_cast<Eigen::Index>(a)];
    }
}

void UnitaryWalk::step(const QuantumState& in, QuantumState& out) const {
    if (static_cast<std::size_t>(in.size()) != dimension()) {
        throw InvalidParameter("state length does not match the walk space");
    }
    out.resize(in.size());
    for (std::size_t i : space_.active()) {
        const auto first = space_.first_arc(i);
        const auto d = space_.degree(i);
        if (d == 1) {
            out[static_cast<Eigen::Index>(space_.reverse(first))] = in[static_cast<Eigen::Index>(first)];
            continue;
        }
        const Eigen::VectorXcd mixed =
            coin_block(d) * in.segment(static_cast<Eigen::Index>(first), static_cast<Eigen::Index>(d));
        for (std::size_t k = 0; k < d; ++k) {
            out[static_cast<Eigen::Index>(space_.reverse(first + k))] = mixed[static_cast<Eigen::Index>(k)];
        }
    }
}

QuantumState UnitaryWalk::apply(const QuantumState& in) const {
    QuantumState out;
    step(in, out);
    return out;
}

Eigen::MatrixXcd UnitaryWalk::coin_matrix() const {
    const auto m = static_cast<Eigen::Index>(dimension());
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(m, m);
    for (std::size_t i : space_.active()) {
        const auto first = static_cast<Eigen::Index>(space_.first_arc(i));
        const auto d = static_cast<Eigen::Index>(space_.degree(i));
        c.block(first, first, d, d) = coin_block(static_cast<std::size_t>(d));
    }
    return c;
}

Eigen::MatrixXcd UnitaryWalk::shift_matrix() const {
    const auto m = static_cast<Eigen::Index>(dimension());
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(m, m);
    for (std::size_t a = 0; a < dimension(); ++a) {
        s(static_cast<Eigen::Index>(space_.reverse(a)), static_cast<Eigen::Index>(a)) = 1.0;
    }
    return s;
}

Eigen::MatrixXcd UnitaryWalk::matrix() const {
    // S is a permutation, so S C is C with its rows permuted.
    const Eigen::MatrixXcd c = coin_matrix();
    Eigen::MatrixXcd u(c.rows(), c.cols());
    for (std::size_t a = 0; a < dimension(); ++a) {
        u.row(static_cast<Eigen::Index>(space_.reverse(a))) = c.row(static_cast<Eigen::Index>(a));
    }
    return u;
}

Eigen::MatrixXcd coin_operator(const WalkSpace& space) { return UnitaryWalk(space).coin_matrix(); }
Eigen::MatrixXcd shift_operator(const WalkSpace& space) { return UnitaryWalk(space).shift_matrix(); }
UnitaryWalk step_operator(WalkSpace space) { return UnitaryWalk(std::move(space)); }

QuantumState basis_state(const WalkSpace& space, std::size_t arc) {
    if (arc >= space.arc_count()) throw InvalidParameter("arc index out of range");
    QuantumState psi = QuantumState::Zero(static_cast<Eigen::Index>(space.arc_count()));
    psi[static_cast<Eigen::Index>(arc)] = 1.0;
    return psi;
}

QuantumState evolve(const UnitaryWalk& walk, QuantumState state, std::size_t t) {
    QuantumState next;
    for (std::size_t s = 0; s < t; ++s) {
        walk.step(state, next);
        state.swap(next);
    }
    return state;
}

// ---------------------------------------------------------------------------
// Estimators

namespace {

void require_active(const WalkSpace& space, std::size_t i) {
    if (i >= space.simplex_count()) throw InvalidParameter("simplex index out of range");
    if (space.is_isolated(i)) {
        throw IsolatedSimplex(space.simplex(i).to_string() + " has no lower-adjacent simplices");
    }
}

/// Per-simplex sums of an arc-indexed weight vector, divided by |N^l|.
std::vector<double> per_simplex(const WalkSpace& space, const Eigen::VectorXd& arc_weight, double scale) {
    std::vector<double> out(space.simplex_count(), 0.0);
    for (std::size_t y : space.active()) {
        const auto first = static_cast<Eigen::Index>(space.first_arc(y));
        const auto d = static_cast<Eigen::Index>(space.degree(y));
        out[y] = arc_weight.segment(first, d).sum() * scale / static_cast<double>(d);
    }
    return out;
}

TransitionTable make_table(const WalkSpace& space, std::size_t source, Estimator est, std::size_t T,
                           const std::vector<double>& values) {
    TransitionTable table;
    table.source = source;
    table.estimator = est;
    table.time_steps = T;
    for (std::size_t y : space.active()) {
        table.targets.push_back(y);
        table.values.push_back(values[y]);
    }
    return table;
}

}  // namespace

double TransitionTable::at(std::size_t target) const {
    auto it = std::lower_bound(targets.begin(), targets.end(), target);
    if (it == targets.end() || *it != target) {
        throw IsolatedSimplex("no transition probability for an isolated or unknown target");
    }
    return values[static_cast<std::size_t>(it - targets.begin())];
}

std::vector<double> transition_probabilities(const UnitaryWalk& walk, std::size_t source, std::size_t t) {
    const auto& space = walk.space();
    require_active(space, source);
    Eigen::VectorXd mass = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(space.arc_count()));
    for (std::size_t k = 0; k < space.degree(source); ++k) {
        mass += evolve(walk, basis_state(space, space.first_arc(source) + k), t).cwiseAbs2();
    }
    return per_simplex(space, mass, 1.0 / static_cast<double>(space.degree(source)));
}

double transition_probability(const UnitaryWalk& walk, std::size_t source, std::size_t target, std::size_t t) {
    require_active(walk.space(), target);
    return transition_probabilities(walk, source, t)[target];
}

TransitionTable finite_time_average(const UnitaryWalk& walk, std::size_t source, std::size_t T,
                                    unsigned threads) {
    const auto& space = walk.space();
    require_active(space, source);
    if (T < 1) throw InvalidParameter("time_steps must be at least 1");

    const std::size_t d = space.degree(source);
    const auto m = static_cast<Eigen::Index>(space.arc_count());

    // One accumulator per initial arc, summed in arc order afterwards so the
    // result does not depend on the thread count.
    std::vector<Eigen::VectorXd> mass(d, Eigen::VectorXd::Zero(m));
    auto run = [&](std::size_t k) {
        QuantumState psi = basis_state(space, space.first_arc(source) + k);
        QuantumState next;
        for (std::size_t t = 1; t <= T; ++t) {
            walk.step(psi, next);
            psi.swap(next);
            mass[k] += psi.cwiseAbs2();
        }
    };

    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(d)));
    if (workers == 1) {
        for (std::size_t k = 0; k < d; ++k) run(k);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t k = w; k < d; k += workers) run(k);
            });
        }
    }

    Eigen::VectorXd total = Eigen::VectorXd::Zero(m);
    for (const auto& v : mass) total += v;
    const double scale = 1.0 / (static_cast<double>(T) * static_cast<double>(d));
    return make_table(space, source, Estimator::finite, T, per_simplex(space, total, scale));
}

UnitarySpectrum spectral_decomposition(const UnitaryWalk& walk, double phase_tolerance) {
    UnitarySpectrum spec;
    const Eigen::MatrixXcd u = walk.matrix();
    if (u.rows() == 0) return spec;

    // U is normal, so its Schur form is diagonal and the Schur vectors are an
    // orthonormal eigenbasis.
    Eigen::ComplexSchur<Eigen::MatrixXcd> schur(u);
    if (schur.info() != Eigen::Success) throw NumericalError("complex Schur decomposition failed");
    const Eigen::MatrixXcd& z = schur.matrixU();
    const Eigen::VectorXcd lambda = schur.matrixT().diagonal();

    spec.eigenvectors = z;
    spec.residual = (u * z - z * lambda.asDiagonal()).cwiseAbs().maxCoeff();
    if (!(spec.residual <= 1e-8)) {
        throw NumericalError("eigen-decomposition residual too large: " + std::to_string(spec.residual));
    }

    const auto m = static_cast<std::size_t>(lambda.size());
    spec.phases.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
        double theta = std::arg(lambda[static_cast<Eigen::Index>(k)]);
        if (theta < 0) theta += 2.0 * std::numbers::pi;
        if (theta >= 2.0 * std::numbers::pi) theta -= 2.0 * std::numbers::pi;
        spec.phases[k] = theta;
    }

    std::vector<std::size_t> order(m);
    for (std::size_t k = 0; k < m; ++k) order[k] = k;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return spec.phases[a] < spec.phases[b]; });
    for (std::size_t k : order) {
        if (!spec.groups.empty() && spec.phases[k] - spec.phases[spec.groups.back().back()] <= phase_tolerance) {
            spec.groups.back().push_back(k);
        } else {
            spec.groups.push_back({k});
        }
    }
    // Phases just below 2 pi belong with phases just above 0.
    if (spec.groups.size() > 1) {
        const double wrap = spec.phases[spec.groups.front().front()] + 2.0 * std::numbers::pi -
                            spec.phases[spec.groups.back().back()];
        if (wrap <= phase_tolerance) {
            auto last = std::move(spec.groups.back());
            spec.groups.pop_back();
            spec.groups.front().insert(spec.groups.front().begin(), last.begin(), last.end());
        }
    }
    return spec;
}

namespace {

Eigen::MatrixXcd group_columns(const UnitarySpectrum& spectrum, const std::vector<std::size_t>& group) {
    Eigen::MatrixXcd cols(spectrum.eigenvectors.rows(), static_cast<Eigen::Index>(group.size()));
    for (std::size_t j = 0; j < group.size(); ++j) {
        cols.col(static_cast<Eigen::Index>(j)) = spectrum.eigenvectors.col(static_cast<Eigen::Index>(group[j]));
    }
    return cols;
}

void check_spectrum(const UnitaryWalk& walk, const UnitarySpectrum& spectrum) {
    if (static_cast<std::size_t>(spectrum.eigenvectors.rows()) != walk.dimension()) {
        throw InvalidParameter("spectrum does not belong to this walk");
    }
}

}  // namespace

TransitionTable long_time_average(const UnitaryWalk& walk, const UnitarySpectrum& spectrum, std::size_t source) {
    const auto& space = walk.space();
    require_active(space, source);
    check_spectrum(walk, spectrum);

    const auto first = static_cast<Eigen::Index>(space.first_arc(source));
    const auto d = static_cast<Eigen::Index>(space.degree(source));
    Eigen::VectorXd weight = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(space.arc_count()));
    for (const auto& group : spectrum.groups) {
        const Eigen::MatrixXcd phi = group_columns(spectrum, group);
        // Columns of P_g belonging to the source arcs.
        const Eigen::MatrixXcd block = phi * phi.middleRows(first, d).adjoint();
        weight += block.cwiseAbs2().rowwise().sum();
    }
    const auto values = per_simplex(space, weight, 1.0 / static_cast<double>(d));
    return make_table(space, source, Estimator::spectral, 0, values);
}

double amplitude_lower_bound(const UnitaryWalk& walk, const UnitarySpectrum& spectrum, std::size_t source,
                             std::size_t target) {
    const auto& space = walk.space();
    require_active(space, source);
    require_active(space, target);
    check_spectrum(walk, spectrum);

    auto uniform = [&](std::size_t i) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(space.arc_count()));
        v.segment(static_cast<Eigen::Index>(space.first_arc(i)), static_cast<Eigen::Index>(space.degree(i)))
            .setConstant(1.0 / static_cast<double>(space.degree(i)));
        return v;
    };
    const Eigen::VectorXcd x = uniform(source);
    const Eigen::VectorXcd y = uniform(target);

    double bound = 0.0;
    for (const auto& group : spectrum.groups) {
        const Eigen::MatrixXcd phi = group_columns(spectrum, group);
        const std::complex<double> overlap = (phi.adjoint() * y).dot(phi.adjoint() * x);
        bound += std::norm(overlap);
    }
    return bound;
}

}  // namespace sqw
