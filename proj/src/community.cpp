#include "sqw/community.hpp"

#include "sqw/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>

namespace sqw {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

CommunityPartition components(int n, std::size_t count, const std::vector<std::pair<std::size_t, std::size_t>>& links) {
    DisjointSets sets(count);
    for (auto [a, b] : links) sets.unite(a, b);

    std::map<std::size_t, std::size_t> root_to_label;
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < count; ++i) {
        auto [it, inserted] = root_to_label.try_emplace(sets.find(i), groups.size());
        if (inserted) groups.emplace_back();
        groups[it->second].push_back(i);
    }
    return CommunityPartition::from_communities(n, count, std::move(groups));
}

}  // namespace

CommunityPartition CommunityPartition::from_communities(int n, std::size_t simplex_count,
                                                        std::vector<std::vector<std::size_t>> communities) {
    CommunityPartition p;
    p.n = n;
    p.labels.assign(simplex_count, simplex_count);
    for (std::size_t c = 0; c < communities.size(); ++c) {
        auto& members = communities[c];
        if (members.empty()) throw InvalidParameter("empty community");
        std::sort(members.begin(), members.end());
        for (std::size_t s : members) {
            if (s >= simplex_count) throw InvalidParameter("community member out of range");
            if (p.labels[s] != simplex_count) {
                throw InvalidParameter("simplex " + std::to_string(s) + " appears in two communities");
            }
            p.labels[s] = c;
        }
    }
    if (std::find(p.labels.begin(), p.labels.end(), simplex_count) != p.labels.end()) {
        throw InvalidParameter("partition does not cover every " + std::to_string(n) + "-simplex");
    }
    p.communities = std::move(communities);
    return p;
}

CommunityPartition partition_from_simplices(const SimplicialComplex& complex, int n,
                                            const std::vector<std::vector<Simplex>>& communities) {
    std::vector<std::vector<std::size_t>> groups;
    for (const auto& community : communities) {
        auto& g = groups.emplace_back();
        for (const auto& s : community) {
            if (s.dim() != n) throw InvalidParameter(s.to_string() + " is not an " + std::to_string(n) + "-simplex");
            g.push_back(complex.index_of(s));
        }
    }
    return CommunityPartition::from_communities(n, complex.count(n), std::move(groups));
}

Eigen::MatrixXi membership_matrix(const CommunityPartition& partition) {
    Eigen::MatrixXi w = Eigen::MatrixXi::Zero(static_cast<Eigen::Index>(partition.labels.size()),
                                              static_cast<Eigen::Index>(partition.size()));
    for (std::size_t i = 0; i < partition.labels.size(); ++i) {
        w(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(partition.labels[i])) = 1;
    }
    return w;
}

CommunityPartition exact_down_communities(const SimplicialComplex& complex, int n) {
    if (n < 1) throw InvalidParameter("down communities need n >= 1");
    std::vector<std::pair<std::size_t, std::size_t>> links;
    const auto nbrs = lower_neighbourhoods(complex, n);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        for (const auto& nb : nbrs[i]) links.emplace_back(i, nb.simplex);
    }
    return components(n, complex.count(n), links);
}

CommunityPartition exact_up_communities(const SimplicialComplex& complex, int n) {
    if (n < 0) throw InvalidParameter("up communities need n >= 0");
    std::vector<std::pair<std::size_t, std::size_t>> links;
    for (const auto& top : complex.simplices(n + 1)) {
        const auto first = complex.index_of(top.without(0));
        for (std::size_t k = 1; k < top.size(); ++k) links.emplace_back(first, complex.index_of(top.without(k)));
    }
    return components(n, complex.count(n), links);
}

SymmetryReport verify_symmetry(const SimplicialComplex& complex, int n) {
    if (n < 0) throw InvalidParameter("symmetry check needs n >= 0");
    SymmetryReport report;
    report.down = exact_down_communities(complex, n + 1);
    report.up = exact_up_communities(complex, n);

    const auto upper = complex.simplices(n + 1);
    std::vector<bool> hit(report.up.size(), false);
    bool ok = true;
    for (const auto& community : report.down.communities) {
        std::set<std::size_t> image;
        for (std::size_t s : community) {
            for (std::size_t k = 0; k < upper[s].size(); ++k) image.insert(complex.index_of(upper[s].without(k)));
        }
        const std::size_t target = report.up.labels[*image.begin()];
        const auto& members = report.up.communities[target];
        const bool equal = members.size() == image.size() && std::equal(members.begin(), members.end(), image.begin());
        if (!equal || hit[target] || members.size() < 2) ok = false;
        hit[target] = true;
        report.mapping.push_back(target);
    }
    // Surjectivity onto the non-isolated up communities.
    for (std::size_t c = 0; c < report.up.size(); ++c) {
        if (report.up.communities[c].size() > 1 && !hit[c]) ok = false;
    }
    report.holds = ok;
    return report;
}

ModularityReport simplicial_modularity(const SimplicialComplex& complex, int n, const CommunityPartition& partition) {
    if (n < 1) throw InvalidParameter("modularity needs n >= 1");
    if (partition.labels.size() != complex.count(n)) {
        throw InvalidParameter("partition does not match the number of " + std::to_string(n) + "-simplices");
    }
    const auto nbrs = lower_neighbourhoods(complex, n);
    std::size_t m = 0;
    for (const auto& v : nbrs) m += v.size();
    if (m == 0) throw NoAdjacency("no lower-adjacent " + std::to_string(n) + "-simplices (m_n = 0)");

    const double md = static_cast<double>(m);
    ModularityReport report;
    report.m = m;
    report.contributions.assign(partition.size(), 0.0);

    std::vector<double> internal(partition.size(), 0.0);
    std::vector<double> degree_sum(partition.size(), 0.0);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        const auto c = partition.labels[i];
        degree_sum[c] += static_cast<double>(nbrs[i].size());
        for (const auto& nb : nbrs[i]) {
            if (partition.labels[nb.simplex] == c) internal[c] += 1.0;
        }
    }
    for (std::size_t c = 0; c < partition.size(); ++c) {
        report.contributions[c] = (internal[c] - degree_sum[c] * degree_sum[c] / md) / md;
        report.q += report.contributions[c];
    }
    return report;
}

CommunityPartition detect_communities(const SimplicialComplex& complex, int n, const DetectionOptions& options) {
    const UnitaryWalk walk(WalkSpace::build(complex, n, options.ordering));
    const auto& space = walk.space();
    const std::size_t count = space.simplex_count();
    const std::size_t m = space.arc_count();
    const double threshold = m > 0 ? 1.0 / static_cast<double>(m) : 0.0;

    std::optional<UnitarySpectrum> spectrum;
    if (options.estimator == Estimator::spectral && m > 0) {
        spectrum = spectral_decomposition(walk, options.phase_tolerance);
    }

    auto passes = [&](double q) {
        return options.threshold == Threshold::strict ? q > threshold + kThresholdTieTolerance
                                                      : q >= threshold - kThresholdTieTolerance;
    };

    std::vector<bool> assigned(count, false);
    std::size_t remaining = count;
    std::vector<std::vector<std::size_t>> communities;

    while (remaining > 0) {
        // Most lower neighbours; the strict comparison keeps the canonical first on ties.
        std::size_t start = count;
        for (std::size_t i = 0; i < count; ++i) {
            if (!assigned[i] && (start == count || space.degree(i) > space.degree(start))) start = i;
        }

        std::vector<std::size_t> members{start};
        if (!space.is_isolated(start)) {
            const TransitionTable table = options.estimator == Estimator::finite
                                              ? finite_time_average(walk, start, options.time_steps, options.threads)
                                              : long_time_average(walk, *spectrum, start);
            for (std::size_t k = 0; k < table.targets.size(); ++k) {
                const auto y = table.targets[k];
                if (y != start && !assigned[y] && passes(table.values[k])) members.push_back(y);
            }
        }
        for (std::size_t s : members) assigned[s] = true;
        remaining -= members.size();
        communities.push_back(std::move(members));
    }
    return CommunityPartition::from_communities(n, count, std::move(communities));
}

}  // namespace sqw
