#include "sqw/hodge.hpp"

#include "sqw/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>

namespace sqw {

namespace {

void check_dim(const SimplicialComplex& complex, int n) {
    if (n < 0 || n > complex.max_dim()) {
        throw InvalidParameter("Laplacian dimension " + std::to_string(n) + " outside [0, " +
                               std::to_string(complex.max_dim()) + "]");
    }
}

bool is_zero(const Eigen::SparseMatrix<int>& m) {
    for (int k = 0; k < m.outerSize(); ++k) {
        for (Eigen::SparseMatrix<int>::InnerIterator it(m, k); it; ++it) {
            if (it.value() != 0) return false;
        }
    }
    return true;
}

}  // namespace

IntegerLaplacian integer_laplacian(const SimplicialComplex& complex, int n) {
    check_dim(complex, n);
    const auto size = static_cast<Eigen::Index>(complex.count(n));
    IntegerLaplacian lap;
    lap.n = n;
    lap.up.resize(size, size);
    lap.down.resize(size, size);
    if (n + 1 <= complex.max_dim()) {
        const auto b = boundary_matrix(complex, n + 1).entries;
        lap.up = b * Eigen::SparseMatrix<int>(b.transpose());
    }
    if (n >= 1) {
        const auto b = boundary_matrix(complex, n).entries;
        lap.down = Eigen::SparseMatrix<int>(b.transpose()) * b;
    }
    return lap;
}

HodgeLaplacian hodge_laplacian(const SimplicialComplex& complex, int n) {
    const auto lap = integer_laplacian(complex, n);
    HodgeLaplacian out;
    out.n = n;
    out.has_down = n >= 1;
    out.up = Eigen::MatrixXi(lap.up).cast<double>();
    out.down = Eigen::MatrixXi(lap.down).cast<double>();
    out.total = out.up + out.down;
    return out;
}

ChainIdentityReport verify_chain_identities(const SimplicialComplex& complex, int n) {
    check_dim(complex, n);
    ChainIdentityReport report;
    report.n = n;
    if (n >= 1 && n + 1 <= complex.max_dim()) {
        const auto lower = boundary_matrix(complex, n).entries;
        const auto upper = boundary_matrix(complex, n + 1).entries;
        report.boundary_of_boundary_zero = is_zero(lower * upper);
    }
    const auto lap = integer_laplacian(complex, n);
    report.up_down_zero = is_zero(lap.up * lap.down);
    report.down_up_zero = is_zero(lap.down * lap.up);
    return report;
}

SpectrumReport laplacian_spectrum(const SimplicialComplex& complex, int n, double tolerance) {
    if (!(tolerance > 0)) throw InvalidParameter("kernel tolerance must be positive");
    const auto lap = hodge_laplacian(complex, n);

    SpectrumReport report;
    report.n = n;
    if (lap.total.rows() == 0) return report;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap.total, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("symmetric eigensolver failed for L_" + std::to_string(n));
    }
    const auto& values = solver.eigenvalues();
    report.eigenvalues.assign(values.data(), values.data() + values.size());
    report.betti = static_cast<int>(std::count_if(report.eigenvalues.begin(), report.eigenvalues.end(),
                                                  [&](double v) { return v < tolerance; }));
    return report;
}

int betti_number(const SimplicialComplex& complex, int n, double tolerance) {
    return laplacian_spectrum(complex, n, tolerance).betti;
}

int psd_rank(const Eigen::MatrixXd& m, double tolerance) {
    if (m.rows() == 0) return 0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NumericalError("symmetric eigensolver failed");
    return static_cast<int>((solver.eigenvalues().array() >= tolerance).count());
}

}  // namespace sqw
