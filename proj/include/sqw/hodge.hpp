#pragma once

// Hodge Laplacians of a simplicial complex and the algebraic identities
// they satisfy.

#include "sqw/complex.hpp"

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <vector>

namespace sqw {

inline constexpr double kDefaultKernelTolerance = 1e-9;

/// L^up_n = B_{n+1} B_{n+1}^T, L^down_n = B_n^T B_n, total = up + down.
/// For n = 0 the down part is absent (has_down == false, `down` is zero).
struct HodgeLaplacian {
    int n = 0;
    bool has_down = false;
    Eigen::MatrixXd up;
    Eigen::MatrixXd down;
    Eigen::MatrixXd total;
};

/// Integer-exact Laplacian blocks, used by the identity checks.
struct IntegerLaplacian {
    int n = 0;
    Eigen::SparseMatrix<int> up;
    Eigen::SparseMatrix<int> down;
};

HodgeLaplacian hodge_laplacian(const SimplicialComplex& complex, int n);
IntegerLaplacian integer_laplacian(const SimplicialComplex& complex, int n);

struct ChainIdentityReport {
    int n = 0;
    bool boundary_of_boundary_zero = true;  // B_n B_{n+1} = 0
    bool up_down_zero = true;               // L^up_n L^down_n = 0
    bool down_up_zero = true;               // L^down_n L^up_n = 0

    bool all() const noexcept { return boundary_of_boundary_zero && up_down_zero && down_up_zero; }
};

/// Exact integer verification. Products involving an absent matrix (no
/// (n+1)-simplices, or n = 0) hold trivially.
ChainIdentityReport verify_chain_identities(const SimplicialComplex& complex, int n);

struct SpectrumReport {
    int n = 0;
    std::vector<double> eigenvalues;  // ascending
    int betti = 0;
};

/// Full spectrum of the total Laplacian L_n. Throws NumericalError when the
/// eigensolver fails and InvalidParameter when tolerance <= 0.
SpectrumReport laplacian_spectrum(const SimplicialComplex& complex, int n,
                                  double tolerance = kDefaultKernelTolerance);

/// dim ker L_n: the number of eigenvalues below `tolerance`.
int betti_number(const SimplicialComplex& complex, int n,
                 double tolerance = kDefaultKernelTolerance);

/// Numerical rank of a symmetric positive semidefinite matrix.
int psd_rank(const Eigen::MatrixXd& m, double tolerance = kDefaultKernelTolerance);

}  // namespace sqw
