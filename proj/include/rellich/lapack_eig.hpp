#pragma once

#include <vector>

namespace rellich {

// Symmetric banded matrix, lower storage, column major:
// ab[j*(kd+1) + (i-j)] holds A(i,j) for j <= i <= min(n-1, j+kd).
struct BandedSymmetric {
    int n = 0;
    int kd = 0;
    std::vector<double> ab;

    explicit BandedSymmetric(int n_, int kd_) : n(n_), kd(kd_), ab(static_cast<std::size_t>(n_) * (kd_ + 1), 0.0) {}
    double& at(int i, int j) { return ab[static_cast<std::size_t>(j) * (kd + 1) + (i - j)]; }
    double at(int i, int j) const { return ab[static_cast<std::size_t>(j) * (kd + 1) + (i - j)]; }
};

// Lowest `count` eigenvalues of the symmetric tridiagonal matrix with
// diagonal d and off-diagonal e (|e| = |d| - 1).
std::vector<double> lowest_eigs_tridiagonal(const std::vector<double>& d,
                                            const std::vector<double>& e, int count);

// As above plus the matching eigenvectors, column k in vecs[k].
struct TridiagonalEigen {
    std::vector<double> values;
    std::vector<std::vector<double>> vectors;
};
TridiagonalEigen lowest_eigs_tridiagonal_with_vectors(const std::vector<double>& d,
                                                      const std::vector<double>& e, int count);

// Lowest `count` eigenvalues of a symmetric banded matrix.
std::vector<double> lowest_eigs_banded(const BandedSymmetric& a, int count);

// Positive-definiteness test via banded Cholesky after diagonal
// equilibration. Reliable on strongly graded matrices, where the
// eigensolver's absolute error floor would swamp an O(1) answer.
bool is_positive_definite_banded(BandedSymmetric a);

} // namespace rellich
