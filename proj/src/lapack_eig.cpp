#include "rellich/lapack_eig.hpp"

#include <lapacke.h>

#include <stdexcept>
#include <string>

#include "rellich/errors.hpp"

namespace rellich {

namespace {

void check_info(lapack_int info, const char* routine) {
    if (info != 0)
        throw numerical_error(std::string(routine) + " failed with info = " + std::to_string(info));
}

} // namespace

std::vector<double> lowest_eigs_tridiagonal(const std::vector<double>& d,
                                            const std::vector<double>& e, int count) {
    lapack_int n = static_cast<lapack_int>(d.size());
    if (n < 1 || count < 1 || count > n)
        throw std::invalid_argument("lowest_eigs_tridiagonal: bad sizes");
    std::vector<double> dd = d, ee = e;
    ee.resize(n, 0.0); // dstevr wants length n workspace for e
    std::vector<double> w(n), z(1);
    lapack_int m = 0;
    std::vector<lapack_int> isuppz(2 * std::max<lapack_int>(1, count));
    lapack_int info = LAPACKE_dstevr(LAPACK_COL_MAJOR, 'N', 'I', n, dd.data(), ee.data(), 0.0,
                                     0.0, 1, count, 0.0, &m, w.data(), z.data(), 1, isuppz.data());
    check_info(info, "dstevr");
    w.resize(m);
    return w;
}

TridiagonalEigen lowest_eigs_tridiagonal_with_vectors(const std::vector<double>& d,
                                                      const std::vector<double>& e, int count) {
    lapack_int n = static_cast<lapack_int>(d.size());
    if (n < 1 || count < 1 || count > n)
        throw std::invalid_argument("lowest_eigs_tridiagonal_with_vectors: bad sizes");
    std::vector<double> dd = d, ee = e;
    ee.resize(n, 0.0);
    std::vector<double> w(n), z(static_cast<std::size_t>(n) * count);
    lapack_int m = 0;
    std::vector<lapack_int> isuppz(2 * std::max<lapack_int>(1, count));
    lapack_int info = LAPACKE_dstevr(LAPACK_COL_MAJOR, 'V', 'I', n, dd.data(), ee.data(), 0.0,
                                     0.0, 1, count, 0.0, &m, w.data(), z.data(), n, isuppz.data());
    check_info(info, "dstevr");
    TridiagonalEigen out;
    out.values.assign(w.begin(), w.begin() + m);
    out.vectors.resize(m);
    for (lapack_int k = 0; k < m; ++k)
        out.vectors[k].assign(z.begin() + static_cast<std::size_t>(k) * n,
                              z.begin() + static_cast<std::size_t>(k + 1) * n);
    return out;
}

std::vector<double> lowest_eigs_banded(const BandedSymmetric& a, int count) {
    lapack_int n = a.n;
    if (n < 1 || count < 1 || count > n)
        throw std::invalid_argument("lowest_eigs_banded: bad sizes");
    std::vector<double> ab = a.ab; // dsbevx destroys the band
    std::vector<double> w(n), q(1), z(1);
    std::vector<lapack_int> ifail(n);
    lapack_int m = 0;
    lapack_int info = LAPACKE_dsbevx(LAPACK_COL_MAJOR, 'N', 'I', 'L', n, a.kd, ab.data(),
                                     a.kd + 1, q.data(), 1, 0.0, 0.0, 1, count, 0.0, &m,
                                     w.data(), z.data(), 1, ifail.data());
    check_info(info, "dsbevx");
    if (m < count) throw numerical_error("dsbevx returned fewer eigenvalues than requested");
    w.resize(m);
    return w;
}

bool is_positive_definite_banded(BandedSymmetric a) {
    std::vector<double> d(a.n);
    for (int i = 0; i < a.n; ++i) {
        d[i] = a.at(i, i);
        if (!(d[i] > 0.0)) return false;
    }
    for (int j = 0; j < a.n; ++j)
        for (int i = j; i <= std::min(a.n - 1, j + a.kd); ++i)
            a.at(i, j) /= std::sqrt(d[i] * d[j]);
    lapack_int info = LAPACKE_dpbtrf(LAPACK_COL_MAJOR, 'L', a.n, a.kd, a.ab.data(), a.kd + 1);
    if (info < 0) throw numerical_error("dpbtrf: bad argument " + std::to_string(-info));
    return info == 0;
}

} // namespace rellich
