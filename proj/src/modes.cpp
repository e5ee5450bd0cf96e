// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "losmimo/modes.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include <lapacke.h>

#include "losmimo/errors.hpp"

namespace losmimo {

namespace {

std::string dims(const Eigen::MatrixXcd &a)
{
    return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

void require_finite(const Eigen::MatrixXcd &a)
{
    if (!a.allFinite())
        throw DomainError("matrix " + dims(a) + " has non-finite entries");
    if (a.size() == 0)
        throw DomainError("cannot decompose an empty matrix");
}

struct Svd
{
    std::vector<double> s;
    Eigen::MatrixXcd u;  // M x K
    Eigen::MatrixXcd vt; // K x N (conjugate-transposed right vectors)
};

// Thin SVD via LAPACK divide and conquer, falling back to zgesvd if it fails to converge.
Svd lapack_svd(const Eigen::MatrixXcd &matrix, bool vectors)
{
    require_finite(matrix);
    const lapack_int m = static_cast<lapack_int>(matrix.rows());
    const lapack_int n = static_cast<lapack_int>(matrix.cols());
    const lapack_int k = std::min(m, n);

    Svd out;
    out.s.resize(static_cast<std::size_t>(k));
    if (vectors)
    {
        out.u.resize(m, k);
        out.vt.resize(k, n);
    }

    Eigen::MatrixXcd work = matrix;
    auto *a = reinterpret_cast<lapack_complex_double *>(work.data());
    auto *u = vectors ? reinterpret_cast<lapack_complex_double *>(out.u.data()) : nullptr;
    auto *vt = vectors ? reinterpret_cast<lapack_complex_double *>(out.vt.data()) : nullptr;
    const lapack_int ldu = vectors ? m : 1;
    const lapack_int ldvt = vectors ? k : 1;

    lapack_int info = LAPACKE_zgesdd(LAPACK_COL_MAJOR, vectors ? 'S' : 'N', m, n, a, m, out.s.data(), u, ldu,
                                     vt, ldvt);
    if (info > 0)
    {
        work = matrix;
        std::vector<double> superb(static_cast<std::size_t>(std::max<lapack_int>(k - 1, 1)));
        const char job = vectors ? 'S' : 'N';
        info = LAPACKE_zgesvd(LAPACK_COL_MAJOR, job, job, m, n, a, m, out.s.data(), u, ldu, vt, ldvt,
                              superb.data());
    }
    if (info != 0)
        throw ComputationError("SVD of " + dims(matrix) + " matrix failed (LAPACK info " + std::to_string(info) +
                               ")");
    return out;
}

} // namespace

Eigen::MatrixXcd ModeDecomposition::reconstruct(std::size_t modes) const
{
    modes = std::min(modes, size());
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(rx_basis.rows(), tx_basis.rows());
    for (std::size_t i = 0; i < modes; ++i)
    {
        const auto col = static_cast<Eigen::Index>(i);
        g.noalias() += intensities[i] * rx_basis.col(col) * tx_basis.col(col).adjoint();
    }
    return g;
}

ModeDecomposition decompose(const Eigen::MatrixXcd &matrix)
{
    Svd svd = lapack_svd(matrix, true);

    ModeDecomposition d;
    d.intensities = std::move(svd.s);
    d.rx_basis = std::move(svd.u);
    d.tx_basis = svd.vt.adjoint();

    for (Eigen::Index i = 0; i < d.tx_basis.cols(); ++i)
    {
        Eigen::Index peak = 0;
        d.tx_basis.col(i).cwiseAbs().maxCoeff(&peak);
        const std::complex<double> a = d.tx_basis(peak, i);
        if (std::abs(a) == 0.0)
            continue;
        // a -> a * r, b -> b * r keeps c b a^H unchanged for |r| = 1
        const std::complex<double> rot = std::conj(a) / std::abs(a);
        d.tx_basis.col(i) *= rot;
        d.rx_basis.col(i) *= rot;
        d.tx_basis(peak, i) = std::abs(a);
    }
    return d;
}

ModeDecomposition decompose(const ChannelMatrix &channel)
{
    ModeDecomposition d = decompose(channel.entries());
    d.tx_positions = channel.tx_positions();
    d.rx_positions = channel.rx_positions();
    return d;
}

std::vector<double> singular_values(const Eigen::MatrixXcd &matrix)
{
    return lapack_svd(matrix, false).s;
}

DofEstimate effective_dof(std::span<const double> intensities, double threshold_db)
{
    if (intensities.empty())
        throw DomainError("intensity list is empty");
    if (!(threshold_db > 0.0))
        throw DomainError("threshold_db must be positive");

    DofEstimate est;
    est.threshold_db = threshold_db;

    const double peak = *std::max_element(intensities.begin(), intensities.end());
    if (!(peak > 0.0))
        return est;

    double sum2 = 0.0;
    double sum4 = 0.0;
    for (double c : intensities)
    {
        const double p = (c / peak) * (c / peak);
        sum2 += p;
        sum4 += p * p;
        if (c > 0.0 && 20.0 * std::log10(c / peak) >= -threshold_db)
            ++est.strong_count;
    }
    est.participation_ratio = sum2 * sum2 / sum4;
    return est;
}

DofEstimate effective_dof(const ModeDecomposition &decomp, double threshold_db)
{
    return effective_dof(std::span<const double>(decomp.intensities), threshold_db);
}

ModeField mode_fields(const ModeDecomposition &decomp, std::size_t index)
{
    if (index < 1 || index > decomp.size())
        throw DomainError("mode index " + std::to_string(index) + " outside 1.." + std::to_string(decomp.size()));

    const auto col = static_cast<Eigen::Index>(index - 1);
    ModeField f;
    f.tx = {decomp.tx_positions, decomp.tx_basis.col(col)};
    f.rx = {decomp.rx_positions, decomp.rx_basis.col(col)};
    f.intensity = decomp.intensities[index - 1];
    return f;
}

double condition_number(std::span<const double> intensities)
{
    if (intensities.empty())
        throw DomainError("intensity list is empty");
    const auto [lo, hi] = std::minmax_element(intensities.begin(), intensities.end());
    if (*lo == 0.0)
        return std::numeric_limits<double>::infinity();
    return *hi / *lo;
}

} // namespace losmimo
