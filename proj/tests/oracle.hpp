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

// Test-only reference computations. Nothing here calls into the library's numerical paths.

#ifndef LOSMIMO_TESTS_ORACLE_HPP
#define LOSMIMO_TESTS_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

inline constexpr double kPi = 3.14159265358979323846;

// exp(-j k r) / (4 pi r) evaluated directly with k r, no phase reduction
inline std::complex<double> green(double x_t, double x_r, double wavelength, double distance)
{
    const double r = std::sqrt(distance * distance + (x_r - x_t) * (x_r - x_t));
    const double k = 2.0 * kPi / wavelength;
    return std::exp(std::complex<double>(0.0, -k * r)) / (4.0 * kPi * r);
}

inline Eigen::MatrixXcd green_matrix(const std::vector<double> &tx, const std::vector<double> &rx,
                                     double wavelength, double distance)
{
    Eigen::MatrixXcd g(static_cast<Eigen::Index>(rx.size()), static_cast<Eigen::Index>(tx.size()));
    for (std::size_t n = 0; n < tx.size(); ++n)
        for (std::size_t m = 0; m < rx.size(); ++m)
            g(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n)) = green(tx[n], rx[m], wavelength, distance);
    return g;
}

inline std::vector<double> even_positions(double length, int count)
{
    std::vector<double> x(static_cast<std::size_t>(count), 0.0);
    for (int i = 0; i < count && count > 1; ++i)
        x[static_cast<std::size_t>(i)] = -length / 2.0 + length * i / (count - 1);
    return x;
}

// Singular values by one-sided (Hestenes) Jacobi rotations on the columns, sorted descending.
inline std::vector<double> jacobi_singular_values(Eigen::MatrixXcd a)
{
    if (a.cols() > a.rows())
        a = a.adjoint().eval();
    const Eigen::Index n = a.cols();

    for (int sweep = 0; sweep < 100; ++sweep)
    {
        double off = 0.0;
        for (Eigen::Index p = 0; p < n - 1; ++p)
        {
            for (Eigen::Index q = p + 1; q < n; ++q)
            {
                const double alpha = a.col(p).squaredNorm();
                const double beta = a.col(q).squaredNorm();
                const std::complex<double> gamma = a.col(p).dot(a.col(q)); // a_p^H a_q
                const double g = std::abs(gamma);
                if (g == 0.0 || g <= 1e-15 * std::sqrt(alpha * beta))
                    continue;
                off = std::max(off, g / std::sqrt(alpha * beta));

                // make the inner product real, then apply a real rotation
                a.col(q) *= std::conj(gamma) / g;
                const double zeta = (beta - alpha) / (2.0 * g);
                const double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                const Eigen::VectorXcd ap = a.col(p);
                const Eigen::VectorXcd aq = a.col(q);
                a.col(p) = c * ap - s * aq;
                a.col(q) = s * ap + c * aq;
            }
        }
        if (off < 1e-14)
            break;
    }

    std::vector<double> sv(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i)
        sv[static_cast<std::size_t>(i)] = a.col(i).norm();
    std::sort(sv.begin(), sv.end(), std::greater<>());
    return sv;
}

} // namespace oracle

#endif
