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

#include "losmimo/channel.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "losmimo/errors.hpp"
#include "losmimo/format.hpp"

namespace losmimo {

std::complex<double> green_scalar(double x_t, double x_r, const LinkGeometry &geom, GreenModel model)
{
    const double D = geom.distance();
    const double dx = x_r - x_t;

    double magnitude_distance = 0.0;
    double phase_distance = 0.0;
    if (model == GreenModel::Exact)
    {
        magnitude_distance = std::hypot(D, dx);
        phase_distance = magnitude_distance;
    }
    else
    {
        magnitude_distance = D;
        phase_distance = D + dx * dx / (2.0 * D);
    }

    // Reduce r/lambda to its fractional part before scaling by 2 pi; k*r itself reaches 1e5 rad
    const double cycles = phase_distance / geom.wavelength();
    const double phase = -2.0 * kPi * (cycles - std::floor(cycles));
    return std::polar(1.0 / (4.0 * kPi * magnitude_distance), phase);
}

ChannelMatrix::ChannelMatrix(Eigen::MatrixXcd entries, std::vector<double> tx_positions,
                             std::vector<double> rx_positions, LinkGeometry geom)
    : entries_(std::move(entries)), tx_positions_(std::move(tx_positions)),
      rx_positions_(std::move(rx_positions)), geom_(geom)
{
    if (entries_.rows() != static_cast<Eigen::Index>(rx_positions_.size()) ||
        entries_.cols() != static_cast<Eigen::Index>(tx_positions_.size()))
        throw DomainError("channel matrix dimensions do not match position lists");
}

ChannelMatrix channel_matrix(std::vector<double> tx_positions, std::vector<double> rx_positions,
                             const LinkGeometry &geom, const ChannelOptions &options)
{
    const std::size_t n = tx_positions.size();
    const std::size_t m = rx_positions.size();
    if (n == 0 || m == 0)
        throw DomainError("channel matrix needs at least one element per side");
    if (n > options.max_entries / m)
        throw ResourceError("channel matrix of " + std::to_string(m) + "x" + std::to_string(n) +
                            " entries exceeds the budget of " + std::to_string(options.max_entries));

    Eigen::MatrixXcd g(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
    for (std::size_t col = 0; col < n; ++col)
        for (std::size_t row = 0; row < m; ++row)
            g(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
                green_scalar(tx_positions[col], rx_positions[row], geom, options.model);

    return ChannelMatrix(std::move(g), std::move(tx_positions), std::move(rx_positions), geom);
}

ChannelMatrix channel_matrix(const Aperture &tx, const Aperture &rx, const LinkGeometry &geom,
                             const ChannelOptions &options)
{
    return channel_matrix(tx.positions(), rx.positions(), geom, options);
}

Aperture sample_continuous(double length, double delta)
{
    if (!(delta > 0.0))
        throw DomainError("sample spacing must be positive");
    if (!(length >= delta))
        throw DomainError("line length must be at least one sample spacing");

    // Tolerate representation error in exact ratios such as 0.03 / 0.00075
    const double intervals = std::floor(length / delta + 1e-9);
    return Aperture::continuous(length, static_cast<int>(intervals) + 1, delta);
}

void write_matrix_csv(const ChannelMatrix &channel, std::ostream &out)
{
    const auto &g = channel.entries();
    out << "m,n,re,im\n";
    for (Eigen::Index n = 0; n < g.cols(); ++n)
        for (Eigen::Index m = 0; m < g.rows(); ++m)
            out << m << ',' << n << ',' << format_number(g(m, n).real()) << ','
                << format_number(g(m, n).imag()) << '\n';
}

} // namespace losmimo
