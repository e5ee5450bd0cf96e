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

#ifndef LOSMIMO_CHANNEL_HPP
#define LOSMIMO_CHANNEL_HPP

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

#include "losmimo/geometry.hpp"

namespace losmimo {

enum class GreenModel
{
    Exact,  // exp(-jkr)/(4 pi r) with the Euclidean distance r
    Fresnel // r ~ D + dx^2/(2D) in the phase, 1/(4 pi D) in the magnitude
};

inline constexpr std::size_t kDefaultMatrixBudget = std::size_t{4096} * 4096;

struct ChannelOptions
{
    GreenModel model = GreenModel::Exact;
    std::size_t max_entries = kDefaultMatrixBudget;
};

// Scalar free-space Green function between x_t on the transmit line and x_r on the receive line.
std::complex<double> green_scalar(double x_t, double x_r, const LinkGeometry &geom,
                                  GreenModel model = GreenModel::Exact);

// M x N matrix of Green samples: rows follow rx positions, columns tx positions.
class ChannelMatrix
{
public:
    ChannelMatrix(Eigen::MatrixXcd entries, std::vector<double> tx_positions,
                  std::vector<double> rx_positions, LinkGeometry geom);

    const Eigen::MatrixXcd &entries() const { return entries_; }
    const std::vector<double> &tx_positions() const { return tx_positions_; }
    const std::vector<double> &rx_positions() const { return rx_positions_; }
    const LinkGeometry &geometry() const { return geom_; }

    Eigen::Index rows() const { return entries_.rows(); }
    Eigen::Index cols() const { return entries_.cols(); }

private:
    Eigen::MatrixXcd entries_;
    std::vector<double> tx_positions_;
    std::vector<double> rx_positions_;
    LinkGeometry geom_;
};

ChannelMatrix channel_matrix(const Aperture &tx, const Aperture &rx, const LinkGeometry &geom,
                             const ChannelOptions &options = {});

// Same, from explicit element coordinates (non-uniform layouts such as sub-arrays)
ChannelMatrix channel_matrix(std::vector<double> tx_positions, std::vector<double> rx_positions,
                             const LinkGeometry &geom, const ChannelOptions &options = {});

// Quasi-continuous line of `length` sampled at pitch <= delta: floor(length/delta) + 1 points
Aperture sample_continuous(double length, double delta);

// Column-major dump with header `m,n,re,im` (0-based indices)
void write_matrix_csv(const ChannelMatrix &channel, std::ostream &out);

} // namespace losmimo

#endif
