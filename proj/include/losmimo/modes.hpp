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

#ifndef LOSMIMO_MODES_HPP
#define LOSMIMO_MODES_HPP

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "losmimo/channel.hpp"

namespace losmimo {

inline constexpr double kDefaultThresholdDb = 20.0;

// Discrete mode expansion G = sum_n c_n b_n a_n^H.
//
// Columns of tx_basis are the transmit basis functions a_n sampled on tx_positions, columns of
// rx_basis the receive functions b_n on rx_positions. All K = min(N, M) modes are kept. Each
// mode's phase is fixed so that the largest-magnitude entry of a_n is real and positive.
struct ModeDecomposition
{
    std::vector<double> intensities; // c_1 >= c_2 >= ... >= 0
    Eigen::MatrixXcd tx_basis;       // N x K
    Eigen::MatrixXcd rx_basis;       // M x K
    std::vector<double> tx_positions;
    std::vector<double> rx_positions;

    std::size_t size() const { return intensities.size(); }

    // Sum of the leading `modes` rank-one terms
    Eigen::MatrixXcd reconstruct(std::size_t modes) const;
    Eigen::MatrixXcd reconstruct() const { return reconstruct(size()); }
};

ModeDecomposition decompose(const ChannelMatrix &channel);
ModeDecomposition decompose(const Eigen::MatrixXcd &matrix);

// Singular values only, non-increasing. Much cheaper than decompose for large matrices.
std::vector<double> singular_values(const Eigen::MatrixXcd &matrix);

struct DofEstimate
{
    int strong_count = 0;             // modes within threshold_db of the strongest
    double participation_ratio = 0.0; // (sum c^2)^2 / sum c^4
    double threshold_db = kDefaultThresholdDb;
};

DofEstimate effective_dof(std::span<const double> intensities, double threshold_db = kDefaultThresholdDb);
DofEstimate effective_dof(const ModeDecomposition &decomp, double threshold_db = kDefaultThresholdDb);

struct ModeProfile
{
    std::vector<double> coords;
    Eigen::VectorXcd values;
};

struct ModeField
{
    ModeProfile tx;
    ModeProfile rx;
    double intensity = 0.0;
};

// 1-based mode index, 1 <= index <= K
ModeField mode_fields(const ModeDecomposition &decomp, std::size_t index);

// c_1 / c_K; infinity when the smallest intensity is zero
double condition_number(std::span<const double> intensities);

} // namespace losmimo

#endif
