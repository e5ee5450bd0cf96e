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

#ifndef LOSMIMO_FORMULAS_HPP
#define LOSMIMO_FORMULAS_HPP

#include <string>
#include <string_view>
#include <vector>

namespace losmimo {

enum class FormulaId
{
    Paraxial2,
    GeometricNearField3,
    RankCap7,
    ParaxialCapped8,
    GeometricCapped9,
    InfiniteRx10,
    OrthogonalMax12
};

std::string_view to_string(FormulaId id);

// Closed-form mode-count estimate. `value` is the continuous estimate, `rounded` is
// max(1, nearest integer). Regime-validity problems are reported in `warnings`, never thrown.
struct DofFormulaResult
{
    double value = 1.0;
    int rounded = 1;
    FormulaId id = FormulaId::Paraxial2;
    std::vector<std::string> warnings;
};

// max{1, L_T L_R / (lambda D)}; warns when max(L_T, L_R) > D/10
DofFormulaResult dof_paraxial(double tx_length, double rx_length, double wavelength, double distance);

// 1 + 2 L_T L_R / (lambda sqrt(4 D^2 + L_R^2)); warns when L_R < 10 L_T
DofFormulaResult dof_geometric(double tx_length, double rx_length, double wavelength, double distance);

// min{N, M}
int rank_upper_bound(int n, int m);

DofFormulaResult dof_paraxial_capped(double tx_length, double rx_length, double wavelength, double distance,
                                     int n, int m);
DofFormulaResult dof_geometric_capped(double tx_length, double rx_length, double wavelength, double distance,
                                      int n, int m);

// Receive line of unbounded length: min{1 + 2 L_T / lambda, N}
DofFormulaResult dof_infinite_rx(double tx_length, double wavelength, int n);

// Largest mode count that keeps the Rayleigh orthogonality at fixed lengths:
// 1 + s + sqrt((1 + s)^2 - 1) with s = L_T L_R / (2 lambda D)
DofFormulaResult dof_orthogonal_max(double tx_length, double rx_length, double wavelength, double distance);

} // namespace losmimo

#endif
