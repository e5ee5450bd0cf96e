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

#include "losmimo/formulas.hpp"

#include <algorithm>
#include <cmath>

#include "losmimo/errors.hpp"

namespace losmimo {

namespace {

void require_positive(double value, const char *what)
{
    if (!(value > 0.0) || !std::isfinite(value))
        throw DomainError(std::string(what) + " must be positive and finite");
}

void require_counts(int n, int m)
{
    if (n < 1 || m < 1)
        throw DomainError("element counts must be at least 1");
}

DofFormulaResult make_result(double value, FormulaId id, std::vector<std::string> warnings = {})
{
    DofFormulaResult r;
    r.value = value;
    r.rounded = std::max(1, static_cast<int>(std::lround(value)));
    r.id = id;
    r.warnings = std::move(warnings);
    return r;
}

DofFormulaResult cap(DofFormulaResult r, int n, int m, FormulaId id)
{
    require_counts(n, m);
    const double bound = rank_upper_bound(n, m);
    if (r.value > bound)
        r.value = bound;
    return make_result(r.value, id, std::move(r.warnings));
}

} // namespace

std::string_view to_string(FormulaId id)
{
    switch (id)
    {
    case FormulaId::Paraxial2:
        return "Paraxial2";
    case FormulaId::GeometricNearField3:
        return "GeometricNearField3";
    case FormulaId::RankCap7:
        return "RankCap7";
    case FormulaId::ParaxialCapped8:
        return "ParaxialCapped8";
    case FormulaId::GeometricCapped9:
        return "GeometricCapped9";
    case FormulaId::InfiniteRx10:
        return "InfiniteRx10";
    case FormulaId::OrthogonalMax12:
        return "OrthogonalMax12";
    }
    return "Unknown";
}

DofFormulaResult dof_paraxial(double tx_length, double rx_length, double wavelength, double distance)
{
    require_positive(tx_length, "L_T");
    require_positive(rx_length, "L_R");
    require_positive(wavelength, "wavelength");
    require_positive(distance, "distance");

    std::vector<std::string> warnings;
    // Both lengths are checked; the validity note is printed as "L_T, L_T << D"
    if (std::max(tx_length, rx_length) > distance / 10.0)
        warnings.emplace_back("paraxial formula outside its validity range: max(L_T, L_R) > D/10");

    const double value = std::max(1.0, tx_length * rx_length / (wavelength * distance));
    return make_result(value, FormulaId::Paraxial2, std::move(warnings));
}

DofFormulaResult dof_geometric(double tx_length, double rx_length, double wavelength, double distance)
{
    require_positive(tx_length, "L_T");
    require_positive(rx_length, "L_R");
    require_positive(wavelength, "wavelength");
    require_positive(distance, "distance");

    std::vector<std::string> warnings;
    if (rx_length < 10.0 * tx_length)
        warnings.emplace_back("geometric near-field formula assumes L_R >> L_T: L_R < 10 L_T");

    const double value =
        1.0 + 2.0 * tx_length * rx_length /
                  (wavelength * std::sqrt(4.0 * distance * distance + rx_length * rx_length));
    return make_result(value, FormulaId::GeometricNearField3, std::move(warnings));
}

int rank_upper_bound(int n, int m)
{
    require_counts(n, m);
    return std::min(n, m);
}

DofFormulaResult dof_paraxial_capped(double tx_length, double rx_length, double wavelength, double distance,
                                     int n, int m)
{
    return cap(dof_paraxial(tx_length, rx_length, wavelength, distance), n, m, FormulaId::ParaxialCapped8);
}

DofFormulaResult dof_geometric_capped(double tx_length, double rx_length, double wavelength, double distance,
                                      int n, int m)
{
    return cap(dof_geometric(tx_length, rx_length, wavelength, distance), n, m, FormulaId::GeometricCapped9);
}

DofFormulaResult dof_infinite_rx(double tx_length, double wavelength, int n)
{
    require_positive(tx_length, "L_T");
    require_positive(wavelength, "wavelength");
    require_counts(n, 1);
    const double value = std::min(1.0 + 2.0 * tx_length / wavelength, static_cast<double>(n));
    return make_result(value, FormulaId::InfiniteRx10);
}

DofFormulaResult dof_orthogonal_max(double tx_length, double rx_length, double wavelength, double distance)
{
    require_positive(tx_length, "L_T");
    require_positive(rx_length, "L_R");
    require_positive(wavelength, "wavelength");
    require_positive(distance, "distance");

    const double s = tx_length * rx_length / (2.0 * wavelength * distance);
    // (1+s)^2 - 1 written as s (s + 2) to avoid cancellation for small s
    const double value = 1.0 + s + std::sqrt(s * (s + 2.0));
    return make_result(value, FormulaId::OrthogonalMax12);
}

} // namespace losmimo
