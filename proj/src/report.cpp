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

#include "losmimo/report.hpp"

#include <cmath>
#include <ostream>

#include "losmimo/format.hpp"

namespace losmimo {

nlohmann::ordered_json to_json(const ArchitectureReport &report)
{
    nlohmann::ordered_json j;
    j["kind"] = report.kind;
    j["n_tx"] = report.n_tx;
    j["n_rx"] = report.n_rx;
    j["l_tx_m"] = report.l_tx;
    j["l_rx_m"] = report.l_rx;
    j["spacing_m"] = report.spacing;
    j["dof_numerical"] = report.dof_numerical;
    j["dof_formula"] = report.dof_formula.value;
    j["dof_formula_id"] = std::string(to_string(report.dof_formula.id));
    j["rf_chains"] = report.rf_chains;
    j["bf_gain_proxy_db"] = report.bf_gain_proxy_db;
    j["warnings"] = report.warnings;
    return j;
}

void write_profile_csv(const ModeProfile &profile, std::ostream &out)
{
    out << "coord,re,im\n";
    for (Eigen::Index i = 0; i < profile.values.size(); ++i)
    {
        const double coord = static_cast<std::size_t>(i) < profile.coords.size()
                                 ? profile.coords[static_cast<std::size_t>(i)]
                                 : static_cast<double>(i);
        out << format_number(coord) << ',' << format_number(profile.values(i).real()) << ','
            << format_number(profile.values(i).imag()) << '\n';
    }
}

void write_intensities_csv(std::span<const double> intensities, std::ostream &out)
{
    out << "n,c_n,rel_db\n";
    if (intensities.empty())
        return;
    const double peak = intensities.front();
    for (std::size_t i = 0; i < intensities.size(); ++i)
    {
        const double ratio = intensities[i] / peak;
        out << (i + 1) << ',' << format_number(intensities[i]) << ',' << format_number(10.0 * std::log10(ratio * ratio))
            << '\n';
    }
}

} // namespace losmimo
