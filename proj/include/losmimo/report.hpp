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

#ifndef LOSMIMO_REPORT_HPP
#define LOSMIMO_REPORT_HPP

#include <iosfwd>
#include <span>

#include <json.hpp>

#include "losmimo/design.hpp"
#include "losmimo/modes.hpp"

namespace losmimo {

// Fields: kind, n_tx, n_rx, l_tx_m, l_rx_m, spacing_m, dof_numerical, dof_formula,
// dof_formula_id, rf_chains, bf_gain_proxy_db, warnings
nlohmann::ordered_json to_json(const ArchitectureReport &report);

// Header `coord,re,im`
void write_profile_csv(const ModeProfile &profile, std::ostream &out);

// Header `n,c_n,rel_db` with rel_db = 10 log10(c_n^2 / c_1^2)
void write_intensities_csv(std::span<const double> intensities, std::ostream &out);

} // namespace losmimo

#endif
