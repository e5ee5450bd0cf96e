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

#ifndef LOSMIMO_DESIGN_HPP
#define LOSMIMO_DESIGN_HPP

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "losmimo/channel.hpp"
#include "losmimo/formulas.hpp"
#include "losmimo/geometry.hpp"
#include "losmimo/modes.hpp"

namespace losmimo {

// Quasi-continuous line sampled at `sample_spacing` (must not exceed lambda/2)
struct MimoLine
{
    double sample_spacing;
};

struct HalfWavelengthArray
{
};

struct OptimallySpacedArray
{
};

// Sub-arrays centered on a Rayleigh-spaced grid. Elements inside a sub-array sit
// `element_spacing` apart; 0 means lambda/2, filled in by synthesize().
struct SubArrayOfArrays
{
    int elements_per_subarray = 4;
    double element_spacing = 0.0;
};

using ArchitectureKind = std::variant<MimoLine, HalfWavelengthArray, OptimallySpacedArray, SubArrayOfArrays>;

std::string_view kind_name(const ArchitectureKind &kind);

// For SubArrayOfArrays the apertures describe the sub-array centers.
struct Architecture
{
    ArchitectureKind kind;
    Aperture tx;
    Aperture rx;
    std::vector<std::string> warnings;

    std::vector<double> tx_positions() const;
    std::vector<double> rx_positions() const;
    int element_count_tx() const;
    int element_count_rx() const;
};

// Rayleigh spacing sqrt(lambda D / N); N >= 2
double optimal_spacing(double wavelength, double distance, int n);

// Receive spacing completing d_T d_R = lambda D / N for a given transmit spacing
double optimal_spacing_asymmetric(double wavelength, double distance, int n, double tx_spacing);

// Mode-limited RF chain count L_T L_R / (lambda D), as needed by lines and optimally spaced arrays
double rf_chains_mode_limited(double tx_length, double rx_length, double wavelength, double distance);

// Element-limited RF chain count 2 L_T / lambda + 2 L_R / lambda of half-wavelength arrays
double rf_chains_half_wavelength(double tx_length, double rx_length, double wavelength);

struct RfChainCount
{
    int tx = 1;
    int rx = 1;
    int total = 1;            // figure compared across architectures
    double continuous = 1.0;  // unrounded figure behind `total`
    DofFormulaResult modes;   // mode-count estimate for the architecture
};

RfChainCount rf_chain_counts(const Architecture &arch, const LinkGeometry &geom);

struct FixedLengths
{
    double tx;
    double rx;
};

struct FixedModes
{
    int modes;
};

using DesignConstraint = std::variant<FixedLengths, FixedModes>;

// Build an architecture of the given kind. Infeasible optimal layouts (no two elements fit)
// come back as a single-element architecture with a warning instead of an error.
Architecture synthesize(const ArchitectureKind &kind, const LinkGeometry &geom, const DesignConstraint &constraint);

// Largest N >= 2 whose Rayleigh layout fits the lengths, or 1 if none does
int max_orthogonal_count(double tx_length, double rx_length, double wavelength, double distance);

// Per-sub-array boresight combining: W_rx^H G W_tx with uniform weights 1/sqrt(P) per sub-array.
// Returns the channel unchanged for the other kinds.
Eigen::MatrixXcd effective_channel(const Architecture &arch, const ChannelMatrix &channel);

struct ArchitectureReport
{
    std::string kind;
    int n_tx = 1;
    int n_rx = 1;
    double l_tx = 0.0;
    double l_rx = 0.0;
    double spacing = 0.0;
    int dof_numerical = 0;
    DofFormulaResult dof_formula;
    int rf_chains = 1;
    double bf_gain_proxy_db = 0.0; // 10 log10(n_tx), ideal coherent combining
    std::vector<std::string> warnings;
};

struct CompareOptions
{
    double sample_spacing = 0.0; // 0 selects lambda/4
    int subarray_elements = 4;
    double threshold_db = kDefaultThresholdDb;
    double region_factor = kGeometricNearFieldFactor;
    ChannelOptions channel;
};

ArchitectureReport evaluate(const Architecture &arch, const LinkGeometry &geom, const CompareOptions &options = {});

// One report per architecture at equal physical apertures, in the order
// MimoLine, HalfWavelengthArray, OptimallySpacedArray, SubArrayOfArrays.
std::vector<ArchitectureReport> compare(const LinkGeometry &geom, double tx_length, double rx_length,
                                        const CompareOptions &options = {});

} // namespace losmimo

#endif
