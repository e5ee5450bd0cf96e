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

#ifndef LOSMIMO_GEOMETRY_HPP
#define LOSMIMO_GEOMETRY_HPP

#include <string_view>
#include <variant>
#include <vector>

namespace losmimo {

inline constexpr double kSpeedOfLight = 299792458.0; // m/s, exact
inline constexpr double kPi = 3.14159265358979323846;

// Default factor for the geometric near-field test D < factor * max(L_T, L_R)
inline constexpr double kGeometricNearFieldFactor = 10.0;

// Two parallel, center-aligned lines separated by `distance`, operated at `wavelength`.
class LinkGeometry
{
public:
    LinkGeometry(double wavelength, double distance);

    static LinkGeometry from_frequency(double frequency, double distance);

    double wavelength() const { return wavelength_; }
    double distance() const { return distance_; }
    double frequency() const { return kSpeedOfLight / wavelength_; }
    double wavenumber() const { return 2.0 * kPi / wavelength_; }

private:
    double wavelength_;
    double distance_;
};

// Spacing policies. Each records how an aperture's element pitch was chosen.
struct HalfWavelength
{
    double wavelength;
};

struct OptimalSpacing // Rayleigh spacing sqrt(lambda * D / modes)
{
    double wavelength;
    double distance;
    int modes;
};

struct CustomSpacing
{
    double spacing;
};

struct ContinuousSampled // quasi-continuous line sampled every `delta`
{
    double delta;
};

using SpacingPolicy = std::variant<HalfWavelength, OptimalSpacing, CustomSpacing, ContinuousSampled>;

// A linear aperture of `count` evenly placed elements spanning `length`, centered at 0.
class Aperture
{
public:
    static Aperture half_wavelength(int count, double wavelength);
    static Aperture optimal(int count, double wavelength, double distance);
    static Aperture custom(int count, double spacing);
    static Aperture evenly_spaced(double length, int count);
    static Aperture continuous(double length, int count, double delta);

    double length() const { return length_; }
    int count() const { return count_; }
    const SpacingPolicy &policy() const { return policy_; }

    // Element pitch L/(count-1); 0 for a single element
    double spacing() const;

    std::vector<double> positions() const;

private:
    Aperture(double length, int count, SpacingPolicy policy);

    double length_;
    int count_;
    SpacingPolicy policy_;
};

// Element coordinates along the line, strictly increasing and antisymmetric about 0
std::vector<double> element_positions(const Aperture &aperture);

// Fraunhofer (far-field) distance 2 L^2 / lambda
double fraunhofer_distance(double length, double wavelength);

enum class FieldRegion
{
    FarField,
    RadiatingNearField,
    GeometricNearField
};

std::string_view to_string(FieldRegion region);

// FarField if D >= r_ff(L_T + L_R); GeometricNearField if D < factor * max(L_T, L_R);
// RadiatingNearField otherwise.
FieldRegion classify_region(const LinkGeometry &geom, double tx_length, double rx_length,
                            double factor = kGeometricNearFieldFactor);
FieldRegion classify_region(const LinkGeometry &geom, const Aperture &tx, const Aperture &rx,
                            double factor = kGeometricNearFieldFactor);

} // namespace losmimo

#endif
