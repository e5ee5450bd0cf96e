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

#include "losmimo/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "losmimo/errors.hpp"

namespace losmimo {

namespace {

void require_positive(double value, const char *what)
{
    if (!(value > 0.0) || !std::isfinite(value))
        throw DomainError(std::string(what) + " must be positive and finite");
}

void require_count(int count)
{
    if (count < 1)
        throw DomainError("element count must be at least 1");
}

} // namespace

LinkGeometry::LinkGeometry(double wavelength, double distance)
    : wavelength_(wavelength), distance_(distance)
{
    require_positive(wavelength, "wavelength");
    require_positive(distance, "distance");
}

LinkGeometry LinkGeometry::from_frequency(double frequency, double distance)
{
    require_positive(frequency, "frequency");
    return LinkGeometry(kSpeedOfLight / frequency, distance);
}

Aperture::Aperture(double length, int count, SpacingPolicy policy)
    : length_(length), count_(count), policy_(policy)
{
    require_count(count);
    if (!(length >= 0.0) || !std::isfinite(length))
        throw DomainError("aperture length must be non-negative and finite");
}

Aperture Aperture::half_wavelength(int count, double wavelength)
{
    require_count(count);
    require_positive(wavelength, "wavelength");
    return Aperture((count - 1) * wavelength / 2.0, count, HalfWavelength{wavelength});
}

Aperture Aperture::optimal(int count, double wavelength, double distance)
{
    require_count(count);
    require_positive(wavelength, "wavelength");
    require_positive(distance, "distance");
    const double d = std::sqrt(wavelength * distance / count);
    return Aperture((count - 1) * d, count, OptimalSpacing{wavelength, distance, count});
}

Aperture Aperture::custom(int count, double spacing)
{
    require_count(count);
    require_positive(spacing, "spacing");
    return Aperture((count - 1) * spacing, count, CustomSpacing{spacing});
}

Aperture Aperture::evenly_spaced(double length, int count)
{
    require_count(count);
    const double d = count > 1 ? length / (count - 1) : 0.0;
    return Aperture(length, count, CustomSpacing{d});
}

Aperture Aperture::continuous(double length, int count, double delta)
{
    require_positive(delta, "sample spacing");
    return Aperture(length, count, ContinuousSampled{delta});
}

double Aperture::spacing() const
{
    return count_ > 1 ? length_ / (count_ - 1) : 0.0;
}

std::vector<double> Aperture::positions() const
{
    std::vector<double> x(static_cast<std::size_t>(count_), 0.0);
    if (count_ == 1)
        return x;

    // (2i - (n-1)) * d / 2 keeps the integer factor exact, so x[i] == -x[n-1-i] bit for bit
    const double half_step = spacing() / 2.0;
    for (int i = 0; i < count_; ++i)
        x[static_cast<std::size_t>(i)] = static_cast<double>(2 * i - (count_ - 1)) * half_step;
    return x;
}

std::vector<double> element_positions(const Aperture &aperture)
{
    return aperture.positions();
}

double fraunhofer_distance(double length, double wavelength)
{
    require_positive(wavelength, "wavelength");
    if (!(length >= 0.0))
        throw DomainError("length must be non-negative");
    return 2.0 * length * length / wavelength;
}

std::string_view to_string(FieldRegion region)
{
    switch (region)
    {
    case FieldRegion::FarField:
        return "FarField";
    case FieldRegion::RadiatingNearField:
        return "RadiatingNearField";
    case FieldRegion::GeometricNearField:
        return "GeometricNearField";
    }
    return "Unknown";
}

FieldRegion classify_region(const LinkGeometry &geom, double tx_length, double rx_length, double factor)
{
    require_positive(factor, "geometric near-field factor");
    const double D = geom.distance();
    if (D >= fraunhofer_distance(tx_length + rx_length, geom.wavelength()))
        return FieldRegion::FarField;
    if (D < factor * std::max(tx_length, rx_length))
        return FieldRegion::GeometricNearField;
    return FieldRegion::RadiatingNearField;
}

FieldRegion classify_region(const LinkGeometry &geom, const Aperture &tx, const Aperture &rx, double factor)
{
    return classify_region(geom, tx.length(), rx.length(), factor);
}

} // namespace losmimo
