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

#include "losmimo/design.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "losmimo/errors.hpp"

namespace losmimo {

namespace {

template <class... Ts>
struct overloaded : Ts...
{
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_positive(double value, const char *what)
{
    if (!(value > 0.0) || !std::isfinite(value))
        throw DomainError(std::string(what) + " must be positive and finite");
}

std::vector<double> expand_subarrays(const Aperture &centers, const SubArrayOfArrays &sub)
{
    const int p = sub.elements_per_subarray;
    std::vector<double> x;
    x.reserve(static_cast<std::size_t>(centers.count() * p));
    for (double c : centers.positions())
        for (int i = 0; i < p; ++i)
            x.push_back(c + static_cast<double>(2 * i - (p - 1)) * sub.element_spacing / 2.0);
    return x;
}

int half_wavelength_count(double length, double wavelength)
{
    return static_cast<int>(std::floor(2.0 * length / wavelength + 1e-9)) + 1;
}

Aperture line_aperture(double length, double delta, double wavelength)
{
    require_positive(delta, "sample spacing");
    if (delta > wavelength / 2.0 * (1.0 + 1e-12))
        throw DomainError("MIMO-line sample spacing must not exceed lambda/2");
    return sample_continuous(length, delta);
}

// Zero-length apertures leave only the element-count bound
DofFormulaResult rank_cap(int n, int m)
{
    DofFormulaResult r;
    r.value = rank_upper_bound(n, m);
    r.rounded = rank_upper_bound(n, m);
    r.id = FormulaId::RankCap7;
    return r;
}

// Single formula estimate for an architecture's element layout
DofFormulaResult formula_for(const Architecture &arch, const LinkGeometry &geom, double region_factor)
{
    const double lt = arch.tx.length();
    const double lr = arch.rx.length();
    const int n = arch.tx.count();
    const int m = arch.rx.count();
    const double lambda = geom.wavelength();
    const double D = geom.distance();

    if (!(lt > 0.0) || !(lr > 0.0))
        return rank_cap(n, m);

    const bool geometric = classify_region(geom, lt, lr, region_factor) == FieldRegion::GeometricNearField;
    if (std::holds_alternative<MimoLine>(arch.kind))
        return geometric ? dof_geometric(lt, lr, lambda, D) : dof_paraxial(lt, lr, lambda, D);
    return geometric ? dof_geometric_capped(lt, lr, lambda, D, n, m) : dof_paraxial_capped(lt, lr, lambda, D, n, m);
}

void append_unique(std::vector<std::string> &dst, const std::vector<std::string> &src)
{
    for (const auto &w : src)
        if (std::find(dst.begin(), dst.end(), w) == dst.end())
            dst.push_back(w);
}

} // namespace

std::string_view kind_name(const ArchitectureKind &kind)
{
    return std::visit(overloaded{
                          [](const MimoLine &) { return std::string_view("MimoLine"); },
                          [](const HalfWavelengthArray &) { return std::string_view("HalfWavelengthArray"); },
                          [](const OptimallySpacedArray &) { return std::string_view("OptimallySpacedArray"); },
                          [](const SubArrayOfArrays &) { return std::string_view("SubArrayOfArrays"); },
                      },
                      kind);
}

std::vector<double> Architecture::tx_positions() const
{
    if (const auto *sub = std::get_if<SubArrayOfArrays>(&kind))
        return expand_subarrays(tx, *sub);
    return tx.positions();
}

std::vector<double> Architecture::rx_positions() const
{
    if (const auto *sub = std::get_if<SubArrayOfArrays>(&kind))
        return expand_subarrays(rx, *sub);
    return rx.positions();
}

int Architecture::element_count_tx() const
{
    if (const auto *sub = std::get_if<SubArrayOfArrays>(&kind))
        return tx.count() * sub->elements_per_subarray;
    return tx.count();
}

int Architecture::element_count_rx() const
{
    if (const auto *sub = std::get_if<SubArrayOfArrays>(&kind))
        return rx.count() * sub->elements_per_subarray;
    return rx.count();
}

double optimal_spacing(double wavelength, double distance, int n)
{
    require_positive(wavelength, "wavelength");
    require_positive(distance, "distance");
    if (n < 2)
        throw DomainError("optimal spacing needs at least 2 elements");
    return std::sqrt(wavelength * distance / n);
}

double optimal_spacing_asymmetric(double wavelength, double distance, int n, double tx_spacing)
{
    require_positive(wavelength, "wavelength");
    require_positive(distance, "distance");
    require_positive(tx_spacing, "transmit spacing");
    if (n < 1)
        throw DomainError("element count must be at least 1");
    return wavelength * distance / (n * tx_spacing);
}

double rf_chains_mode_limited(double tx_length, double rx_length, double wavelength, double distance)
{
    require_positive(wavelength, "wavelength");
    require_positive(distance, "distance");
    return tx_length * rx_length / (wavelength * distance);
}

double rf_chains_half_wavelength(double tx_length, double rx_length, double wavelength)
{
    require_positive(wavelength, "wavelength");
    return 2.0 * tx_length / wavelength + 2.0 * rx_length / wavelength;
}

int max_orthogonal_count(double tx_length, double rx_length, double wavelength, double distance)
{
    require_positive(wavelength, "wavelength");
    require_positive(distance, "distance");
    const double product = tx_length * rx_length;
    if (!(product > 0.0))
        return 1;

    // (N-1)^2 lambda D / N <= L_T L_R; the largest real root is the orthogonal maximum
    const double s = product / (2.0 * wavelength * distance);
    const double root = 1.0 + s + std::sqrt(s * (s + 2.0));
    for (auto n = static_cast<long long>(root) + 2; n >= 2; --n)
    {
        const double need = static_cast<double>((n - 1) * (n - 1)) * wavelength * distance / static_cast<double>(n);
        if (need <= product * (1.0 + 1e-12))
            return static_cast<int>(n);
    }
    return 1;
}

RfChainCount rf_chain_counts(const Architecture &arch, const LinkGeometry &geom)
{
    const double lt = arch.tx.length();
    const double lr = arch.rx.length();

    // Chain accounting uses the paraxial estimate regardless of region
    RfChainCount out;
    if (!(lt > 0.0) || !(lr > 0.0))
        out.modes = rank_cap(arch.tx.count(), arch.rx.count());
    else if (std::holds_alternative<MimoLine>(arch.kind))
        out.modes = dof_paraxial(lt, lr, geom.wavelength(), geom.distance());
    else
        out.modes = dof_paraxial_capped(lt, lr, geom.wavelength(), geom.distance(), arch.tx.count(), arch.rx.count());

    std::visit(overloaded{
                   [&](const HalfWavelengthArray &) {
                       out.tx = arch.tx.count();
                       out.rx = arch.rx.count();
                       out.continuous = rf_chains_half_wavelength(arch.tx.length(), arch.rx.length(),
                                                                  geom.wavelength());
                       out.total = static_cast<int>(std::lround(out.continuous));
                   },
                   [&](const SubArrayOfArrays &) {
                       out.tx = arch.tx.count();
                       out.rx = arch.rx.count();
                       out.total = std::min(out.tx, out.rx);
                       out.continuous = out.total;
                   },
                   [&](const auto &) {
                       out.tx = out.rx = out.total = out.modes.rounded;
                       out.continuous = out.modes.value;
                   },
               },
               arch.kind);
    return out;
}

Architecture synthesize(const ArchitectureKind &kind_in, const LinkGeometry &geom, const DesignConstraint &constraint)
{
    const double lambda = geom.wavelength();
    const double D = geom.distance();

    ArchitectureKind kind = kind_in;
    if (auto *sub = std::get_if<SubArrayOfArrays>(&kind))
    {
        if (sub->elements_per_subarray < 1)
            throw DomainError("sub-arrays need at least one element");
        if (sub->element_spacing == 0.0)
            sub->element_spacing = lambda / 2.0;
        require_positive(sub->element_spacing, "sub-array element spacing");
    }

    if (const auto *fixed = std::get_if<FixedModes>(&constraint))
    {
        const int r = fixed->modes;
        if (r < 2)
            throw DomainError("a mode-count design needs at least 2 modes");
        // Equal line lengths carrying r paraxial modes
        const double length = std::sqrt(r * lambda * D);
        return std::visit(
            overloaded{
                [&](const MimoLine &line) {
                    const Aperture a = line_aperture(length, line.sample_spacing, lambda);
                    return Architecture{kind, a, a, {}};
                },
                [&](const HalfWavelengthArray &) {
                    const Aperture a = Aperture::half_wavelength(half_wavelength_count(length, lambda), lambda);
                    return Architecture{kind, a, a, {}};
                },
                [&](const auto &) {
                    const Aperture a = Aperture::optimal(r, lambda, D);
                    return Architecture{kind, a, a, {}};
                },
            },
            kind);
    }

    const auto &lengths = std::get<FixedLengths>(constraint);
    if (!(lengths.tx >= 0.0) || !(lengths.rx >= 0.0))
        throw DomainError("aperture lengths must be non-negative");

    return std::visit(
        overloaded{
            [&](const MimoLine &line) {
                return Architecture{kind, line_aperture(lengths.tx, line.sample_spacing, lambda),
                                    line_aperture(lengths.rx, line.sample_spacing, lambda), {}};
            },
            [&](const HalfWavelengthArray &) {
                return Architecture{kind, Aperture::half_wavelength(half_wavelength_count(lengths.tx, lambda), lambda),
                                    Aperture::half_wavelength(half_wavelength_count(lengths.rx, lambda), lambda), {}};
            },
            [&](const auto &) {
                const int n = max_orthogonal_count(lengths.tx, lengths.rx, lambda, D);
                if (n < 2)
                {
                    const Aperture single = Aperture::evenly_spaced(0.0, 1);
                    return Architecture{kind, single, single,
                                        {"infeasible: apertures too short for two Rayleigh-spaced elements; "
                                         "degenerate single-element design"}};
                }
                return Architecture{kind, Aperture::evenly_spaced(lengths.tx, n),
                                    Aperture::evenly_spaced(lengths.rx, n), {}};
            },
        },
        kind);
}

Eigen::MatrixXcd effective_channel(const Architecture &arch, const ChannelMatrix &channel)
{
    const auto *sub = std::get_if<SubArrayOfArrays>(&arch.kind);
    if (sub == nullptr)
        return channel.entries();

    const Eigen::Index p = sub->elements_per_subarray;
    const Eigen::Index kt = arch.tx.count();
    const Eigen::Index kr = arch.rx.count();
    if (channel.cols() != kt * p || channel.rows() != kr * p)
        throw DomainError("channel matrix does not match the sub-array layout");

    const double w = 1.0 / std::sqrt(static_cast<double>(p));
    Eigen::MatrixXcd eff(kr, kt);
    for (Eigen::Index j = 0; j < kt; ++j)
        for (Eigen::Index i = 0; i < kr; ++i)
            eff(i, j) = w * w * channel.entries().block(i * p, j * p, p, p).sum();
    return eff;
}

ArchitectureReport evaluate(const Architecture &arch, const LinkGeometry &geom, const CompareOptions &options)
{
    ArchitectureReport rep;
    rep.kind = std::string(kind_name(arch.kind));
    rep.n_tx = arch.element_count_tx();
    rep.n_rx = arch.element_count_rx();
    rep.l_tx = arch.tx.length();
    rep.l_rx = arch.rx.length();
    rep.spacing = arch.tx.spacing();

    ChannelMatrix channel = [&] {
        try
        {
            return channel_matrix(arch.tx_positions(), arch.rx_positions(), geom, options.channel);
        }
        catch (const ResourceError &e)
        {
            throw ResourceError(rep.kind + ": " + e.what());
        }
    }();
    const std::vector<double> sv = singular_values(effective_channel(arch, channel));
    rep.dof_numerical = effective_dof(sv, options.threshold_db).strong_count;

    rep.dof_formula = formula_for(arch, geom, options.region_factor);
    const RfChainCount chains = rf_chain_counts(arch, geom);
    rep.rf_chains = chains.total;
    rep.bf_gain_proxy_db = 10.0 * std::log10(static_cast<double>(rep.n_tx));

    rep.warnings = arch.warnings;
    append_unique(rep.warnings, rep.dof_formula.warnings);
    append_unique(rep.warnings, chains.modes.warnings);
    return rep;
}

std::vector<ArchitectureReport> compare(const LinkGeometry &geom, double tx_length, double rx_length,
                                        const CompareOptions &options)
{
    const double delta = options.sample_spacing > 0.0 ? options.sample_spacing : geom.wavelength() / 4.0;
    const FixedLengths lengths{tx_length, rx_length};
    const ArchitectureKind kinds[] = {
        MimoLine{delta},
        HalfWavelengthArray{},
        OptimallySpacedArray{},
        SubArrayOfArrays{options.subarray_elements, 0.0},
    };

    std::vector<ArchitectureReport> reports;
    reports.reserve(std::size(kinds));
    for (const auto &kind : kinds)
        reports.push_back(evaluate(synthesize(kind, geom, lengths), geom, options));
    return reports;
}

} // namespace losmimo
