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

#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "losmimo/design.hpp"
#include "losmimo/errors.hpp"
#include "losmimo/report.hpp"
#include "oracle.hpp"

using namespace losmimo;

TEST_CASE("optimal spacing")
{
    CHECK(optimal_spacing(0.003, 100, 4) == doctest::Approx(0.27386127875258306).epsilon(1e-12));
    CHECK(optimal_spacing(0.003, 25, 4) == doctest::Approx(0.13693063937629153).epsilon(1e-12));
    CHECK_THROWS_AS(optimal_spacing(0.003, 100, 1), DomainError);
    CHECK_THROWS_AS(optimal_spacing(0.0, 100, 4), DomainError);

    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> logu(-1, 3);
    for (int i = 0; i < 200; ++i)
    {
        const double D = std::pow(10, logu(rng));
        const int n = 2 + i % 30;
        REQUIRE(optimal_spacing(0.003, 4 * D, n) == 2 * optimal_spacing(0.003, D, n));
    }
}

TEST_CASE("asymmetric optimal spacing")
{
    CHECK(optimal_spacing_asymmetric(0.003, 100, 4, 0.15) == doctest::Approx(0.5).epsilon(1e-12));
    const double d = optimal_spacing(0.003, 100, 4);
    CHECK(optimal_spacing_asymmetric(0.003, 100, 4, d) == doctest::Approx(d).epsilon(1e-14));

    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(0.01, 2.0);
    for (int i = 0; i < 100; ++i)
    {
        const double dt = u(rng);
        const double dr = optimal_spacing_asymmetric(0.003, 50, 6, dt);
        REQUIRE(dt * dr == doctest::Approx(0.003 * 50 / 6).epsilon(1e-14));
    }
    CHECK_THROWS_AS(optimal_spacing_asymmetric(0.003, 100, 4, 0.0), DomainError);
}

TEST_CASE("Rayleigh spacing is sparse when D > N lambda")
{
    std::mt19937_64 rng(14);
    std::uniform_real_distribution<double> logu(-4, -1);
    std::uniform_int_distribution<int> cnt(2, 64);
    for (int i = 0; i < 1000; ++i)
    {
        const double lambda = std::pow(10, logu(rng));
        const int n = cnt(rng);
        const double D = n * lambda * (1.0 + 100.0 * std::uniform_real_distribution<double>(1e-6, 1)(rng));
        REQUIRE(optimal_spacing(lambda, D, n) > lambda);
    }
}

TEST_CASE("RF chain counts")
{
    const LinkGeometry geom(0.003, 100.0);

    CHECK(rf_chains_half_wavelength(1, 1, 0.003) == doctest::Approx(1333.3333333333333).epsilon(1e-12));
    CHECK(std::lround(rf_chains_half_wavelength(1, 1, 0.003)) == 1333);
    CHECK(rf_chains_mode_limited(1, 1, 0.003, 100) == doctest::Approx(3.3333333333333333));
    CHECK(rf_chains_mode_limited(1, 1, 0.003, 100) <= rf_chains_half_wavelength(1, 1, 0.003));

    const Architecture opt{OptimallySpacedArray{}, Aperture::evenly_spaced(1, 5), Aperture::evenly_spaced(1, 5), {}};
    const auto c_opt = rf_chain_counts(opt, geom);
    CHECK(c_opt.total == 3);
    CHECK(c_opt.modes.value == doctest::Approx(3.3333333333333333));

    const Architecture line{MimoLine{0.00075}, sample_continuous(1, 0.00075), sample_continuous(1, 0.00075), {}};
    CHECK(rf_chain_counts(line, geom).total == 3);

    const auto half = synthesize(HalfWavelengthArray{}, geom, FixedLengths{1, 1});
    const auto c_half = rf_chain_counts(half, geom);
    CHECK(c_half.tx == 667);
    CHECK(c_half.rx == 667);
    CHECK(c_half.total == 1332); // lengths are 666 * lambda/2
    CHECK(c_opt.continuous <= c_half.continuous);

    const auto sub = synthesize(SubArrayOfArrays{4, 0.0}, geom, FixedModes{4});
    CHECK(rf_chain_counts(sub, geom).total == 4);
}

TEST_CASE("RF chain inequality over random Fresnel geometries")
{
    std::mt19937_64 rng(15);
    std::uniform_real_distribution<double> logl(-2, 1), logw(-4, -1);
    for (int i = 0; i < 1000; ++i)
    {
        const double lt = std::pow(10, logl(rng)), lr = std::pow(10, logl(rng));
        const double lambda = std::pow(10, logw(rng));
        const double floor_d = std::max(10 * std::max(lt, lr), lt * lr / (2 * (lt + lr)));
        const double D = floor_d * (1 + 10 * std::uniform_real_distribution<double>(0, 1)(rng));
        REQUIRE(rf_chains_mode_limited(lt, lr, lambda, D) <= rf_chains_half_wavelength(lt, lr, lambda));
    }
}

TEST_CASE("synthesize from a mode count")
{
    const LinkGeometry geom(0.003, 100.0);
    const auto a = synthesize(OptimallySpacedArray{}, geom, FixedModes{4});
    CHECK(a.tx.count() == 4);
    CHECK(a.tx.spacing() == doctest::Approx(0.27386127875258306).epsilon(1e-12));
    CHECK(a.tx.length() == doctest::Approx(0.8215838362577492).epsilon(1e-12));
    CHECK(a.warnings.empty());
    CHECK_THROWS_AS(synthesize(OptimallySpacedArray{}, geom, FixedModes{1}), DomainError);

    const auto line = synthesize(MimoLine{0.00075}, geom, FixedModes{4});
    CHECK(line.tx.length() == doctest::Approx(std::sqrt(4 * 0.003 * 100)));
    CHECK_THROWS_AS(synthesize(MimoLine{0.002}, geom, FixedModes{4}), DomainError);
}

TEST_CASE("synthesize at fixed lengths")
{
    const LinkGeometry geom(0.003, 100.0);

    const auto half = synthesize(HalfWavelengthArray{}, geom, FixedLengths{1, 1});
    CHECK(half.tx.count() == 667);
    CHECK(half.tx.spacing() == doctest::Approx(0.0015));

    const auto tiny = synthesize(OptimallySpacedArray{}, geom, FixedLengths{0.1, 0.1});
    CHECK(tiny.tx.count() == 1);
    CHECK(tiny.rx.count() == 1);
    CHECK(tiny.warnings.size() == 1);

    const auto opt = synthesize(OptimallySpacedArray{}, geom, FixedLengths{1, 1});
    CHECK(opt.tx.count() == 5);
    CHECK(opt.tx.length() == 1.0);
    CHECK(opt.tx.spacing() == 0.25);

    const auto line = synthesize(MimoLine{0.00075}, geom, FixedLengths{0.03, 0.06});
    CHECK(line.tx.count() == 41);
    CHECK(line.rx.count() == 81);

    // the fixed-length element count is the integer part of the orthogonality-preserving maximum
    std::mt19937_64 rng(16);
    std::uniform_real_distribution<double> logl(-1.5, 0.5), logd(0, 3);
    for (int i = 0; i < 500; ++i)
    {
        const double lt = std::pow(10, logl(rng)), lr = std::pow(10, logl(rng)), D = std::pow(10, logd(rng));
        const int n = max_orthogonal_count(lt, lr, 0.003, D);
        const int expected = static_cast<int>(std::floor(dof_orthogonal_max(lt, lr, 0.003, D).value));
        REQUIRE(n == (expected >= 2 ? expected : 1));
        if (n >= 2 && lt == lr)
            REQUIRE((n - 1) * optimal_spacing(0.003, D, n) <= lt * (1 + 1e-12));
    }
}

TEST_CASE("sub-array layout")
{
    const LinkGeometry geom(0.003, 100.0);
    const auto arch = synthesize(SubArrayOfArrays{3, 0.0}, geom, FixedModes{4});
    CHECK(arch.element_count_tx() == 12);
    const auto x = arch.tx_positions();
    REQUIRE(x.size() == 12);
    const double d = optimal_spacing(0.003, 100, 4);
    CHECK(x[1] - x[0] == doctest::Approx(0.0015));
    CHECK(x[4] - x[1] == doctest::Approx(d)); // sub-array centers
    CHECK(std::get<SubArrayOfArrays>(arch.kind).element_spacing == 0.0015);
}

TEST_CASE("Rayleigh-spaced arrays are well conditioned")
{
    for (int n = 2; n <= 8; ++n)
    {
        const double lambda = 0.003;
        for (double D : {10.0, 100.0, 1000.0})
        {
            if (D < 20 * (n - 1) * optimal_spacing(lambda, D, n))
                continue;
            const auto a = Aperture::optimal(n, lambda, D);
            const auto g = oracle::green_matrix(a.positions(), a.positions(), lambda, D);
            const auto sv = oracle::jacobi_singular_values(g);
            REQUIRE(sv.front() / sv.back() <= 1.05);
            REQUIRE(condition_number(singular_values(g)) == doctest::Approx(sv.front() / sv.back()).epsilon(1e-9));
        }
    }
}

TEST_CASE("sub-array beamforming keeps one mode per sub-array")
{
    for (int k : {2, 3, 4, 6})
        for (int p : {2, 4, 8})
        {
            const LinkGeometry geom(0.003, 100.0);
            const auto arch = synthesize(SubArrayOfArrays{p, 0.0}, geom, FixedModes{k});
            const auto ch = channel_matrix(arch.tx_positions(), arch.rx_positions(), geom);
            const Eigen::MatrixXcd eff = effective_channel(arch, ch);
            REQUIRE(eff.rows() == k);
            REQUIRE(eff.cols() == k);
            const int strong = effective_dof(singular_values(eff)).strong_count;
            REQUIRE(std::abs(strong - k) <= 1);
        }
}

TEST_CASE("compare at equal apertures")
{
    const LinkGeometry geom(0.003, 20.0);
    const auto reports = compare(geom, 0.3, 0.3);
    REQUIRE(reports.size() == 4);
    CHECK(reports[0].kind == "MimoLine");
    CHECK(reports[1].kind == "HalfWavelengthArray");
    CHECK(reports[2].kind == "OptimallySpacedArray");
    CHECK(reports[3].kind == "SubArrayOfArrays");

    for (const auto &r : reports)
    {
        CHECK(r.dof_formula.value == doctest::Approx(1.5));
        CHECK(r.dof_formula.rounded == 2);
        CHECK(r.l_tx == doctest::Approx(0.3));
        CHECK(r.n_tx > 0);
        CHECK(r.rf_chains > 0);
    }

    CHECK(reports[1].n_tx == 201);
    CHECK(reports[1].bf_gain_proxy_db == doctest::Approx(23.03196057420489).epsilon(1e-12));
    CHECK(reports[2].n_tx == 3);
    CHECK(reports[2].bf_gain_proxy_db == doctest::Approx(4.771212547196624).epsilon(1e-12));
    CHECK(reports[2].bf_gain_proxy_db < reports[1].bf_gain_proxy_db);
    CHECK(reports[1].rf_chains == 400);
    CHECK(reports[2].rf_chains == 2);

    // numerical counts cross-checked against the Jacobi oracle on the same layouts
    const auto opt = synthesize(OptimallySpacedArray{}, geom, FixedLengths{0.3, 0.3});
    const auto sv = oracle::jacobi_singular_values(
        oracle::green_matrix(opt.tx.positions(), opt.rx.positions(), 0.003, 20.0));
    CHECK(effective_dof(sv).strong_count == reports[2].dof_numerical);
}

TEST_CASE("compare in the far field")
{
    const auto reports = compare(LinkGeometry(0.003, 1e6), 0.3, 0.3);
    for (const auto &r : reports)
        CHECK(r.dof_numerical == 1);
}

TEST_CASE("compare reports resource errors by architecture")
{
    CompareOptions opt;
    opt.channel.max_entries = 1000;
    try
    {
        compare(LinkGeometry(0.003, 20.0), 0.3, 0.3, opt);
        FAIL("expected a resource error");
    }
    catch (const ResourceError &e)
    {
        CHECK(std::string(e.what()).rfind("MimoLine", 0) == 0);
    }
}

TEST_CASE("report json has exactly the published fields")
{
    const auto reports = compare(LinkGeometry(0.003, 20.0), 0.3, 0.3);
    const auto j = to_json(reports[2]);
    std::set<std::string> keys;
    for (const auto &[k, v] : j.items())
        keys.insert(k);
    const std::set<std::string> expected{"kind",          "n_tx",        "n_rx",           "l_tx_m",
                                         "l_rx_m",        "spacing_m",   "dof_numerical",  "dof_formula",
                                         "dof_formula_id", "rf_chains",  "bf_gain_proxy_db", "warnings"};
    CHECK(keys == expected);
    CHECK(j["dof_formula_id"] == "ParaxialCapped8");
    CHECK(j["warnings"].is_array());
}
