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

#include "losmimo/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "losmimo/channel.hpp"
#include "losmimo/design.hpp"
#include "losmimo/errors.hpp"
#include "losmimo/format.hpp"
#include "losmimo/formulas.hpp"
#include "losmimo/geometry.hpp"
#include "losmimo/modes.hpp"
#include "losmimo/report.hpp"

namespace losmimo::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct OutputError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct Flags
{
    std::optional<double> wavelength;
    std::optional<double> frequency;
    std::optional<double> distance;
    std::optional<double> lt;
    std::optional<double> lr;
    std::optional<int> n;
    std::optional<int> m;
    std::optional<double> sample_spacing;
    std::string spacing = "line";
    int subarray_elements = 4;
    double threshold_db = kDefaultThresholdDb;
    double kappa = kGeometricNearFieldFactor;
    std::size_t budget = kDefaultMatrixBudget;
    bool fresnel = false;
    std::string format = "json";
    std::string output;

    // design
    std::optional<int> modes;

    // sweep
    std::string variable;
    double start = 0.0;
    double stop = 0.0;
    int points = 0;
    std::string scale = "linear";
    std::string metrics = "eq2";

    // modes
    std::string export_dir;
    bool export_all = false;
    std::string dump_matrix;
};

// Link parameters at one evaluation point; sweeps override one of them per row
struct LinkPoint
{
    double wavelength = 0.0;
    double distance = 0.0;
    std::optional<double> lt;
    std::optional<double> lr;
};

struct Layout
{
    std::string label;
    Architecture arch;
};

void add_link_flags(CLI::App &cmd, Flags &f)
{
    auto *wl = cmd.add_option("--wavelength", f.wavelength, "Wavelength in meters");
    auto *fr = cmd.add_option("--frequency", f.frequency, "Carrier frequency in hertz");
    wl->excludes(fr);
    cmd.add_option("--distance", f.distance, "Center-to-center distance in meters");
    cmd.add_option("--lt", f.lt, "Transmit aperture length in meters");
    cmd.add_option("--lr", f.lr, "Receive aperture length in meters (defaults to --lt)");
    cmd.add_option("--kappa", f.kappa, "Geometric near-field factor")->check(CLI::PositiveNumber);
    cmd.add_option("--format", f.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
    cmd.add_option("--output", f.output, "Write output to this path instead of stdout");
}

void add_array_flags(CLI::App &cmd, Flags &f)
{
    cmd.add_option("--n", f.n, "Transmit element (or sub-array) count")->check(CLI::PositiveNumber);
    cmd.add_option("--m", f.m, "Receive element (or sub-array) count")->check(CLI::PositiveNumber);
    cmd.add_option("--spacing", f.spacing, "line | half | optimal | subarray | custom:<m>");
    cmd.add_option("--sample-spacing", f.sample_spacing, "MIMO-line sample spacing in meters (default lambda/4)");
    cmd.add_option("--subarray-elements", f.subarray_elements, "Elements per sub-array")->check(CLI::PositiveNumber);
    cmd.add_option("--threshold-db", f.threshold_db, "Strong-mode threshold below the strongest mode");
    cmd.add_option("--budget", f.budget, "Maximum channel matrix entries");
    cmd.add_flag("--fresnel", f.fresnel, "Use the Fresnel phase approximation of the Green function");
}

double resolve_wavelength(const Flags &f)
{
    if (f.wavelength)
        return *f.wavelength;
    if (f.frequency)
    {
        if (!(*f.frequency > 0.0))
            throw DomainError("frequency must be positive");
        return kSpeedOfLight / *f.frequency;
    }
    throw UsageError("exactly one of --wavelength or --frequency is required");
}

double require_flag(const std::optional<double> &value, const char *name)
{
    if (!value)
        throw UsageError(std::string(name) + " is required");
    return *value;
}

LinkPoint base_point(const Flags &f, bool need_wavelength = true, bool need_distance = true)
{
    LinkPoint p;
    if (need_wavelength)
        p.wavelength = resolve_wavelength(f);
    if (need_distance)
        p.distance = require_flag(f.distance, "--distance");
    p.lt = f.lt;
    p.lr = f.lr ? f.lr : f.lt;
    return p;
}

ChannelOptions channel_options(const Flags &f)
{
    ChannelOptions o;
    o.model = f.fresnel ? GreenModel::Fresnel : GreenModel::Exact;
    o.max_entries = f.budget;
    return o;
}

int count_for(double length, double pitch)
{
    return static_cast<int>(std::floor(length / pitch + 1e-9)) + 1;
}

Layout build_layout(const Flags &f, const LinkPoint &p)
{
    const LinkGeometry geom(p.wavelength, p.distance);
    const std::string &s = f.spacing;

    auto lengths = [&] {
        return FixedLengths{require_flag(p.lt, "--lt"), require_flag(p.lr, "--lr")};
    };

    if (s == "line")
    {
        const double delta = f.sample_spacing.value_or(p.wavelength / 4.0);
        return {"MimoLine", synthesize(MimoLine{delta}, geom, lengths())};
    }
    if (s == "half")
    {
        if (f.n)
        {
            const Aperture tx = Aperture::half_wavelength(*f.n, p.wavelength);
            const Aperture rx = Aperture::half_wavelength(f.m.value_or(*f.n), p.wavelength);
            return {"HalfWavelengthArray", Architecture{HalfWavelengthArray{}, tx, rx, {}}};
        }
        return {"HalfWavelengthArray", synthesize(HalfWavelengthArray{}, geom, lengths())};
    }
    if (s == "optimal" || s == "subarray")
    {
        const ArchitectureKind kind = s == "optimal" ? ArchitectureKind{OptimallySpacedArray{}}
                                                     : ArchitectureKind{SubArrayOfArrays{f.subarray_elements, 0.0}};
        const std::string label(kind_name(kind));
        if (f.n)
        {
            if (f.m && *f.m != *f.n)
                throw DomainError("Rayleigh-spaced layouts need equal element counts (--n == --m)");
            return {label, synthesize(kind, geom, FixedModes{*f.n})};
        }
        return {label, synthesize(kind, geom, lengths())};
    }
    if (s.rfind("custom:", 0) == 0)
    {
        double pitch = 0.0;
        try
        {
            pitch = std::stod(s.substr(7));
        }
        catch (const std::exception &)
        {
            throw UsageError("--spacing custom:<m> needs a numeric spacing");
        }
        if (!(pitch > 0.0))
            throw DomainError("custom spacing must be positive");
        const int n = f.n ? *f.n : count_for(require_flag(p.lt, "--lt"), pitch);
        const int m = f.m ? *f.m : (f.n ? n : count_for(require_flag(p.lr, "--lr"), pitch));
        // Custom layouts share the plain-array code paths of the optimal kind
        return {"Custom", Architecture{OptimallySpacedArray{}, Aperture::custom(n, pitch), Aperture::custom(m, pitch), {}}};
    }
    throw UsageError("unknown --spacing '" + s + "'");
}

std::vector<double> layout_singular_values(const Layout &layout, const LinkGeometry &geom, const Flags &f)
{
    const ChannelMatrix g =
        channel_matrix(layout.arch.tx_positions(), layout.arch.rx_positions(), geom, channel_options(f));
    return singular_values(effective_channel(layout.arch, g));
}

json number_or_null(const std::optional<double> &v)
{
    if (!v || std::isnan(*v))
        return nullptr;
    return *v;
}

void append_warnings(std::vector<std::string> &dst, const std::vector<std::string> &src)
{
    for (const auto &w : src)
        if (std::find(dst.begin(), dst.end(), w) == dst.end())
            dst.push_back(w);
}

void emit(const std::string &text, const Flags &f, std::ostream &out)
{
    if (f.output.empty())
    {
        out << text;
        return;
    }
    std::ofstream file(f.output, std::ios::binary);
    if (!file)
        throw OutputError("cannot open output file '" + f.output + "'");
    file << text;
    if (!file)
        throw OutputError("failed writing output file '" + f.output + "'");
}

std::string render_object(const json &obj, const std::string &format)
{
    if (format == "json")
        return obj.dump(2) + "\n";

    std::ostringstream os;
    for (const auto &[key, value] : obj.items())
    {
        std::string text = value.is_string() ? value.get<std::string>() : value.dump();
        if (format == "csv")
            os << key << ',' << text << '\n';
        else
            os << std::left << std::setw(22) << key << text << '\n';
    }
    return os.str();
}

// Rows of string cells with a header; csv, json (array of objects) or aligned table
std::string render_rows(const std::vector<std::string> &header, const std::vector<std::vector<json>> &rows,
                        const std::string &format)
{
    auto cell_text = [](const json &v) -> std::string {
        if (v.is_string())
            return v.get<std::string>();
        if (v.is_null())
            return "nan";
        if (v.is_number_float())
            return format_number(v.get<double>());
        if (v.is_array())
        {
            std::string joined;
            for (const auto &item : v)
                joined += (joined.empty() ? "" : ";") + item.get<std::string>();
            return joined;
        }
        return v.dump();
    };

    if (format == "json")
    {
        json arr = json::array();
        for (const auto &row : rows)
        {
            json obj;
            for (std::size_t i = 0; i < header.size(); ++i)
                obj[header[i]] = row[i];
            arr.push_back(std::move(obj));
        }
        return arr.dump(2) + "\n";
    }

    std::vector<std::vector<std::string>> cells;
    for (const auto &row : rows)
    {
        std::vector<std::string> line;
        for (const auto &v : row)
            line.push_back(cell_text(v));
        cells.push_back(std::move(line));
    }

    std::ostringstream os;
    if (format == "csv")
    {
        for (std::size_t i = 0; i < header.size(); ++i)
            os << (i ? "," : "") << header[i];
        os << '\n';
        for (const auto &line : cells)
        {
            for (std::size_t i = 0; i < line.size(); ++i)
                os << (i ? "," : "") << line[i];
            os << '\n';
        }
        return os.str();
    }

    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i)
    {
        width[i] = header[i].size();
        for (const auto &line : cells)
            width[i] = std::max(width[i], line[i].size());
    }
    for (std::size_t i = 0; i < header.size(); ++i)
        os << (i ? "  " : "") << std::left << std::setw(static_cast<int>(width[i])) << header[i];
    os << '\n';
    for (const auto &line : cells)
    {
        for (std::size_t i = 0; i < line.size(); ++i)
            os << (i ? "  " : "") << std::left << std::setw(static_cast<int>(width[i])) << line[i];
        os << '\n';
    }
    return os.str();
}

// --- dof -------------------------------------------------------------------

json dof_report(const Flags &f)
{
    const LinkPoint p = base_point(f);
    const LinkGeometry geom(p.wavelength, p.distance);
    const Layout layout = build_layout(f, p);
    const Architecture &arch = layout.arch;

    const double lt = arch.tx.length();
    const double lr = arch.rx.length();
    const int n = arch.tx.count();
    const int m = arch.rx.count();
    const bool lengths_ok = lt > 0.0 && lr > 0.0;

    std::vector<std::string> warnings = arch.warnings;
    auto value_of = [&](auto &&compute) -> std::optional<double> {
        if (!lengths_ok)
            return std::nullopt;
        const DofFormulaResult r = compute();
        append_warnings(warnings, r.warnings);
        return r.value;
    };

    const double lambda = p.wavelength;
    const double D = p.distance;
    const auto eq2 = value_of([&] { return dof_paraxial(lt, lr, lambda, D); });
    const auto eq3 = value_of([&] { return dof_geometric(lt, lr, lambda, D); });
    const auto eq8 = value_of([&] { return dof_paraxial_capped(lt, lr, lambda, D, n, m); });
    const auto eq9 = value_of([&] { return dof_geometric_capped(lt, lr, lambda, D, n, m); });
    const auto eq10 = value_of([&] { return dof_infinite_rx(lt, lambda, n); });
    const auto eq12 = value_of([&] { return dof_orthogonal_max(lt, lr, lambda, D); });

    const std::vector<double> sv = layout_singular_values(layout, geom, f);
    const DofEstimate est = effective_dof(sv, f.threshold_db);

    json j;
    j["architecture"] = layout.label;
    j["wavelength_m"] = geom.wavelength();
    j["frequency_hz"] = geom.frequency();
    j["distance_m"] = geom.distance();
    j["l_tx_m"] = lt;
    j["l_rx_m"] = lr;
    j["n_tx"] = arch.element_count_tx();
    j["n_rx"] = arch.element_count_rx();
    j["region"] = std::string(to_string(classify_region(geom, lt, lr, f.kappa)));
    j["eq2"] = number_or_null(eq2);
    j["eq3"] = number_or_null(eq3);
    j["eq7"] = rank_upper_bound(n, m);
    j["eq8"] = number_or_null(eq8);
    j["eq9"] = number_or_null(eq9);
    j["eq10"] = number_or_null(eq10);
    j["eq12"] = number_or_null(eq12);
    j["dof_numerical"] = est.strong_count;
    j["participation_ratio"] = est.participation_ratio;
    j["threshold_db"] = est.threshold_db;
    j["warnings"] = warnings;
    return j;
}

// --- design ----------------------------------------------------------------

json design_report(const Flags &f)
{
    const LinkPoint p = base_point(f);
    const LinkGeometry geom(p.wavelength, p.distance);

    ArchitectureKind kind = OptimallySpacedArray{};
    if (f.spacing == "half")
        kind = HalfWavelengthArray{};
    else if (f.spacing == "line")
        kind = MimoLine{f.sample_spacing.value_or(p.wavelength / 4.0)};
    else if (f.spacing == "subarray")
        kind = SubArrayOfArrays{f.subarray_elements, 0.0};
    else if (f.spacing != "optimal")
        throw UsageError("design supports --spacing optimal|half|line|subarray");

    if (f.modes && p.lt)
        throw UsageError("give either --modes or --lt/--lr, not both");

    DesignConstraint constraint = FixedModes{0};
    if (f.modes)
        constraint = FixedModes{*f.modes};
    else if (p.lt)
        constraint = FixedLengths{*p.lt, *p.lr};
    else
        throw UsageError("design needs --modes or --lt");

    CompareOptions options;
    options.threshold_db = f.threshold_db;
    options.region_factor = f.kappa;
    options.channel = channel_options(f);
    return to_json(evaluate(synthesize(kind, geom, constraint), geom, options));
}

// --- compare ---------------------------------------------------------------

std::string compare_output(const Flags &f)
{
    const LinkPoint p = base_point(f);
    const LinkGeometry geom(p.wavelength, p.distance);

    CompareOptions options;
    options.sample_spacing = f.sample_spacing.value_or(0.0);
    options.subarray_elements = f.subarray_elements;
    options.threshold_db = f.threshold_db;
    options.region_factor = f.kappa;
    options.channel = channel_options(f);

    const auto reports =
        compare(geom, require_flag(p.lt, "--lt"), require_flag(p.lr, "--lr"), options);

    if (f.format == "json")
    {
        json arr = json::array();
        for (const auto &r : reports)
            arr.push_back(to_json(r));
        return arr.dump(2) + "\n";
    }

    std::vector<std::string> header;
    std::vector<std::vector<json>> rows;
    for (const auto &r : reports)
    {
        const json obj = to_json(r);
        if (header.empty())
            for (const auto &[key, value] : obj.items())
                header.push_back(key);
        std::vector<json> row;
        for (const auto &[key, value] : obj.items())
            row.push_back(value);
        rows.push_back(std::move(row));
    }
    return render_rows(header, rows, f.format);
}

// --- regions ---------------------------------------------------------------

json regions_report(const Flags &f)
{
    const LinkPoint p = base_point(f);
    const LinkGeometry geom(p.wavelength, p.distance);
    const double lt = require_flag(p.lt, "--lt");
    const double lr = require_flag(p.lr, "--lr");

    json j;
    j["region"] = std::string(to_string(classify_region(geom, lt, lr, f.kappa)));
    j["distance_m"] = geom.distance();
    j["r_ff_tx_m"] = fraunhofer_distance(lt, geom.wavelength());
    j["r_ff_rx_m"] = fraunhofer_distance(lr, geom.wavelength());
    j["r_ff_link_m"] = fraunhofer_distance(lt + lr, geom.wavelength());
    j["geometric_limit_m"] = f.kappa * std::max(lt, lr);
    j["kappa"] = f.kappa;
    return j;
}

// --- sweep -----------------------------------------------------------------

const std::vector<std::string> kSweepMetrics = {"eq2", "eq3", "eq8", "eq9", "eq10", "eq12", "r_ff", "region",
                                                "dof_numerical", "participation_ratio"};

std::vector<std::string> split_metrics(const std::string &list)
{
    std::vector<std::string> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        if (item.empty())
            continue;
        if (std::find(kSweepMetrics.begin(), kSweepMetrics.end(), item) == kSweepMetrics.end())
            throw UsageError("unknown sweep metric '" + item + "'");
        out.push_back(item);
    }
    if (out.empty())
        throw UsageError("--metrics needs at least one metric");
    return out;
}

std::vector<double> sweep_values(const Flags &f)
{
    if (f.points < 2)
        throw UsageError("--points must be at least 2");
    if (!(f.start < f.stop))
        throw UsageError("--start must be less than --stop");
    if (f.scale == "log" && !(f.start > 0.0))
        throw UsageError("log scale needs --start > 0");

    std::vector<double> v(static_cast<std::size_t>(f.points));
    const double last = f.points - 1;
    for (int i = 0; i < f.points; ++i)
    {
        const double t = i / last;
        v[static_cast<std::size_t>(i)] =
            f.scale == "log" ? std::exp(std::log(f.start) + t * (std::log(f.stop) - std::log(f.start)))
                             : f.start + t * (f.stop - f.start);
    }
    v.front() = f.start;
    v.back() = f.stop;
    return v;
}

std::string sweep_output(const Flags &f, std::ostream &err)
{
    const std::vector<std::string> metrics = split_metrics(f.metrics);
    const std::vector<double> values = sweep_values(f);

    LinkPoint base = base_point(f, f.variable != "wavelength", f.variable != "distance");

    std::vector<std::string> header{f.variable};
    header.insert(header.end(), metrics.begin(), metrics.end());

    std::vector<std::vector<json>> rows;
    for (double x : values)
    {
        LinkPoint p = base;
        if (f.variable == "distance")
            p.distance = x;
        else if (f.variable == "wavelength")
            p.wavelength = x;
        else if (f.variable == "l_tx")
            p.lt = x;
        else
            p.lr = x;

        const LinkGeometry geom(p.wavelength, p.distance);
        const double lt = require_flag(p.lt, "--lt");
        const double lr = require_flag(p.lr, "--lr");

        std::optional<Layout> layout;
        std::optional<DofEstimate> est;
        bool over_budget = false;
        auto numerical = [&]() -> const std::optional<DofEstimate> & {
            if (!est && !over_budget)
            {
                try
                {
                    if (!layout)
                        layout = build_layout(f, p);
                    est = effective_dof(layout_singular_values(*layout, geom, f), f.threshold_db);
                }
                catch (const ResourceError &e)
                {
                    over_budget = true;
                    err << "warning: " << f.variable << "=" << format_number(x) << ": " << e.what() << "\n";
                }
            }
            return est;
        };
        auto counts = [&] {
            if (!layout)
                layout = build_layout(f, p);
            return std::pair{layout->arch.tx.count(), layout->arch.rx.count()};
        };

        std::vector<json> row{x};
        for (const auto &metric : metrics)
        {
            const double lambda = p.wavelength;
            const double D = p.distance;
            if (metric == "eq2")
                row.push_back(dof_paraxial(lt, lr, lambda, D).value);
            else if (metric == "eq3")
                row.push_back(dof_geometric(lt, lr, lambda, D).value);
            else if (metric == "eq8")
            {
                const auto [n, m] = counts();
                row.push_back(dof_paraxial_capped(lt, lr, lambda, D, n, m).value);
            }
            else if (metric == "eq9")
            {
                const auto [n, m] = counts();
                row.push_back(dof_geometric_capped(lt, lr, lambda, D, n, m).value);
            }
            else if (metric == "eq10")
                row.push_back(dof_infinite_rx(lt, lambda, counts().first).value);
            else if (metric == "eq12")
                row.push_back(dof_orthogonal_max(lt, lr, lambda, D).value);
            else if (metric == "r_ff")
                row.push_back(fraunhofer_distance(lt + lr, lambda));
            else if (metric == "region")
                row.push_back(std::string(to_string(classify_region(geom, lt, lr, f.kappa))));
            else if (metric == "dof_numerical")
            {
                const auto &e = numerical();
                row.push_back(e ? json(e->strong_count) : json(nullptr));
            }
            else
            {
                const auto &e = numerical();
                row.push_back(e ? json(e->participation_ratio) : json(nullptr));
            }
        }
        rows.push_back(std::move(row));
    }
    return render_rows(header, rows, f.format);
}

// --- modes -----------------------------------------------------------------

void write_file(const std::filesystem::path &path, const std::string &text)
{
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw OutputError("cannot write '" + path.string() + "'");
    file << text;
    if (!file)
        throw OutputError("failed writing '" + path.string() + "'");
}

json modes_report(const Flags &f)
{
    const LinkPoint p = base_point(f);
    const LinkGeometry geom(p.wavelength, p.distance);
    const Layout layout = build_layout(f, p);

    const ChannelMatrix g =
        channel_matrix(layout.arch.tx_positions(), layout.arch.rx_positions(), geom, channel_options(f));
    ModeDecomposition decomp = decompose(effective_channel(layout.arch, g));
    if (std::holds_alternative<SubArrayOfArrays>(layout.arch.kind))
    {
        decomp.tx_positions = layout.arch.tx.positions();
        decomp.rx_positions = layout.arch.rx.positions();
    }
    else
    {
        decomp.tx_positions = g.tx_positions();
        decomp.rx_positions = g.rx_positions();
    }
    const DofEstimate est = effective_dof(decomp, f.threshold_db);

    std::size_t exported = 0;
    if (!f.export_dir.empty())
    {
        const std::filesystem::path dir(f.export_dir);
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec || !std::filesystem::is_directory(dir))
            throw OutputError("cannot create export directory '" + f.export_dir + "'");

        std::ostringstream table;
        write_intensities_csv(decomp.intensities, table);
        write_file(dir / "intensities.csv", table.str());

        exported = f.export_all ? decomp.size()
                                : std::min<std::size_t>(std::max(est.strong_count, 1), decomp.size());
        for (std::size_t k = 1; k <= exported; ++k)
        {
            const ModeField field = mode_fields(decomp, k);
            std::ostringstream name;
            name << "mode_" << std::setw(4) << std::setfill('0') << k;
            std::ostringstream tx, rx;
            write_profile_csv(field.tx, tx);
            write_profile_csv(field.rx, rx);
            write_file(dir / (name.str() + "_tx.csv"), tx.str());
            write_file(dir / (name.str() + "_rx.csv"), rx.str());
        }
    }
    if (!f.dump_matrix.empty())
    {
        std::ostringstream os;
        write_matrix_csv(g, os);
        write_file(f.dump_matrix, os.str());
    }

    json j;
    j["architecture"] = layout.label;
    j["n_tx"] = layout.arch.element_count_tx();
    j["n_rx"] = layout.arch.element_count_rx();
    j["modes"] = decomp.size();
    j["strong_count"] = est.strong_count;
    j["participation_ratio"] = est.participation_ratio;
    j["threshold_db"] = est.threshold_db;
    j["c2_over_c1_db"] = decomp.size() > 1 && decomp.intensities[0] > 0.0
                             ? json(20.0 * std::log10(decomp.intensities[1] / decomp.intensities[0]))
                             : json(nullptr);
    j["modes_exported"] = exported;
    j["warnings"] = layout.arch.warnings;
    return j;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Near-field line-of-sight MIMO mode analysis", "losmimo"};
    app.require_subcommand(1);

    Flags f;

    auto *dof = app.add_subcommand("dof", "Closed-form and numerical degrees of freedom of one link");
    add_link_flags(*dof, f);
    add_array_flags(*dof, f);

    auto *design = app.add_subcommand("design", "Synthesize an architecture for a mode count or aperture lengths");
    add_link_flags(*design, f);
    add_array_flags(*design, f);
    design->add_option("--modes", f.modes, "Target mode count (Rayleigh design)");

    auto *sweep = app.add_subcommand("sweep", "Sweep one link parameter and tabulate metrics");
    add_link_flags(*sweep, f);
    add_array_flags(*sweep, f);
    sweep->add_option("--variable", f.variable, "distance | wavelength | l_tx | l_rx")
        ->required()
        ->check(CLI::IsMember({"distance", "wavelength", "l_tx", "l_rx"}));
    sweep->add_option("--start", f.start, "First value")->required();
    sweep->add_option("--stop", f.stop, "Last value")->required();
    sweep->add_option("--points", f.points, "Number of points (>= 2)")->required();
    sweep->add_option("--scale", f.scale, "linear | log")->check(CLI::IsMember({"linear", "log"}));
    sweep->add_option("--metrics", f.metrics, "Comma-separated metrics");

    auto *modes = app.add_subcommand("modes", "Mode decomposition with optional profile export");
    add_link_flags(*modes, f);
    add_array_flags(*modes, f);
    modes->add_option("--export", f.export_dir, "Directory for intensities.csv and mode profiles");
    modes->add_flag("--export-all", f.export_all, "Export every mode instead of the strong ones");
    modes->add_option("--dump-matrix", f.dump_matrix, "Write the channel matrix as CSV");

    auto *cmp = app.add_subcommand("compare", "Compare the four architectures at equal apertures");
    add_link_flags(*cmp, f);
    add_array_flags(*cmp, f);

    auto *regions = app.add_subcommand("regions", "Field-region classification of a link");
    add_link_flags(*regions, f);

    try
    {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try
    {
        if (sweep->parsed() && sweep->get_option("--format")->count() == 0)
            f.format = "csv";

        std::string text;
        if (dof->parsed())
            text = render_object(dof_report(f), f.format);
        else if (design->parsed())
        {
            if (!design->get_option("--spacing")->count())
                f.spacing = "optimal";
            text = render_object(design_report(f), f.format);
        }
        else if (sweep->parsed())
            text = sweep_output(f, err);
        else if (modes->parsed())
            text = render_object(modes_report(f), f.format);
        else if (cmp->parsed())
            text = compare_output(f);
        else
            text = render_object(regions_report(f), f.format);
        emit(text, f, out);
    }
    catch (const UsageError &e)
    {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
    catch (const std::exception &e)
    {
        // DomainError, ResourceError, ComputationError, OutputError
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}

} // namespace losmimo::cli
