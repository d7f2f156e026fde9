#include "wgqed/app/commands.hpp"

#include "wgqed/app/density_file.hpp"
#include "wgqed/app/figures.hpp"
#include "wgqed/app/validation.hpp"
#include "wgqed/app/worker_pool.hpp"
#include "wgqed/observables.hpp"
#include "wgqed/oracle.hpp"
#include "wgqed/spectra.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fmt/format.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <variant>

namespace wgqed::app {

namespace {

constexpr const char* kVersion = "1.0.0";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Cell = std::variant<double, std::string>;

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;
};

std::string format_number(double v) { return fmt::format("{:.15g}", v); }

std::string render_csv(const Table& t) {
    std::string out;
    for (std::size_t i = 0; i < t.header.size(); ++i) out += (i ? "," : "") + t.header[i];
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += std::holds_alternative<double>(row[i]) ? format_number(std::get<double>(row[i]))
                                                          : std::get<std::string>(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string render_json(const Table& t, const nlohmann::json& metadata) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : t.rows) {
        nlohmann::json r = nlohmann::json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (std::holds_alternative<double>(row[i]))
                r[t.header[i]] = std::get<double>(row[i]);
            else
                r[t.header[i]] = std::get<std::string>(row[i]);
        }
        rows.push_back(std::move(r));
    }
    nlohmann::json doc = {{"metadata", metadata}, {"rows", rows}};
    return doc.dump(2) + "\n";
}

struct OutputOptions {
    std::string format = "csv";
    std::string path = "-";
};

void emit(const Table& t, const nlohmann::json& metadata, const std::string& format, const std::string& path) {
    const std::string text = format == "json" ? render_json(t, metadata) : render_csv(t);
    if (path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

std::vector<double> linear_grid(double lo, double hi, int points, const char* what) {
    if (points < 2) throw UsageError(fmt::format("{} grid needs at least 2 points", what));
    if (!(hi > lo)) throw UsageError(fmt::format("{} grid must be increasing (min < max)", what));
    std::vector<double> g(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) g[i] = lo + (hi - lo) * i / (points - 1);
    return g;
}

struct SpectrumOptions {
    std::string initial;
    std::vector<double> k0d;
    std::string direction = "total";
    std::optional<double> omega_min, omega_max;
    int points = 1601;
    std::optional<double> gamma_t;
    std::string source = "closed";
};

struct RateOptions {
    std::string initial;
    std::vector<double> k0d;
    std::string direction = "total";
    double gt_max = 10.0;
    int points = 201;
};

Direction as_direction(Detection d) { return d == Detection::Forward ? Direction::Forward : Direction::Backward; }

std::vector<double> oracle_values(const DickeDensity& rho0, const SystemParams& p, Detection det,
                                  const std::vector<double>& omegas, std::optional<double> gamma_t) {
    QuadratureConfig cfg;
    if (gamma_t) {
        // finite-time photon number: fixed window, no tail extension
        cfg.T_gamma = *gamma_t;
        cfg.n_steps = std::max(64, static_cast<int>(std::ceil(*gamma_t / 40.0 * 4096)));
        cfg.max_growth = 1.0;
    }
    if (det != Detection::Total) return quadrature_spectrum(rho0, p, as_direction(det), omegas, cfg);
    const auto f = quadrature_spectrum(rho0, p, Direction::Forward, omegas, cfg);
    const auto b = quadrature_spectrum(rho0, p, Direction::Backward, omegas, cfg);
    std::vector<double> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = 0.5 * (f[i] + b[i]);
    return out;
}

Table spectrum_table(const SpectrumOptions& o, double gamma_ratio) {
    const auto rho0 = resolve_initial(o.initial);
    const auto det = parse_detection(o.direction);
    if (o.gamma_t && !(*o.gamma_t >= 0.0)) throw UsageError("--gamma-t must be >= 0");
    if (o.source != "closed" && o.source != "oracle") throw UsageError("--source must be closed or oracle");
    std::vector<std::vector<std::vector<Cell>>> parts(o.k0d.size());
    parallel_for(o.k0d.size(), [&](std::size_t i) {
        const SystemParams p{gamma_ratio, o.k0d[i]};
        validate(p);
        const double half = 10.0 * p.gamma();
        const auto omegas = linear_grid(o.omega_min.value_or(kOmega - half), o.omega_max.value_or(kOmega + half),
                                        o.points, "omega");
        std::vector<double> values;
        if (o.source == "oracle") {
            values = oracle_values(rho0, p, det, omegas, o.gamma_t);
        } else {
            for (double w : omegas)
                values.push_back(o.gamma_t ? photon_number(rho0, p, det, w, *o.gamma_t / p.gamma())
                                           : spectral_density(rho0, p, det, w));
        }
        for (std::size_t k = 0; k < omegas.size(); ++k)
            parts[i].push_back({omegas[k] / kOmega, values[k], std::string(to_string(det)), o.initial, o.k0d[i],
                                single_qubit_baseline(p, omegas[k]).density});
    });
    Table t{{"omega_over_Omega", "value", "direction", "initial", "k0d", "single_qubit"}, {}};
    for (auto& part : parts)
        for (auto& row : part) t.rows.push_back(std::move(row));
    return t;
}

Table rate_table(const RateOptions& o, double gamma_ratio) {
    const auto rho0 = resolve_initial(o.initial);
    const auto det = parse_detection(o.direction);
    if (!(o.gt_max > 0.0)) throw UsageError("--gamma-t-max must be > 0");
    const auto gts = linear_grid(0.0, o.gt_max, o.points, "time");
    std::vector<std::vector<std::vector<Cell>>> parts(o.k0d.size());
    parallel_for(o.k0d.size(), [&](std::size_t i) {
        const SystemParams p{gamma_ratio, o.k0d[i]};
        validate(p);
        const auto s = rate_series(rho0, o.initial, p, det, gts);
        for (std::size_t k = 0; k < gts.size(); ++k)
            parts[i].push_back({gts[k], s.y[k], std::string(to_string(det)), o.initial, o.k0d[i], s.baseline[k]});
    });
    Table t{{"Gamma_t", "value", "direction", "initial", "k0d", "single_qubit"}, {}};
    for (auto& part : parts)
        for (auto& row : part) t.rows.push_back(std::move(row));
    return t;
}

std::string series_file(const Series& s, int fig, const std::string& ext) {
    return fmt::format("fig{}_{}.{}", fig, s.kind == SeriesKind::Spectrum ? "spectrum" : "rate", ext);
}

void write_figures(const std::vector<int>& which, double gamma_ratio, const std::string& dir,
                   const std::string& format) {
    std::vector<FigureSpec> specs;
    for (const auto& f : figure_specs())
        if (which.empty() || std::find(which.begin(), which.end(), f.number) != which.end()) specs.push_back(f);
    if (specs.empty()) throw UsageError("no figure matches --figure (valid: 1-9)");
    std::filesystem::create_directories(dir);
    std::vector<std::vector<Series>> data(specs.size());
    parallel_for(specs.size(), [&](std::size_t i) { data[i] = figure_data(specs[i], gamma_ratio); });
    for (std::size_t i = 0; i < specs.size(); ++i) {
        for (auto kind : {SeriesKind::Spectrum, SeriesKind::Rate}) {
            const bool spec = kind == SeriesKind::Spectrum;
            Table t{{spec ? "omega_over_Omega" : "Gamma_t", "value", "direction", "initial", "k0d", "single_qubit"},
                    {}};
            std::string name;
            for (const auto& s : data[i]) {
                if (s.kind != kind) continue;
                name = series_file(s, specs[i].number, format);
                for (std::size_t k = 0; k < s.x.size(); ++k)
                    t.rows.push_back({s.x[k], s.y[k], std::string(to_string(s.detection)), s.initial, s.k0d,
                                      s.baseline[k]});
            }
            nlohmann::json meta = {{"version", kVersion},
                                   {"provenance", "closed-form"},
                                   {"config",
                                    {{"figure", specs[i].number},
                                     {"gamma_ratio", gamma_ratio},
                                     {"initial", specs[i].initial},
                                     {"direction", std::string(to_string(specs[i].detection))},
                                     {"k0d", specs[i].k0d}}}};
            emit(t, meta, format, (std::filesystem::path(dir) / name).string());
        }
    }
}

void check_format(const std::string& f) {
    if (f != "csv" && f != "json") throw UsageError("--format must be csv or json");
}

int report_error(const char* kind, const std::string& msg, int code) {
    std::string line = msg;
    for (auto& c : line)
        if (c == '\n') c = ' ';
    std::cerr << "error: " << kind << ": " << line << "\n";
    return code;
}

}  // namespace

int run(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args);
}

int run(const std::vector<std::string>& args_in) {
    CLI::App app{"Two qubits in a 1D waveguide: emission spectra, rates and transition probabilities"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    double gamma_ratio = 0.05;
    OutputOptions out;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--gamma-ratio", gamma_ratio, "Gamma / Omega")->capture_default_str();
        sub->add_option("--format", out.format, "csv or json")->capture_default_str();
        sub->add_option("-o,--output", out.path, "output file, '-' for stdout")->capture_default_str();
    };

    SpectrumOptions so;
    auto* spectrum = app.add_subcommand("spectrum", "Emission spectrum S_bar(omega) versus omega/Omega");
    spectrum->add_option("--initial", so.initial, "preset name or density-matrix JSON file")->required();
    spectrum->add_option("--k0d", so.k0d, "k0 d in radians (repeatable)")->required();
    spectrum->add_option("--direction", so.direction, "forward, backward or total")->capture_default_str();
    spectrum->add_option("--omega-min", so.omega_min, "lowest omega/Omega (default Omega - 10 Gamma)");
    spectrum->add_option("--omega-max", so.omega_max, "highest omega/Omega (default Omega + 10 Gamma)");
    spectrum->add_option("--points", so.points, "number of frequencies")->capture_default_str();
    spectrum->add_option("--gamma-t", so.gamma_t, "finite emission time Gamma*t (default: long-time limit)");
    spectrum->add_option("--source", so.source, "closed (closed form) or oracle (double-time quadrature)")
        ->capture_default_str();
    add_common(spectrum);

    RateOptions ro;
    auto* rate = app.add_subcommand("rate", "Photon emission rate W/Gamma versus Gamma*t");
    rate->add_option("--initial", ro.initial, "preset name or density-matrix JSON file")->required();
    rate->add_option("--k0d", ro.k0d, "k0 d in radians (repeatable)")->required();
    rate->add_option("--direction", ro.direction, "forward, backward or total")->capture_default_str();
    rate->add_option("--gamma-t-max", ro.gt_max, "end of the Gamma*t grid")->capture_default_str();
    rate->add_option("--points", ro.points, "number of times")->capture_default_str();
    add_common(rate);

    std::string from, to;
    double prob_k0d = 0.0, prob_gt_max = 10.0;
    int prob_points = 201;
    auto* prob = app.add_subcommand("prob", "Transition probability between Dicke states versus Gamma*t");
    prob->add_option("--from", from, "G, E, S or A")->required();
    prob->add_option("--to", to, "G, E, S or A")->required();
    prob->add_option("--k0d", prob_k0d, "k0 d in radians")->required();
    prob->add_option("--gamma-t-max", prob_gt_max, "end of the Gamma*t grid")->capture_default_str();
    prob->add_option("--points", prob_points, "number of times")->capture_default_str();
    add_common(prob);

    std::string quantity = "spectrum";
    double k_min = 0.0, k_max = 0.0;
    int k_points = 0;
    SpectrumOptions sw;
    RateOptions swr;
    auto* sweep = app.add_subcommand("sweep", "Spectrum or rate over a range of k0 d");
    sweep->add_option("--quantity", quantity, "spectrum or rate")->capture_default_str();
    sweep->add_option("--initial", sw.initial, "preset name or density-matrix JSON file")->required();
    sweep->add_option("--direction", sw.direction, "forward, backward or total")->capture_default_str();
    sweep->add_option("--k0d-min", k_min, "first k0 d")->required();
    sweep->add_option("--k0d-max", k_max, "last k0 d")->required();
    sweep->add_option("--k0d-points", k_points, "number of k0 d values")->required();
    sweep->add_option("--points", sw.points, "frequencies (spectrum) or times (rate) per k0 d");
    sweep->add_option("--gamma-t-max", swr.gt_max, "end of the Gamma*t grid for rates")->capture_default_str();
    add_common(sweep);

    std::string suite = "all";
    auto* validate_cmd = app.add_subcommand("validate", "Compare closed forms against the numerical oracles");
    validate_cmd->add_option("--suite", suite, "ode, quadrature, conservation or all")->capture_default_str();
    validate_cmd->add_option("--gamma-ratio", gamma_ratio, "Gamma / Omega")->capture_default_str();
    QuadratureConfig quad;
    validate_cmd->add_option("--quadrature-steps", quad.n_steps, "grid points per axis for the quadrature oracle")
        ->capture_default_str()
        ->check(CLI::Range(64, 1 << 16));

    std::vector<int> figs;
    std::string fig_dir;
    auto* figures = app.add_subcommand("figures", "Data behind figures 1-9 (spectra and rates)");
    figures->add_option("--output-dir", fig_dir, "directory for figN_spectrum / figN_rate files")->required();
    figures->add_option("--figure", figs, "figure number (repeatable, default all)");
    figures->add_option("--gamma-ratio", gamma_ratio, "Gamma / Omega")->capture_default_str();
    figures->add_option("--format", out.format, "csv or json")->capture_default_str();

    std::vector<std::string> args(args_in.rbegin(), args_in.rend());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return report_error("usage", e.what(), kExitUsage);
    }

    nlohmann::json meta = {{"version", kVersion}, {"config", {{"gamma_ratio", gamma_ratio}}}};
    try {
        if (spectrum->parsed()) {
            check_format(out.format);
            meta["provenance"] = so.source == "oracle" ? "oracle" : "closed-form";
            meta["config"].update({{"command", "spectrum"}, {"initial", so.initial}, {"k0d", so.k0d},
                                   {"direction", so.direction}, {"points", so.points}});
            if (so.gamma_t) meta["config"]["gamma_t"] = *so.gamma_t;
            emit(spectrum_table(so, gamma_ratio), meta, out.format, out.path);
        } else if (rate->parsed()) {
            check_format(out.format);
            meta["provenance"] = "closed-form";
            meta["config"].update({{"command", "rate"}, {"initial", ro.initial}, {"k0d", ro.k0d},
                                   {"direction", ro.direction}, {"gamma_t_max", ro.gt_max}, {"points", ro.points}});
            emit(rate_table(ro, gamma_ratio), meta, out.format, out.path);
        } else if (prob->parsed()) {
            check_format(out.format);
            const auto f = parse_dicke_state(from), t = parse_dicke_state(to);
            const SystemParams p{gamma_ratio, prob_k0d};
            validate(p);
            if (!(prob_gt_max > 0.0)) throw UsageError("--gamma-t-max must be > 0");
            Table table{{"Gamma_t", "value", "from", "to", "k0d"}, {}};
            for (double gt : linear_grid(0.0, prob_gt_max, prob_points, "time"))
                table.rows.push_back({gt, transition_probability(f, t, p, gt / p.gamma()), from, to, prob_k0d});
            meta["provenance"] = "closed-form";
            meta["config"].update({{"command", "prob"}, {"from", from}, {"to", to}, {"k0d", prob_k0d}});
            emit(table, meta, out.format, out.path);
        } else if (sweep->parsed()) {
            check_format(out.format);
            if (k_points < 1) throw UsageError("--k0d-points must be >= 1");
            if (k_points > 1 && !(k_max > k_min)) throw UsageError("k0d sweep must be increasing");
            std::vector<double> ks =
                k_points == 1 ? std::vector<double>{k_min} : linear_grid(k_min, k_max, k_points, "k0d");
            meta["provenance"] = "closed-form";
            meta["config"].update({{"command", "sweep"}, {"quantity", quantity}, {"initial", sw.initial},
                                   {"k0d_min", k_min}, {"k0d_max", k_max}, {"k0d_points", k_points},
                                   {"direction", sw.direction}});
            if (quantity == "spectrum") {
                sw.k0d = ks;
                emit(spectrum_table(sw, gamma_ratio), meta, out.format, out.path);
            } else if (quantity == "rate") {
                swr.initial = sw.initial;
                swr.direction = sw.direction;
                swr.k0d = ks;
                if (sweep->count("--points") > 0) swr.points = sw.points;
                emit(rate_table(swr, gamma_ratio), meta, out.format, out.path);
            } else {
                throw UsageError("--quantity must be spectrum or rate");
            }
        } else if (validate_cmd->parsed()) {
            const auto& names = suite_names();
            if (std::find(names.begin(), names.end(), suite) == names.end())
                throw UsageError("--suite must be one of ode, quadrature, conservation, all");
            const auto results = run_suite(suite, gamma_ratio, quad);
            bool ok = true;
            std::cout << "check,max_error,threshold,status\n";
            for (const auto& r : results) {
                std::cout << fmt::format("{},{:.3e},{:.1e},{}\n", r.name, r.max_error, r.threshold,
                                         r.passed ? "pass" : "FAIL");
                ok = ok && r.passed;
            }
            std::cout.flush();
            return ok ? kExitOk : kExitValidation;
        } else if (figures->parsed()) {
            check_format(out.format);
            write_figures(figs, gamma_ratio, fig_dir, out.format);
        }
    } catch (const UsageError& e) {
        return report_error("usage", e.what(), kExitUsage);
    } catch (const DensityError& e) {
        return report_error(("density." + e.rule()).c_str(), e.what(), kExitUsage);
    } catch (const std::invalid_argument& e) {
        return report_error("usage", e.what(), kExitUsage);
    } catch (const std::exception& e) {
        return report_error("runtime", e.what(), kExitUsage);
    }
    return kExitOk;
}

}  // namespace wgqed::app
