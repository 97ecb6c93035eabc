#include "qwhorl/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qwhorl/dynamics.hpp"
#include "qwhorl/errors.hpp"
#include "qwhorl/field.hpp"

namespace qwhorl::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

std::string_view format_name(OutputFormat f) {
    switch (f) {
        case OutputFormat::Csv: return "csv";
        case OutputFormat::Json: return "json";
        case OutputFormat::Svg: return "svg";
    }
    return "?";
}

std::optional<OutputFormat> parse_format(std::string_view name) {
    for (auto f : {OutputFormat::Csv, OutputFormat::Json, OutputFormat::Svg}) {
        if (format_name(f) == name) return f;
    }
    return std::nullopt;
}

DeformationKind kind_implied_by(ProfileKind profile) {
    switch (profile) {
        case ProfileKind::Mu1:
        case ProfileKind::Mu3: return DeformationKind::QType1;
        case ProfileKind::Mu2:
        case ProfileKind::Mu4: return DeformationKind::QType2;
        default: return DeformationKind::Undeformed;
    }
}

OscillatorParams make_params(double q, double mass, double omega, double hbar, const char* flag) {
    try {
        return OscillatorParams(q, mass, omega, hbar);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string(flag) + ": " + e.what());
    }
}

std::vector<double> split_numbers(const std::string& text, std::size_t expected, const char* flag) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        char* end = nullptr;
        const double v = std::strtod(cell.c_str(), &end);
        if (cell.empty() || end == cell.c_str() || *end != '\0' || !std::isfinite(v)) {
            throw ConfigError(std::string(flag) + ": cannot parse '" + cell + "' as a number");
        }
        values.push_back(v);
    }
    if (values.size() != expected) {
        throw ConfigError(std::string(flag) + ": expected " + std::to_string(expected) +
                          " comma-separated numbers");
    }
    return values;
}

Sign parse_sign(const std::string& text, const char* flag) {
    if (text == "+1" || text == "1") return Sign::Plus;
    if (text == "-1") return Sign::Minus;
    throw ConfigError(std::string(flag) + ": sign must be +1 or -1");
}

void validate(const RunConfig& c) {
    try {
        c.grid.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("--grid/--window: ") + e.what());
    }
    if (!(c.radius > 0.0) || !std::isfinite(c.radius)) throw ConfigError("--radius: must be > 0");
    if (c.points < 8) throw ConfigError("--points: must be >= 8");
    if (c.steps < 1) throw ConfigError("--steps: must be >= 1");
    if (c.taus.empty()) throw ConfigError("--tau: at least one value required");
    for (double t : c.taus) {
        if (!std::isfinite(t)) throw ConfigError("--tau: values must be finite");
    }
    if (!std::isfinite(c.alpha0.re()) || !std::isfinite(c.alpha0.im())) {
        throw ConfigError("--alpha0-re/--alpha0-im: must be finite");
    }
    if (!(c.s_min >= 0.0) || !(c.s_max > c.s_min)) {
        throw ConfigError("--s-range: need 0 <= smin < smax");
    }
    if (c.s_samples < 2) throw ConfigError("--s-samples: must be >= 2");
    if (c.profile.kind == ProfileKind::Anharmonic && !(c.profile.chi >= 0.0)) {
        throw ConfigError("--chi: must be >= 0");
    }
}

fs::path in_out(const RunConfig& c, const std::string& name) { return c.out_dir / name; }

std::size_t write_manifest(const RunConfig& c, const std::string& name,
                           const std::vector<fs::path>& outputs, json extra = json::object()) {
    json j = std::move(extra);
    j["command"] = c.command;
    j["config"] = to_json(c);
    json files = json::array();
    for (const auto& p : outputs) files.push_back(p.filename().string());
    j["outputs"] = files;
    return write_text_file(in_out(c, name), j.dump(2) + "\n");
}

json snapshot_config(const RunConfig& c) {
    json j = describe_state(c.state(), c.kind);
    j["run"] = to_json(c);
    return j;
}

std::string number(double v, const char* fmt = "%.17g") {
    char buf[48];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

struct FigurePreset {
    std::string id;
    FrequencyProfile profile;
    DeformationKind kind;
    bool surface;  // 3-D figure -> JSON grids, otherwise SVG contours
    std::string caption;
};

std::optional<FigurePreset> figure_preset(const std::string& id) {
    const auto anh = FrequencyProfile::anharmonic(1.0);
    if (id == "fig1") return FigurePreset{id, anh, DeformationKind::Undeformed, false, "2-D contours, anharmonic oscillator"};
    if (id == "fig2") return FigurePreset{id, FrequencyProfile::mu1(), DeformationKind::QType1, false, "2-D contours, q-deformed, frequency mu1"};
    if (id == "fig3") return FigurePreset{id, FrequencyProfile::mu2(), DeformationKind::QType2, false, "2-D contours, q-deformed, frequency mu2"};
    if (id == "fig4") return FigurePreset{id, anh, DeformationKind::Undeformed, true, "3-D surfaces, anharmonic oscillator"};
    if (id == "fig5") return FigurePreset{id, FrequencyProfile::mu1(), DeformationKind::QType1, true, "3-D surfaces, q-deformed, frequency mu1"};
    if (id == "fig6") return FigurePreset{id, FrequencyProfile::mu2(), DeformationKind::QType2, true, "3-D surfaces, q-deformed, frequency mu2"};
    return std::nullopt;
}

std::vector<ContourTrace> contour_traces(const RunConfig& c, double tau) {
    const GaussianState st = c.state();
    const double t = tau / c.params.omega();
    if (c.from_grid) {
        const DistributionField field = sample_grid(st, t, c.grid);
        return extract_level_set(field, std::exp(-c.radius * c.radius));
    }
    return {advect_contour(Circle{st.center, c.radius}, st, t, c.points)};
}

}  // namespace

RunConfig::RunConfig() : taus{kPi / 2.0, kPi, 3.0 * kPi / 2.0, 2.0 * kPi} {}

GaussianState RunConfig::state() const {
    GaussianState st;
    st.params = params;
    st.profile = profile;
    st.representation = representation();
    st.center = st.representation == Representation::AlphaQ ? deform(alpha0, params, kind) : alpha0;
    return st;
}

json to_json(const RunConfig& c) {
    json j;
    j["command"] = c.command;
    if (!c.figure.empty()) j["figure"] = c.figure;
    j["q"] = c.params.q();
    j["lambda"] = c.params.lambda();
    j["mass"] = c.params.mass();
    j["omega"] = c.params.omega();
    j["hbar"] = c.params.hbar();
    j["kind"] = std::string(to_string(c.kind));
    j["profile"] = std::string(to_string(c.profile.kind));
    j["chi"] = c.profile.chi;
    j["representation"] = std::string(to_string(c.representation()));
    j["alpha0"] = {{"re", c.alpha0.re()}, {"im", c.alpha0.im()}};
    j["tau"] = c.taus;
    j["grid"] = {{"nx", c.grid.nx},     {"ny", c.grid.ny},     {"xmin", c.grid.xmin},
                 {"xmax", c.grid.xmax}, {"ymin", c.grid.ymin}, {"ymax", c.grid.ymax}};
    j["radius"] = c.radius;
    j["points"] = c.points;
    j["steps"] = c.steps;
    j["format"] = c.format ? json(std::string(format_name(*c.format))) : json(nullptr);
    j["out"] = c.out_dir.generic_string();
    j["seed"] = c.seed;
    j["sign"] = static_cast<int>(c.sign);
    j["s_range"] = {c.s_min, c.s_max};
    j["s_samples"] = c.s_samples;
    j["from_grid"] = c.from_grid;
    return j;
}

void apply_json(RunConfig& c, const json& j) {
    if (!j.is_object()) throw ConfigError("--config: top level must be a JSON object");
    try {
        double q = c.params.q(), mass = c.params.mass(), omega = c.params.omega(),
               hbar = c.params.hbar();
        for (const auto& [key, v] : j.items()) {
            if (key == "command") c.command = v.get<std::string>();
            else if (key == "figure") c.figure = v.get<std::string>();
            else if (key == "q") q = v.get<double>();
            else if (key == "mass") mass = v.get<double>();
            else if (key == "omega") omega = v.get<double>();
            else if (key == "hbar") hbar = v.get<double>();
            else if (key == "kind") {
                const auto k = parse_deformation_kind(v.get<std::string>());
                if (!k) throw ConfigError("--config: unknown kind " + v.dump());
                c.kind = *k;
            } else if (key == "profile") {
                const auto p = parse_profile_kind(v.get<std::string>());
                if (!p) throw ConfigError("--config: unknown profile " + v.dump());
                c.profile.kind = *p;
            } else if (key == "chi") c.profile.chi = v.get<double>();
            else if (key == "alpha0") c.alpha0 = {v.at("re").get<double>(), v.at("im").get<double>()};
            else if (key == "tau") c.taus = v.get<std::vector<double>>();
            else if (key == "grid") {
                c.grid = {v.at("xmin").get<double>(), v.at("xmax").get<double>(),
                          v.at("ymin").get<double>(), v.at("ymax").get<double>(),
                          v.at("nx").get<std::size_t>(), v.at("ny").get<std::size_t>()};
            } else if (key == "radius") c.radius = v.get<double>();
            else if (key == "points") c.points = v.get<std::size_t>();
            else if (key == "steps") c.steps = v.get<std::size_t>();
            else if (key == "format") {
                if (v.is_null()) {
                    c.format.reset();
                } else {
                    const auto f = parse_format(v.get<std::string>());
                    if (!f) throw ConfigError("--config: unknown format " + v.dump());
                    c.format = *f;
                }
            } else if (key == "out") c.out_dir = v.get<std::string>();
            else if (key == "seed") c.seed = v.get<std::uint64_t>();
            else if (key == "sign") c.sign = parse_sign(std::to_string(v.get<int>()), "--config sign");
            else if (key == "s_range") {
                const auto r = v.get<std::vector<double>>();
                if (r.size() != 2) throw ConfigError("--config: s_range needs two numbers");
                c.s_min = r[0];
                c.s_max = r[1];
            } else if (key == "s_samples") c.s_samples = v.get<std::size_t>();
            else if (key == "from_grid") c.from_grid = v.get<bool>();
            else if (key == "lambda" || key == "representation") {
                // derived, ignored on input
            } else {
                throw ConfigError("--config: unknown key '" + key + "'");
            }
        }
        c.params = make_params(q, mass, omega, hbar, "--config q");
    } catch (const json::exception& e) {
        throw ConfigError(std::string("--config: ") + e.what());
    }
}

RunConfig parse_args(const std::vector<std::string>& args) {
    CLI::App app{"qwhorl: Liouville dynamics of the q-deformed classical harmonic oscillator",
                 "qwhorl"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    double q = 0.5, chi = 1.0, a_re = 0.5, a_im = 0.0, radius = 0.5;
    std::string kind, profile, window, format, out, sign, config_path, s_range;
    std::vector<double> taus;
    std::size_t grid = 0, points = 0, steps = 0, s_samples = 0;
    std::uint64_t seed = 0;
    bool from_grid = false;
    std::string figure;

    auto* o_q = app.add_option("--q", q, "deformation parameter, 0 < q < 1");
    auto* o_kind = app.add_option("--kind", kind, "q-number form: none|type1|type2")
                       ->check(CLI::IsMember({"none", "type1", "type2"}));
    auto* o_profile =
        app.add_option("--profile", profile, "frequency law")
            ->check(CLI::IsMember({"undeformed", "mu1", "mu2", "mu3", "mu4", "anharmonic"}));
    auto* o_chi = app.add_option("--chi", chi, "anharmonic coefficient");
    auto* o_re = app.add_option("--alpha0-re", a_re, "Re alpha(0)");
    auto* o_im = app.add_option("--alpha0-im", a_im, "Im alpha(0)");
    auto* o_tau = app.add_option("--tau", taus, "dimensionless time omega t (repeatable)");
    auto* o_grid = app.add_option("--grid", grid, "nodes per axis");
    auto* o_window = app.add_option("--window", window, "xmin,xmax,ymin,ymax");
    auto* o_radius = app.add_option("--radius", radius, "initial contour radius");
    auto* o_points = app.add_option("--points", points, "contour seed points");
    auto* o_steps = app.add_option("--steps", steps, "RK4 steps per 2 pi");
    auto* o_format = app.add_option("--format", format, "csv|json|svg")
                         ->check(CLI::IsMember({"csv", "json", "svg"}));
    auto* o_out = app.add_option("--out", out, "output directory");
    auto* o_seed = app.add_option("--seed", seed, "verification sample seed");
    auto* o_sign = app.add_option("--sign", sign, "generator sign, +1 or -1");
    auto* o_config = app.add_option("--config", config_path, "JSON config file; flags override it");
    auto* o_srange = app.add_option("--s-range", s_range, "smin,smax for freq");
    auto* o_ssamples = app.add_option("--s-samples", s_samples, "sample count for freq");

    app.add_subcommand("freq", "tabulate Omega(s)/omega");
    app.add_subcommand("trajectory", "closed-form and RK4 trajectory of alpha(0)");
    app.add_subcommand("evolve", "sample the evolved distribution on a grid");
    auto* contour = app.add_subcommand("contour", "advect the initial contour");
    auto* o_from_grid =
        contour->add_flag("--from-grid", from_grid, "extract the level set from a sampled grid");
    app.add_subcommand("verify", "run the verification suite");
    auto* reproduce = app.add_subcommand("reproduce", "emit a figure panel set (fig1..fig6)");
    reproduce->add_option("figure", figure, "figure id")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::CallForAllHelp&) {
        throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError& e) {
        throw ConfigError(e.what());
    }

    RunConfig c;
    c.command = app.get_subcommands().front()->get_name();
    c.figure = figure;

    bool kind_set = false;
    bool profile_set = false;
    if (o_config->count() > 0) {
        std::ifstream is(config_path);
        if (!is) throw ConfigError("--config: cannot read " + config_path);
        json j;
        try {
            j = json::parse(is);
        } catch (const json::exception& e) {
            throw ConfigError("--config: " + std::string(e.what()));
        }
        kind_set = j.contains("kind");
        profile_set = j.contains("profile");
        const std::string command = c.command;
        const std::string fig = c.figure;
        apply_json(c, j);
        c.command = command;
        if (!fig.empty()) c.figure = fig;
    }

    if (o_q->count() > 0) {
        c.params = make_params(q, c.params.mass(), c.params.omega(), c.params.hbar(), "--q");
    }
    if (o_kind->count() > 0) {
        c.kind = *parse_deformation_kind(kind);
        kind_set = true;
    }
    if (o_profile->count() > 0) {
        c.profile.kind = *parse_profile_kind(profile);
        profile_set = true;
    }
    if (profile_set && !kind_set) c.kind = kind_implied_by(c.profile.kind);
    if (kind_set && !profile_set) c.profile = alpha_profile_for(c.kind);
    if (o_chi->count() > 0) c.profile.chi = chi;
    if (o_re->count() > 0) c.alpha0 = {a_re, c.alpha0.im()};
    if (o_im->count() > 0) c.alpha0 = {c.alpha0.re(), a_im};
    if (o_tau->count() > 0) c.taus = taus;
    if (o_grid->count() > 0) c.grid.nx = c.grid.ny = grid;
    if (o_window->count() > 0) {
        const auto w = split_numbers(window, 4, "--window");
        c.grid.xmin = w[0];
        c.grid.xmax = w[1];
        c.grid.ymin = w[2];
        c.grid.ymax = w[3];
    }
    if (o_radius->count() > 0) c.radius = radius;
    if (o_points->count() > 0) c.points = points;
    if (o_steps->count() > 0) c.steps = steps;
    if (o_format->count() > 0) c.format = parse_format(format);
    if (o_out->count() > 0) c.out_dir = out;
    if (o_seed->count() > 0) c.seed = seed;
    if (o_sign->count() > 0) c.sign = parse_sign(sign, "--sign");
    if (o_srange->count() > 0) {
        const auto r = split_numbers(s_range, 2, "--s-range");
        c.s_min = r[0];
        c.s_max = r[1];
    }
    if (o_ssamples->count() > 0) c.s_samples = s_samples;
    if (o_from_grid->count() > 0) c.from_grid = from_grid;

    validate(c);
    return c;
}

std::string tau_tag(double tau) { return number(tau, "%.6f"); }

std::vector<fs::path> cmd_freq(const RunConfig& c) {
    if (c.format && *c.format != OutputFormat::Csv) throw ConfigError("--format: freq writes csv only");
    std::string body = "s,omega_ratio\n";
    for (std::size_t k = 0; k < c.s_samples; ++k) {
        const double s = c.s_min + (c.s_max - c.s_min) * static_cast<double>(k) /
                                       static_cast<double>(c.s_samples - 1);
        const double ratio = frequency(s, c.params, c.profile) / c.params.omega();
        body += number(s) + "," + number(ratio) + "\n";
    }
    const fs::path file = in_out(c, "freq_" + std::string(to_string(c.profile.kind)) + ".csv");
    write_text_file(file, body);
    std::vector<fs::path> outputs{file};
    write_manifest(c, "freq_manifest.json", outputs);
    return outputs;
}

std::vector<fs::path> cmd_trajectory(const RunConfig& c) {
    if (c.format && *c.format != OutputFormat::Csv) {
        throw ConfigError("--format: trajectory writes csv only");
    }
    const GaussianState st = c.state();
    const Trajectory traj{st.center, c.profile, c.params, st.representation};
    std::string body = "tau,re_exact,im_exact,re_rk4,im_rk4\n";
    std::vector<double> taus{0.0};
    taus.insert(taus.end(), c.taus.begin(), c.taus.end());
    for (double tau : taus) {
        const double t = tau / c.params.omega();
        const auto per_period = static_cast<double>(c.steps) / (2.0 * kPi);
        const auto steps = static_cast<std::size_t>(std::max(1.0, std::ceil(std::abs(tau) * per_period)));
        const PhasePoint exact = evolve_exact(traj, t);
        const PhasePoint rk = integrate_eom(traj, t, steps);
        body += number(tau) + "," + number(exact.re()) + "," + number(exact.im()) + "," +
                number(rk.re()) + "," + number(rk.im()) + "\n";
    }
    const fs::path file = in_out(c, "trajectory_" + std::string(to_string(c.profile.kind)) + ".csv");
    write_text_file(file, body);
    std::vector<fs::path> outputs{file};
    write_manifest(c, "trajectory_manifest.json", outputs);
    return outputs;
}

std::vector<fs::path> cmd_evolve(const RunConfig& c) {
    const OutputFormat fmt = c.format.value_or(OutputFormat::Json);
    if (fmt == OutputFormat::Svg) throw ConfigError("--format: evolve writes json or csv");
    const GaussianState st = c.state();
    std::vector<fs::path> outputs;
    for (double tau : c.taus) {
        const DistributionField field = sample_grid(st, tau / c.params.omega(), c.grid);
        const std::string stem = "snap_tau" + tau_tag(tau);
        if (fmt == OutputFormat::Json) {
            Snapshot snap{snapshot_config(c), tau, c.grid, field.values};
            outputs.push_back(in_out(c, stem + ".json"));
            write_json(snap, outputs.back());
        } else {
            outputs.push_back(in_out(c, stem + ".csv"));
            write_csv(field, outputs.back());
        }
    }
    write_manifest(c, "evolve_manifest.json", outputs);
    return outputs;
}

std::vector<fs::path> cmd_contour(const RunConfig& c) {
    const OutputFormat fmt = c.format.value_or(OutputFormat::Svg);
    if (fmt == OutputFormat::Json) throw ConfigError("--format: contour writes svg or csv");
    const std::string prefix = c.from_grid ? "levelset_tau" : "contour_tau";
    const std::string desc = to_json(c).dump();
    std::vector<fs::path> outputs;
    for (double tau : c.taus) {
        const auto traces = contour_traces(c, tau);
        const std::string stem = prefix + tau_tag(tau);
        if (fmt == OutputFormat::Svg) {
            outputs.push_back(in_out(c, stem + ".svg"));
            write_svg(traces, c.grid, outputs.back(), desc);
        } else if (!c.from_grid) {
            outputs.push_back(in_out(c, stem + ".csv"));
            write_csv(traces.front(), outputs.back());
        } else {
            for (std::size_t k = 0; k < traces.size(); ++k) {
                outputs.push_back(in_out(c, stem + "_" + std::to_string(k) + ".csv"));
                write_csv(traces[k], outputs.back());
            }
        }
    }
    write_manifest(c, "contour_manifest.json", outputs);
    return outputs;
}

std::vector<fs::path> cmd_reproduce(const RunConfig& config) {
    const auto preset = figure_preset(config.figure);
    if (!preset) {
        throw ConfigError("reproduce: unknown figure id '" + config.figure + "' (expected fig1..fig6)");
    }
    RunConfig c = config;
    c.profile = preset->profile;
    c.kind = preset->kind;
    const GaussianState st = c.state();
    const std::string desc = to_json(c).dump();

    std::vector<fs::path> outputs;
    json panels = json::array();
    const char* labels = "abcdefghijklmnopqrstuvwxyz";
    for (std::size_t k = 0; k < c.taus.size(); ++k) {
        const double tau = c.taus[k];
        const double t = tau / c.params.omega();
        const std::string stem = preset->id + "_tau" + tau_tag(tau);
        if (preset->surface) {
            const DistributionField field = sample_grid(st, t, c.grid);
            outputs.push_back(in_out(c, stem + ".json"));
            write_json(Snapshot{snapshot_config(c), tau, c.grid, field.values}, outputs.back());
        } else {
            const auto trace = advect_contour(Circle{st.center, c.radius}, st, t, c.points);
            outputs.push_back(in_out(c, stem + ".svg"));
            write_svg({trace}, c.grid, outputs.back(), desc);
        }
        panels.push_back({{"panel", std::string(1, labels[k % 26])},
                          {"tau", tau},
                          {"tau_over_pi", tau / kPi},
                          {"file", outputs.back().filename().string()}});
    }

    json extra;
    extra["figure"] = preset->id;
    extra["caption"] = preset->caption;
    extra["panels"] = panels;
    json notes = json::array();
    if (c.profile.kind == ProfileKind::Anharmonic) {
        notes.push_back("chi = 1 is a repository choice for the anharmonic law omega (1 + 2 chi |alpha|^2), "
                        "not a published parameter");
    }
    notes.push_back("axes are (Re alpha, Im alpha); canonical (x, p) = sqrt(2) (Re alpha, Im alpha) in natural units");
    extra["notes"] = notes;
    write_manifest(c, preset->id + "_manifest.json", outputs, extra);
    outputs.push_back(in_out(c, preset->id + "_manifest.json"));
    return outputs;
}

std::string format_report_table(const std::vector<VerificationReport>& reports) {
    std::string out;
    char line[512];
    std::snprintf(line, sizeof(line), "%-54s %12s %4s %10s  %-6s %s\n", "check", "measured", "",
                  "bound", "status", "note");
    out += line;
    out += std::string(100, '-') + "\n";
    for (const auto& r : reports) {
        const char* status = r.status == CheckStatus::Pass   ? "PASS"
                             : r.status == CheckStatus::Fail ? "FAIL"
                                                             : "N/A";
        std::string note = r.note;
        if (r.order) note += (note.empty() ? "" : " ") + std::string("order=") + number(*r.order, "%.2f");
        std::snprintf(line, sizeof(line), "%-54s %12.3e %4s %10.1e  %-6s %s\n", r.name.c_str(),
                      r.measured, r.bound == Bound::AtMost ? "<=" : ">=", r.tolerance, status,
                      note.c_str());
        out += line;
    }
    return out;
}

VerifyOutcome cmd_verify(const RunConfig& c, std::ostream& out) {
    SuiteOptions options;
    options.seed = c.seed;
    options.sign = c.sign;
    VerifyOutcome outcome;
    outcome.reports = run_full_suite(c.params, options);
    outcome.passed = all_passed(outcome.reports);

    out << format_report_table(outcome.reports);
    out << (outcome.passed ? "all checks passed\n" : "verification FAILED\n");

    json j;
    j["config"] = to_json(c);
    j["passed"] = outcome.passed;
    json list = json::array();
    for (const auto& r : outcome.reports) {
        json e;
        e["name"] = r.name;
        e["measured"] = r.measured;
        e["tolerance"] = r.tolerance;
        e["bound"] = r.bound == Bound::AtMost ? "at_most" : "at_least";
        e["status"] = r.status == CheckStatus::Pass   ? "pass"
                      : r.status == CheckStatus::Fail ? "fail"
                                                      : "not_applicable";
        e["order"] = r.order ? json(*r.order) : json(nullptr);
        e["note"] = r.note;
        list.push_back(e);
    }
    j["reports"] = list;
    outcome.report_file = in_out(c, "verify_report.json");
    write_text_file(outcome.report_file, j.dump(2) + "\n");
    return outcome;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        const RunConfig c = parse_args(args);
        std::vector<fs::path> written;
        if (c.command == "freq") written = cmd_freq(c);
        else if (c.command == "trajectory") written = cmd_trajectory(c);
        else if (c.command == "evolve") written = cmd_evolve(c);
        else if (c.command == "contour") written = cmd_contour(c);
        else if (c.command == "reproduce") written = cmd_reproduce(c);
        else if (c.command == "verify") {
            return cmd_verify(c, out).passed ? kExitOk : kExitVerifyFailed;
        }
        for (const auto& p : written) out << p.generic_string() << "\n";
        return kExitOk;
    } catch (const HelpRequested& h) {
        out << h.text;
        return kExitOk;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "I/O error: " << e.what() << "\n";
        return kExitIo;
    }
}

}  // namespace qwhorl::cli
