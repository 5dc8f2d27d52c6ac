#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "landau_qsl/bb_bound.hpp"
#include "landau_qsl/constants.hpp"
#include "landau_qsl/qsl.hpp"
#include "landau_qsl/quadrature.hpp"

namespace lqsl::cli {

namespace {

constexpr const char* version = "0.1.0";

double parse_number(const std::string& key, const std::string& text) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw UsageError(key + ": '" + text + "' is not a number");
    }
}

std::vector<std::string> split_colon(const std::string& key, const std::string& text, std::size_t parts) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ':');) out.push_back(item);
    if (out.size() != parts) {
        throw UsageError(key + ": expected " + std::to_string(parts) + " colon-separated fields, got '" + text + "'");
    }
    return out;
}

LogRange parse_log_range(const std::string& text) {
    const auto p = split_colon("b0-range", text, 3);
    LogRange r{parse_number("b0-range", p[0]), parse_number("b0-range", p[1]), 0};
    const double per = parse_number("b0-range", p[2]);
    if (per < 1.0 || per != std::floor(per)) throw UsageError("b0-range: points per decade must be an integer >= 1");
    r.per_decade = static_cast<int>(per);
    if (!(r.start > 0.0) || !(r.stop >= r.start)) throw UsageError("b0-range: need 0 < start <= stop");
    return r;
}

LinearRange parse_linear_range(const std::string& text) {
    const auto p = split_colon("n-range", text, 3);
    LinearRange r{parse_number("n-range", p[0]), parse_number("n-range", p[1]), parse_number("n-range", p[2])};
    if (!(r.step > 0.0) || r.stop < r.start) throw UsageError("n-range: need start <= stop and step > 0");
    if (!(r.start > -1.0)) throw UsageError("n-range: n must exceed -1");
    return r;
}

template <typename Enum>
Enum pick(const std::string& key, const std::string& value, std::initializer_list<std::pair<const char*, Enum>> options) {
    for (const auto& [name, e] : options) {
        if (value == name) return e;
    }
    throw UsageError(key + ": unknown value '" + value + "'");
}

std::vector<double> linear_grid(const LinearRange& r) {
    std::vector<double> out;
    const auto count = static_cast<long>(std::floor((r.stop - r.start) / r.step + 1e-9));
    for (long i = 0; i <= count; ++i) out.push_back(r.start + r.step * i);
    return out;
}

std::vector<SpinBranch> selected_branches(const RunConfig& c, const SpinLabels& labels) {
    switch (c.spin) {
    case SpinSelect::up: return {labels.branch("up")};
    case SpinSelect::down: return {labels.branch("down")};
    default: return {labels.branch("up"), labels.branch("down")};
    }
}

const std::vector<std::string> qsl_columns{"n",        "b0_G_pm_n",   "spin",     "nu",   "beta",
                                           "tau_qsl_s", "rho_disp_pm", "v_over_c", "bound"};

std::vector<Cell> qsl_row(const QslPoint& p, const SpinLabels& labels) {
    return {p.profile.n(), p.profile.b0(), labels.label(p.spin), static_cast<long long>(p.nu), p.beta,
            p.tau_qsl_s,   p.rho_disp_pm,  p.v_over_c,            bound_name(p.bound)};
}

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

nlohmann::ordered_json make_meta(const RunConfig& c, const std::string& command) {
    nlohmann::ordered_json meta;
    meta["version"] = version;
    meta["command"] = command;
    meta["constants"] = {
        {"electron_mass_energy_erg", constants.electron_mass_energy_erg},
        {"electron_mass_energy_kev", constants.electron_mass_energy_kev},
        {"reduced_compton_wavelength_pm", constants.reduced_compton_wavelength_pm},
        {"critical_field_gauss", constants.critical_field_gauss},
        {"light_speed_pm_s", constants.light_speed_pm_s},
        {"hbar_erg_s", constants.hbar_erg_s},
    };
    meta["solver"] = {
        {"steps", c.solver.steps},
        {"s0", c.solver.s0},
        {"margin", c.solver.margin},
        {"min_tail_action", c.solver.min_tail_action},
        {"alpha_ceiling", c.solver.alpha_ceiling},
        {"rel_tol", c.solver.rel_tol},
    };
    meta["spin_labels"] = c.swap_spin_labels ? "swapped" : "default";
    return meta;
}

const char* command_name(Command c) {
    switch (c) {
    case Command::spectrum: return "spectrum";
    case Command::qsl: return "qsl";
    case Command::sweep_b0: return "sweep-b0";
    case Command::sweep_n: return "sweep-n";
    case Command::sqsl: return "sqsl";
    case Command::bbound: return "bbound";
    default: return "lab-example";
    }
}

RunResult run_spectrum(const RunConfig& c, const SpinLabels& labels) {
    const FieldProfile profile = c.b0 ? FieldProfile(*c.b0, c.n) : from_beta(1.0, c.n);
    const double beta = to_beta(profile);
    RunResult r;
    r.table.columns = {"n", "m", "spin", "zeeman", "nu", "alpha_tilde", "alpha", "epsilon"};
    auto emit = [&](const std::vector<EigenState>& states, const std::string& spin, const std::string& zeeman) {
        for (const auto& s : states) {
            r.table.rows.push_back({c.n, static_cast<long long>(c.m), spin, zeeman, static_cast<long long>(s.qn.nu),
                                    s.radial.alpha_tilde, s.alpha, s.epsilon});
        }
    };
    if (c.zeeman != ZeemanMode::off) {
        for (SpinBranch b : selected_branches(c, labels)) {
            emit(spectrum(c.n, c.m, b, c.levels, true, beta, c.solver), labels.label(b), "on");
        }
    }
    if (c.zeeman != ZeemanMode::on) {
        emit(spectrum(c.n, c.m, SpinBranch::plus, c.levels, false, beta, c.solver), "none", "off");
    }
    r.summary = "spectrum: n=" + fmt("%g", c.n) + " levels=" + std::to_string(c.levels) + " beta=" +
                fmt("%.6g", beta) + " rows=" + std::to_string(r.table.rows.size());
    return r;
}

RunResult run_qsl_points(const RunConfig& c, const SpinLabels& labels) {
    RunResult r;
    r.table.columns = qsl_columns;
    std::vector<double> b0_grid;
    if (c.command == Command::qsl) {
        if (!c.b0) throw UsageError("qsl: --b0 is required");
        b0_grid = {*c.b0};
    } else {
        if (!c.b0_range) throw UsageError("sweep-b0: --b0-range is required");
        b0_grid = log_grid(c.b0_range->start, c.b0_range->stop, c.b0_range->per_decade);
    }
    std::string summary;
    for (SpinBranch b : selected_branches(c, labels)) {
        const auto points = sweep_b0(c.n, b, c.nu, b0_grid, c.m, c.solver);
        for (const auto& p : points) r.table.rows.push_back(qsl_row(p, labels));
        summary += " " + labels.label(b) + " v/c=" + fmt("%.6g", points.back().v_over_c);
    }
    r.summary = std::string(command_name(c.command)) + ": n=" + fmt("%g", c.n) + " points=" +
                std::to_string(r.table.rows.size()) + " last" + summary;
    return r;
}

RunResult run_sweep_n(const RunConfig& c, const SpinLabels& labels) {
    const LinearRange range = c.n_range.value_or(LinearRange{-0.5, 4.0, 0.25});
    const auto grid = linear_grid(range);
    const double b0 = c.b0.value_or(1e17);
    RunResult r;
    r.table.columns = qsl_columns;
    std::string summary;
    for (SpinBranch b : selected_branches(c, labels)) {
        const auto points = sweep_n(constant_b0(b0), b, c.nu, grid, c.m, c.solver, c.threads);
        const auto best = std::max_element(points.begin(), points.end(),
                                           [](const auto& x, const auto& y) { return x.v_over_c < y.v_over_c; });
        for (const auto& p : points) r.table.rows.push_back(qsl_row(p, labels));
        summary += " " + labels.label(b) + " max v/c=" + fmt("%.6g", best->v_over_c) + " at n=" +
                   fmt("%g", best->profile.n());
    }
    r.summary = "sweep-n: b0=" + fmt("%g", b0) + summary;
    return r;
}

RunResult run_sqsl(const RunConfig& c, const SpinLabels& labels) {
    RunResult r;
    r.table.columns = {"n", "spin", "nu", "sqsl_v_over_c"};
    std::string summary = "sqsl: n=" + fmt("%g", c.n);
    for (SpinBranch b : selected_branches(c, labels)) {
        const double v = sqsl(c.n, b, c.nu, c.m, c.solver);
        r.table.rows.push_back({c.n, labels.label(b), static_cast<long long>(c.nu), v});
        summary += " " + labels.label(b) + "=" + fmt("%.6f", v);
    }
    if (c.n == 0.0 && c.nu == 0 && c.m == 0) summary += " (literature uniform-field spin-up value 0.2407)";
    r.summary = summary;
    return r;
}

RunResult run_bbound(const RunConfig& c, const SpinLabels& labels) {
    const LogRange range = c.b0_range.value_or(LogRange{1e10, 1e18, 4});
    const auto grid = log_grid(range.start, range.stop, range.per_decade);
    const BBScanner scanner(c.n, c.nu, c.solver);
    auto scan = scanner.scan(grid);
    classify_regions(scan);
    RunResult r;
    r.table.columns = {"n", "b0_G_pm_n", "spin", "meanH_erg", "rhs_erg", "region"};
    for (const auto& row : scan) {
        for (SpinBranch b : selected_branches(c, labels)) {
            const BranchBB& v = row.branch(b);
            r.table.rows.push_back({c.n, row.b0, labels.label(b), v.mean_h_erg, v.rhs_erg, regime_name(v.region)});
        }
    }

    std::optional<CriticalFieldResult> q;
    std::string failure;
    auto attempt = [&](CriticalMode mode) {
        try {
            q = critical_field(scanner, mode, c.threshold);
        } catch (const NoCrossing& e) {
            failure = e.what();
        } catch (const NoSeparation& e) {
            failure = e.what();
        }
    };
    switch (c.critical) {
    case CriticalSelect::separation: attempt(CriticalMode::separation); break;
    case CriticalSelect::intersection: attempt(CriticalMode::intersection); break;
    default:
        attempt(CriticalMode::intersection);
        if (!q) attempt(CriticalMode::separation);
    }
    if (!q && c.critical != CriticalSelect::automatic) throw NoCrossing(failure);
    r.summary = "bbound: n=" + fmt("%g", c.n) + " rows=" + std::to_string(r.table.rows.size()) +
                (q ? " critical field Q=" + fmt("%.6e", q->q) + " G pm^-n (" + mode_name(q->mode) + ")"
                   : " no critical field: " + failure);
    if (q) {
        r.meta["critical_field"] = {{"q", q->q}, {"mode", mode_name(q->mode)}, {"threshold", q->threshold_used}};
    }
    return r;
}

RunResult run_lab_example(const RunConfig& c, const SpinLabels& labels) {
    struct Case {
        double n;
        double b0;
    };
    RunResult r;
    r.table.columns = qsl_columns;
    std::string summary = "lab-example:";
    for (const Case& k : {Case{1.0, 2e-5}, Case{0.0, 10.0}}) {
        summary += " [n=" + fmt("%g", k.n) + " b0=" + fmt("%g", k.b0) + "]";
        for (SpinBranch b : {labels.branch("up"), labels.branch("down")}) {
            const QslPoint p = qsl_velocity(FieldProfile(k.b0, k.n), b, 0, 0, c.solver);
            r.table.rows.push_back(qsl_row(p, labels));
            summary += " " + labels.label(b) + "=" + fmt("%.3e", p.v_over_c);
        }
    }
    summary += " (literature: n=1 up 3.2e-07 down 3.0e-07, n=0 1.9e-07)";
    r.summary = summary;
    return r;
}

void print_cell(std::ostream& os, const Cell& cell) {
    if (const double* d = std::get_if<double>(&cell)) {
        os << fmt("%.16e", *d);
    } else if (const long long* i = std::get_if<long long>(&cell)) {
        os << *i;
    } else {
        os << std::get<std::string>(cell);
    }
}

} // namespace

RunConfig parse_config(const std::vector<std::string>& args) {
    RunConfig c;
    CLI::App app{"Relativistic Landau spectra, quantum speed limits and BB-bound scans in power-law fields",
                 "landau_qsl"};
    std::string command;
    std::string spin = "both";
    std::string zeeman = "on";
    std::string format = "csv";
    std::string critical = "auto";
    std::string labels = "default";
    std::string b0_range;
    std::string n_range;
    double b0 = 0.0;

    app.add_option("command", command, "spectrum | qsl | sweep-b0 | sweep-n | sqsl | bbound | lab-example")
        ->required();
    app.add_option("--n", c.n, "field exponent, n > -1");
    app.add_option("--m", c.m, "angular momentum quantum number");
    app.add_option("--spin", spin, "up | down | both");
    app.add_option("--nu", c.nu, "lower level of the superposition pair");
    app.add_option("--levels", c.levels, "number of levels for spectrum");
    auto* b0_opt = app.add_option("--b0", b0, "field amplitude in G pm^-n");
    app.add_option("--b0-range", b0_range, "start:stop:points-per-decade");
    app.add_option("--n-range", n_range, "start:stop:step");
    app.add_option("--zeeman", zeeman, "on | off | both-and-off");
    app.add_option("--output", c.output, "output file ('-' for stdout)");
    app.add_option("--format", format, "csv | json");
    app.add_option("--steps", c.solver.steps, "RK4 steps per solve");
    app.add_option("--s0", c.solver.s0, "integration start point");
    app.add_option("--margin", c.solver.margin, "outer potential margin");
    app.add_option("--threshold", c.threshold, "relative separation threshold for bbound");
    app.add_option("--critical", critical, "auto | separation | intersection");
    app.add_option("--threads", c.threads, "worker threads for sweeps");
    app.add_option("--spin-labels", labels, "default | swapped");
    app.set_config("--config", "", "file of key = value lines");
    app.allow_config_extras(CLI::config_extras_mode::error);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    c.command = pick<Command>("command", command,
                              {{"spectrum", Command::spectrum},
                               {"qsl", Command::qsl},
                               {"sweep-b0", Command::sweep_b0},
                               {"sweep-n", Command::sweep_n},
                               {"sqsl", Command::sqsl},
                               {"bbound", Command::bbound},
                               {"lab-example", Command::lab_example}});
    c.spin = pick<SpinSelect>("spin", spin, {{"up", SpinSelect::up}, {"down", SpinSelect::down}, {"both", SpinSelect::both}});
    c.zeeman = pick<ZeemanMode>("zeeman", zeeman,
                                {{"on", ZeemanMode::on}, {"off", ZeemanMode::off}, {"both-and-off", ZeemanMode::both_and_off}});
    c.format = pick<Format>("format", format, {{"csv", Format::csv}, {"json", Format::json}});
    c.critical = pick<CriticalSelect>("critical", critical,
                                      {{"auto", CriticalSelect::automatic},
                                       {"separation", CriticalSelect::separation},
                                       {"intersection", CriticalSelect::intersection}});
    c.swap_spin_labels = pick<bool>("spin-labels", labels, {{"default", false}, {"swapped", true}});

    if (!(c.n > -1.0)) throw UsageError("n must exceed -1");
    if (c.nu < 0) throw UsageError("nu must be non-negative");
    if (c.levels < 1) throw UsageError("levels must be at least 1");
    if (b0_opt->count() > 0) {
        if (!(b0 > 0.0)) throw UsageError("b0 must be positive");
        c.b0 = b0;
    }
    if (!b0_range.empty()) c.b0_range = parse_log_range(b0_range);
    if (!n_range.empty()) c.n_range = parse_linear_range(n_range);
    if (!(c.threshold > 0.0 && c.threshold < 1.0)) throw UsageError("threshold must lie in (0, 1)");
    if (c.threads < 1) throw UsageError("threads must be at least 1");
    if (c.solver.steps < 8) throw UsageError("steps must be at least 8");
    if (c.solver.margin <= 0.0) throw UsageError("margin must be positive");
    if (c.solver.s0 < 0.0) throw UsageError("s0 must be non-negative");
    return c;
}

RunResult execute(const RunConfig& c) {
    const SpinLabels labels{c.swap_spin_labels};
    RunResult r;
    switch (c.command) {
    case Command::spectrum: r = run_spectrum(c, labels); break;
    case Command::qsl:
    case Command::sweep_b0: r = run_qsl_points(c, labels); break;
    case Command::sweep_n: r = run_sweep_n(c, labels); break;
    case Command::sqsl: r = run_sqsl(c, labels); break;
    case Command::bbound: r = run_bbound(c, labels); break;
    case Command::lab_example: r = run_lab_example(c, labels); break;
    }
    auto meta = make_meta(c, command_name(c.command));
    for (auto& [k, v] : r.meta.items()) meta[k] = v;
    r.meta = std::move(meta);
    return r;
}

std::string render_csv(const Table& table) {
    std::ostringstream os;
    for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << table.columns[i];
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            print_cell(os, row[i]);
        }
        os << '\n';
    }
    return os.str();
}

std::string render_json(const RunResult& result) {
    nlohmann::ordered_json doc;
    doc["meta"] = result.meta;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : result.table.rows) {
        nlohmann::ordered_json rec;
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::visit([&](const auto& v) { rec[result.table.columns[i]] = v; }, row[i]);
        }
        doc["rows"].push_back(std::move(rec));
    }
    return doc.dump(2) + "\n";
}

std::string render(const RunResult& result, Format format) {
    return format == Format::csv ? render_csv(result.table) : render_json(result);
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    RunResult result;
    try {
        result = execute(config);
    } catch (const UsageError&) {
        throw;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception& e) {
        err << "solver error: " << e.what() << '\n';
        return 1;
    }
    const std::string text = render(result, config.format);
    if (config.output.empty() || config.output == "-") {
        out << text;
        err << result.summary << '\n';
    } else {
        std::ofstream file(config.output, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "cannot write " << config.output << '\n';
            return 1;
        }
        file << text;
        out << result.summary << " -> " << config.output << '\n';
    }
    return 0;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run(parse_config(args), out, err);
    } catch (const CLI::CallForHelp&) {
        out << "usage: landau_qsl <command> [--key value ...] [--config FILE]\n"
               "commands: spectrum qsl sweep-b0 sweep-n sqsl bbound lab-example\n";
        return 0;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace lqsl::cli
