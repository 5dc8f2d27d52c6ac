// Acceptance report: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cli.hpp"
#include "landau_qsl/bb_bound.hpp"
#include "landau_qsl/constants.hpp"
#include "landau_qsl/eigensolver.hpp"
#include "landau_qsl/qsl.hpp"
#include "oracle.hpp"

using namespace lqsl;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

double rel_err(double value, double expected) { return std::abs(value - expected) / std::max(1.0, std::abs(expected)); }

struct Verdict {
    bool pass;
    std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Verdict()>& check) {
    const auto t0 = Clock::now();
    Verdict v{false, ""};
    try {
        v = check();
    } catch (const std::exception& e) {
        v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) ++failures;
    std::printf("[%s] %2d %s: %s (%.1f s)\n", v.pass ? "PASS" : "FAIL", id, title.c_str(), v.detail.c_str(),
                seconds_since(t0));
    std::fflush(stdout);
}

ScaledProblem branch(double n, SpinBranch s) { return ScaledProblem(n, 0, s, true); }

const SpinLabels labels{};
const SpinBranch up = labels.branch("up");
const SpinBranch down = labels.branch("down");

Verdict landau_equivalence() {
    SolverSettings fresh;
    fresh.use_cache = false;
    const auto t0 = Clock::now();
    double worst = 0.0;
    for (int nu = 0; nu < 5; ++nu) {
        worst = std::max(worst, rel_err(find_alpha_tilde(branch(0.0, SpinBranch::minus), nu, fresh), 2.0 * nu));
        worst = std::max(worst, rel_err(find_alpha_tilde(branch(0.0, SpinBranch::plus), nu, fresh), 2.0 * nu + 2.0));
        worst = std::max(worst,
                         rel_err(find_alpha_tilde(ScaledProblem(0.0, 0, SpinBranch::plus, false), nu, fresh), 2.0 * nu + 1.0));
    }
    const double t = seconds_since(t0);
    return {worst < 1e-6 && t < 5.0, "max rel err " + fmt("%.2e", worst) + ", " + fmt("%.2f", t) + " s"};
}

Verdict uniform_lab() {
    const FieldProfile p(10.0, 0.0);
    const double vu = qsl_velocity(p, up).v_over_c;
    const double vd = qsl_velocity(p, down).v_over_c;
    const bool ok = std::abs(vu / 1.9e-7 - 1.0) < 0.05 && std::abs(vd / 1.9e-7 - 1.0) < 0.05 &&
                    std::abs(vu / vd - 1.0) < 0.005;
    return {ok, "up " + fmt("%.4e", vu) + ", down " + fmt("%.4e", vd) + " (literature 1.9e-07)"};
}

Verdict nonuniform_lab() {
    const FieldProfile p(2e-5, 1.0);
    const double vu = qsl_velocity(p, up).v_over_c;
    const double vd = qsl_velocity(p, down).v_over_c;
    const double v0 = qsl_velocity(FieldProfile(10.0, 0.0), up).v_over_c;
    const bool ok = std::abs(vu / 3.2e-7 - 1.0) < 0.1 && std::abs(vd / 3.0e-7 - 1.0) < 0.1 && vu > v0 && vd > v0;
    return {ok, "up " + fmt("%.4e", vu) + ", down " + fmt("%.4e", vd) + " (literature 3.2e-07, 3.0e-07)"};
}

Verdict sqsl_uniform() {
    const double v = sqsl(0.0, up);
    return {v >= 0.225 && v <= 0.255, "computed " + fmt("%.4f", v) + ", literature 0.2407"};
}

Verdict sqsl_nonuniform() {
    bool ok = true;
    std::string detail;
    for (auto [name, b] : {std::pair{"up", up}, std::pair{"down", down}}) {
        double best = 0.0, best_n = 0.0;
        for (double n : {0.5, 1.0, 2.0, 3.0, 4.0}) {
            const double v = sqsl(n, b);
            if (v > best) best = v, best_n = n;
        }
        const bool in_band = best >= 0.40 && best <= 0.65;
        ok = ok && in_band;
        detail += std::string(detail.empty() ? "" : "; ") + name + " max " + fmt("%.4f", best) + " at n=" +
                  fmt("%g", best_n) + (in_band ? "" : " outside [0.40, 0.65]");
    }
    return {ok, detail};
}

Verdict qsl_versus_n_shape() {
    std::vector<double> grid;
    for (int i = 0; i <= 18; ++i) grid.push_back(-0.5 + 0.25 * i);
    const auto vd = sweep_n(constant_b0(1e17), down, 0, grid);
    const auto vu = sweep_n(constant_b0(1e17), up, 0, grid);
    const auto peak = std::max_element(vd.begin(), vd.end(),
                                       [](const QslPoint& a, const QslPoint& b) { return a.v_over_c < b.v_over_c; });
    const double peak_n = peak->profile.n();
    bool up_monotone = true;
    for (std::size_t i = 1; i < vu.size(); ++i) up_monotone = up_monotone && vu[i].v_over_c >= vu[i - 1].v_over_c;
    const bool ok = peak_n >= 1.5 && peak_n <= 2.5 && up_monotone;
    return {ok, "down peaks at n=" + fmt("%g", peak_n) + " (v/c " + fmt("%.4f", peak->v_over_c) + "), up " +
                    (up_monotone ? "nondecreasing" : "not monotone")};
}

Verdict sweep_consistency() {
    double worst_sat = 0.0, worst_slope = 0.0;
    for (double n : {-0.5, 0.0, 1.0, 2.0}) {
        for (auto b : {SpinBranch::plus, SpinBranch::minus}) {
            const double sat = sqsl(n, b);
            const double v8 = qsl_velocity(from_beta(1e8, n), b).v_over_c;
            worst_sat = std::max(worst_sat, std::abs(v8 / sat - 1.0));
            const double lo = qsl_velocity(from_beta(1e-9, n), b).v_over_c;
            const double hi = qsl_velocity(from_beta(1e-7, n), b).v_over_c;
            const double slope = std::log(hi / lo) / std::log(100.0);
            worst_slope = std::max(worst_slope, std::abs(slope * (n + 2.0) - 1.0));
        }
    }
    return {worst_sat < 0.005 && worst_slope < 0.01,
            "max |v(1e8)/sqsl - 1| " + fmt("%.3e", worst_sat) + ", max slope deviation " + fmt("%.3e", worst_slope)};
}

Verdict critical_fields() {
    const auto q0 = critical_field(0.0, CriticalMode::separation);
    const auto q2 = critical_field(2.0, CriticalMode::intersection);
    const double e0 = q0.q / 4.414e13 - 1.0;
    const double e2 = q2.q / 1.35e14 - 1.0;
    bool bb = true;
    const auto grid = log_grid(critical_window_lo, critical_window_hi, 8);
    for (double n : {-0.5, 0.0, 1.0, 2.0}) {
        for (const auto& row : BBScanner(n).scan(grid)) {
            bb = bb && row.plus.mean_h_erg > row.plus.rhs_erg && row.minus.mean_h_erg > row.minus.rhs_erg;
        }
    }
    const bool ok = std::abs(e0) <= 0.02 && std::abs(e2) <= 0.15 && bb;
    return {ok, "Q(n=0) " + fmt("%.4e", q0.q) + " (" + fmt("%+.2f", 100 * e0) + "% vs 4.414e13), Q(n=2) " +
                    fmt("%.4e", q2.q) + " (" + fmt("%+.2f", 100 * e2) + "% vs 1.35e14), BB inequality " +
                    (bb ? "holds" : "violated")};
}

Verdict degeneracy() {
    auto a = [](double n, SpinBranch s, int nu) { return find_alpha_tilde(branch(n, s), nu); };
    double worst_equal = 0.0, least_split = 1.0;
    for (int nu = 0; nu < 4; ++nu) {
        worst_equal = std::max(worst_equal, std::abs(a(0.0, SpinBranch::plus, nu) - a(0.0, SpinBranch::minus, nu + 1)));
        for (double n : {-0.5, 0.5}) {
            const double x = a(n, SpinBranch::plus, nu), y = a(n, SpinBranch::minus, nu + 1);
            least_split = std::min(least_split, std::abs(x - y) / std::max(x, y));
        }
    }
    auto gaps = [](double n) {
        const auto s = spectrum(n, 0, SpinBranch::plus, 5, false, 1.0);
        std::vector<double> g;
        for (std::size_t i = 1; i < s.size(); ++i) g.push_back(s[i].radial.alpha_tilde - s[i - 1].radial.alpha_tilde);
        return g;
    };
    const auto g0 = gaps(0.0), gp = gaps(0.5), gm = gaps(-0.5);
    bool shape = true;
    for (std::size_t i = 1; i < g0.size(); ++i) {
        shape = shape && std::abs(g0[i] - g0[0]) < 1e-6 && gp[i] > gp[i - 1] && gm[i] < gm[i - 1];
    }
    const bool ok = worst_equal < 1e-6 && least_split > 1e-3 && shape;
    return {ok, "n=0 pair mismatch " + fmt("%.1e", worst_equal) + ", n=+-0.5 smallest split " + fmt("%.2e", least_split) +
                    ", gap sequences " + (shape ? "constant/increasing/decreasing" : "wrong shape")};
}

Verdict oracle_agreement() {
    double worst = 0.0;
    for (double n : {-0.5, 0.5, 1.0, 2.0}) {
        for (auto [problem, ob] : {std::pair{branch(n, SpinBranch::plus), oracle::Branch::plus},
                                   std::pair{branch(n, SpinBranch::minus), oracle::Branch::minus},
                                   std::pair{ScaledProblem(n, 0, SpinBranch::plus, false), oracle::Branch::no_zeeman}}) {
            const double s_max = oracle::fd_domain(n, 0, ob, 400.0);
            const auto fd = oracle::fd_eigenvalues(oracle::FDProblem(n, 0, ob, s_max, n < 0.0 ? 30000 : 12000), 4);
            for (int nu = 0; nu < 4; ++nu) worst = std::max(worst, rel_err(find_alpha_tilde(problem, nu), fd.values[nu]));
        }
    }
    return {worst < 1e-4, "max rel deviation " + fmt("%.2e", worst)};
}

Verdict determinism(Clock::time_point start) {
    auto render = [](const std::vector<std::string>& args) {
        const auto config = cli::parse_config(args);
        return cli::render(cli::execute(config), config.format);
    };
    bool identical = true;
    for (const std::vector<std::string>& base :
         {std::vector<std::string>{"sweep-n", "--n-range", "-0.5:4:0.25"},
          std::vector<std::string>{"sweep-b0", "--n", "1", "--b0-range", "1e10:1e18:4", "--format", "json"},
          std::vector<std::string>{"bbound", "--n", "2"}}) {
        auto one = base, four = base;
        one.insert(one.end(), {"--threads", "1"});
        four.insert(four.end(), {"--threads", "4"});
        const auto a = render(one);
        identical = identical && a == render(one) && a == render(four);
    }
    const double total = seconds_since(start);
    return {identical && total < 300.0,
            std::string(identical ? "outputs byte-identical" : "outputs differ") + ", suite so far " + fmt("%.1f", total) + " s"};
}

} // namespace

int main() {
    const auto start = Clock::now();
    std::printf("spin labels: up = %s branch, down = %s branch\n", branch_name(up).c_str(), branch_name(down).c_str());
    report(1, "analytic Landau equivalence", landau_equivalence);
    report(2, "uniform laboratory case", uniform_lab);
    report(3, "non-uniform laboratory case", nonuniform_lab);
    report(4, "SQSL band, uniform field", sqsl_uniform);
    report(5, "SQSL band, non-uniform field", sqsl_nonuniform);
    report(6, "QSL versus n at B0 = 1e17", qsl_versus_n_shape);
    report(7, "sweep and closed-form consistency", sweep_consistency);
    report(8, "critical fields and BB inequality", critical_fields);
    report(9, "degeneracy structure", degeneracy);
    report(10, "finite-difference cross-validation", oracle_agreement);
    report(11, "determinism and runtime", [&] { return determinism(start); });
    std::printf("%d of 11 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
