#include "landau_qsl/bb_bound.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace lqsl {

std::string regime_name(Regime r) {
    switch (r) {
    case Regime::I: return "I";
    case Regime::II: return "II";
    case Regime::III: return "III";
    default: return "-";
    }
}

std::string mode_name(CriticalMode m) {
    return m == CriticalMode::separation ? "separation" : "intersection";
}

namespace {

BranchBB branch_values(const LevelPair& pair, const FieldProfile& profile) {
    const QslPoint q = evaluate(pair, profile);
    const double mc2 = constants.electron_mass_energy_erg;
    const double gap = epsilon_gap(std::max(0.0, pair.lower.alpha_tilde) * pair.problem.alpha_scale(q.beta),
                                   std::max(0.0, pair.upper.alpha_tilde) * pair.problem.alpha_scale(q.beta));
    BranchBB b;
    b.mean_h_erg = 0.5 * (q.epsilon_low + q.epsilon_high) * mc2;
    // hbar ln2 / (pi tau) with tau = pi hbar / gap.
    b.rhs_erg = std::numbers::ln2 * gap * mc2 / (std::numbers::pi * std::numbers::pi);
    return b;
}

double log_slope(double x0, double y0, double x1, double y1) {
    return std::log(y1 / y0) / std::log(x1 / x0);
}

} // namespace

BBScanner::BBScanner(double n, int nu, const SolverSettings& settings)
    : n_(n),
      plus_(solve_pair(ScaledProblem(n, 0, SpinBranch::plus, true), nu, settings)),
      minus_(solve_pair(ScaledProblem(n, 0, SpinBranch::minus, true), nu, settings)) {}

BBScanRow BBScanner::row(double b0) const {
    const FieldProfile profile(b0, n_);
    return BBScanRow{b0, n_, branch_values(plus_, profile), branch_values(minus_, profile)};
}

std::vector<BBScanRow> BBScanner::scan(std::span<const double> b0_grid) const {
    std::vector<BBScanRow> out;
    out.reserve(b0_grid.size());
    for (double b0 : b0_grid) out.push_back(row(b0));
    return out;
}

BBScanRow bb_row(const FieldProfile& profile, int nu, const SolverSettings& settings) {
    return BBScanner(profile.n(), nu, settings).row(profile.b0());
}

void classify_regions(std::vector<BBScanRow>& scan) {
    const std::size_t n = scan.size();
    if (n < 2) throw std::invalid_argument("classify_regions: need at least two rows");
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t a = i == 0 ? 0 : i - 1;
        const std::size_t b = i + 1 == n ? n - 1 : i + 1;
        for (BranchBB BBScanRow::*member : {&BBScanRow::plus, &BBScanRow::minus}) {
            const BranchBB& lo = scan[a].*member;
            const BranchBB& hi = scan[b].*member;
            const double slope_h = log_slope(scan[a].b0, lo.mean_h_erg, scan[b].b0, hi.mean_h_erg);
            const double slope_r = log_slope(scan[a].b0, lo.rhs_erg, scan[b].b0, hi.rhs_erg);
            Regime r = Regime::II;
            if (slope_h < 0.05) {
                r = Regime::I;
            } else if (std::abs(slope_h - slope_r) <= 0.05 * std::max(std::abs(slope_h), std::abs(slope_r))) {
                r = Regime::III;
            }
            (scan[i].*member).region = r;
        }
    }
}

CriticalFieldResult critical_field(const BBScanner& scanner, CriticalMode mode, double threshold) {
    std::function<double(double)> criterion;
    if (mode == CriticalMode::separation) {
        if (!(threshold > 0.0 && threshold < 1.0)) throw std::invalid_argument("threshold must lie in (0, 1)");
        criterion = [&](double b0) {
            const BBScanRow r = scanner.row(b0);
            const double gap = std::abs(r.plus.rhs_erg - r.minus.rhs_erg);
            return gap / std::max(r.plus.rhs_erg, r.minus.rhs_erg) - threshold;
        };
    } else {
        criterion = [&](double b0) {
            const BBScanRow r = scanner.row(b0);
            return r.plus.rhs_erg - r.minus.rhs_erg;
        };
    }

    const auto grid = log_grid(critical_window_lo, critical_window_hi, 8);
    double prev_b0 = grid.front();
    double prev_val = criterion(prev_b0);
    if (mode == CriticalMode::separation && prev_val >= 0.0) {
        throw NoSeparation("branches already separated at the window start");
    }
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double val = criterion(grid[i]);
        const bool event = mode == CriticalMode::separation ? val >= 0.0
                                                            : (val > 0.0) != (prev_val > 0.0) && val != 0.0;
        if (event) {
            double lo = std::log(prev_b0);
            double hi = std::log(grid[i]);
            const bool lo_positive = prev_val > 0.0;
            for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double v = criterion(std::exp(mid));
                const bool past = mode == CriticalMode::separation ? v >= 0.0 : (v > 0.0) != lo_positive;
                (past ? hi : lo) = mid;
            }
            const double q = std::exp(0.5 * (lo + hi));
            return {q, mode, mode == CriticalMode::separation ? threshold : 0.0};
        }
        prev_b0 = grid[i];
        prev_val = val;
    }
    if (mode == CriticalMode::separation) {
        throw NoSeparation("spin branches never separate by the threshold in [1e10, 1e18]");
    }
    throw NoCrossing("spin-branch BB curves do not cross in [1e10, 1e18]");
}

CriticalFieldResult critical_field(double n, CriticalMode mode, double threshold, int nu,
                                   const SolverSettings& settings) {
    return critical_field(BBScanner(n, nu, settings), mode, threshold);
}

} // namespace lqsl
