#ifndef LANDAU_QSL_BB_BOUND_HPP
#define LANDAU_QSL_BB_BOUND_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "landau_qsl/qsl.hpp"

namespace lqsl {

class NoSeparation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NoCrossing : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// I: rest-mass dominated, II: transition, III: relativistic.
enum class Regime { unclassified, I, II, III };
std::string regime_name(Regime r);

struct BranchBB {
    double mean_h_erg = 0.0;  // (E_nu + E_nu+1)/2, rest mass included
    double rhs_erg = 0.0;     // hbar ln2 / (pi tau_QSL) with one bit
    Regime region = Regime::unclassified;
};

struct BBScanRow {
    double b0 = 0.0;  // G pm^-n
    double n = 0.0;
    BranchBB plus;
    BranchBB minus;

    const BranchBB& branch(SpinBranch b) const { return b == SpinBranch::plus ? plus : minus; }
};

/// Both spin branches of one exponent, solved once and evaluated at any b0.
class BBScanner {
public:
    BBScanner(double n, int nu = 0, const SolverSettings& settings = {});

    BBScanRow row(double b0) const;
    std::vector<BBScanRow> scan(std::span<const double> b0_grid) const;
    double n() const { return n_; }

private:
    double n_;
    LevelPair plus_;
    LevelPair minus_;
};

BBScanRow bb_row(const FieldProfile& profile, int nu = 0, const SolverSettings& settings = {});

/// Labels each branch from local log-log slopes along a log-spaced scan:
/// I where d ln<H>/d ln b0 < 0.05, III where the slopes of <H> and of the
/// right-hand side agree within 5%, II otherwise.
void classify_regions(std::vector<BBScanRow>& scan);

enum class CriticalMode { separation, intersection };
std::string mode_name(CriticalMode m);

struct CriticalFieldResult {
    double q = 0.0;  // G pm^-n
    CriticalMode mode = CriticalMode::separation;
    double threshold_used = 0.0;
};

inline constexpr double default_separation_threshold = 0.31;
inline constexpr double critical_window_lo = 1e10;
inline constexpr double critical_window_hi = 1e18;

/// separation: smallest b0 where |rhs+ - rhs-| / max(rhs+, rhs-) >= threshold.
/// intersection: b0 where rhs+ - rhs- changes sign.
/// Both search [1e10, 1e18] G pm^-n and refine by bisection in log b0.
CriticalFieldResult critical_field(double n, CriticalMode mode, double threshold = default_separation_threshold,
                                   int nu = 0, const SolverSettings& settings = {});
CriticalFieldResult critical_field(const BBScanner& scanner, CriticalMode mode,
                                   double threshold = default_separation_threshold);

} // namespace lqsl

#endif
