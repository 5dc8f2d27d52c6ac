#ifndef LANDAU_QSL_CLI_HPP
#define LANDAU_QSL_CLI_HPP

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "landau_qsl/eigensolver.hpp"

namespace lqsl::cli {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Command { spectrum, qsl, sweep_b0, sweep_n, sqsl, bbound, lab_example };
enum class SpinSelect { up, down, both };
enum class ZeemanMode { on, off, both_and_off };
enum class Format { csv, json };
enum class CriticalSelect { automatic, separation, intersection };

struct LogRange {
    double start;
    double stop;
    int per_decade;
};

struct LinearRange {
    double start;
    double stop;
    double step;
};

struct RunConfig {
    Command command = Command::spectrum;
    double n = 0.0;
    int m = 0;
    SpinSelect spin = SpinSelect::both;
    int nu = 0;
    int levels = 5;
    std::optional<double> b0;
    std::optional<LogRange> b0_range;
    std::optional<LinearRange> n_range;
    ZeemanMode zeeman = ZeemanMode::on;
    std::string output;  // empty or "-" writes to stdout
    Format format = Format::csv;
    SolverSettings solver;
    double threshold = 0.31;
    CriticalSelect critical = CriticalSelect::automatic;
    unsigned threads = 1;
    bool swap_spin_labels = false;
};

/// Parses `command --key value ...`. A `--config FILE` of `key = value` lines
/// supplies defaults that explicit flags override. Throws UsageError naming
/// the offending key.
RunConfig parse_config(const std::vector<std::string>& args);

using Cell = std::variant<double, long long, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

struct RunResult {
    Table table;
    std::string summary;
    nlohmann::ordered_json meta;
};

/// Computes the table for a validated config. Solver failures propagate.
RunResult execute(const RunConfig& config);

/// Header plus one line per row; doubles as %.16e (17 significant digits).
std::string render_csv(const Table& table);
/// {"meta": ..., "rows": [flat records]}.
std::string render_json(const RunResult& result);
std::string render(const RunResult& result, Format format);

/// Executes and writes the output. Returns 0 on success, 1 on solver error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full driver: parse, run, map errors to exit statuses 0/1/2.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lqsl::cli

#endif
