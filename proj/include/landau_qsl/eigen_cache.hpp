#ifndef LANDAU_QSL_EIGEN_CACHE_HPP
#define LANDAU_QSL_EIGEN_CACHE_HPP

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <tuple>

namespace lqsl {

struct EigenKey {
    double n;
    int m;
    int spin;
    bool zeeman;
    int nu;
    int steps;
    double s0;
    double margin;
    double tail_action;

    auto tie() const { return std::tie(n, m, spin, zeeman, nu, steps, s0, margin, tail_action); }
    friend bool operator<(const EigenKey& a, const EigenKey& b) { return a.tie() < b.tie(); }
};

/// Scaled eigenvalues keyed by problem and resolution. They do not depend on
/// the field strength, so one entry serves every b0. With a directory set, the
/// cache persists as line-delimited JSON records in eigenvalues.jsonl; a
/// missing or unreadable file is treated as empty.
class EigenCache {
public:
    EigenCache() = default;
    explicit EigenCache(std::filesystem::path directory);

    std::optional<double> find(const EigenKey& key) const;
    void store(const EigenKey& key, double alpha_tilde);
    void clear();
    std::size_t size() const;

    const std::optional<std::filesystem::path>& file() const { return file_; }

    /// Process-wide instance; persistent iff QSL_CACHE_DIR is set on first use.
    static EigenCache& global();

private:
    void load();
    void flush_locked() const;

    mutable std::mutex mutex_;
    std::map<EigenKey, double> entries_;
    std::optional<std::filesystem::path> file_;
};

} // namespace lqsl

#endif
