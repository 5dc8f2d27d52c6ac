#include "landau_qsl/eigen_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace lqsl {

namespace {

nlohmann::ordered_json to_record(const EigenKey& k, double alpha_tilde) {
    nlohmann::ordered_json j;
    j["n"] = k.n;
    j["m"] = k.m;
    j["spin"] = k.spin;
    j["zeeman"] = k.zeeman;
    j["nu"] = k.nu;
    j["steps"] = k.steps;
    j["s0"] = k.s0;
    j["margin"] = k.margin;
    j["tail_action"] = k.tail_action;
    j["alpha_tilde"] = alpha_tilde;
    return j;
}

} // namespace

EigenCache::EigenCache(std::filesystem::path directory) {
    file_ = std::move(directory) / "eigenvalues.jsonl";
    load();
}

void EigenCache::load() {
    std::ifstream in(*file_);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            const auto j = nlohmann::json::parse(line);
            EigenKey k{j.at("n").get<double>(),    j.at("m").get<int>(),     j.at("spin").get<int>(),
                       j.at("zeeman").get<bool>(), j.at("nu").get<int>(),    j.at("steps").get<int>(),
                       j.at("s0").get<double>(),   j.at("margin").get<double>(),
                       j.at("tail_action").get<double>()};
            entries_[k] = j.at("alpha_tilde").get<double>();
        } catch (const nlohmann::json::exception&) {
            // skip malformed records
        }
    }
}

std::optional<double> EigenCache::find(const EigenKey& key) const {
    std::lock_guard lock(mutex_);
    if (auto it = entries_.find(key); it != entries_.end()) return it->second;
    return std::nullopt;
}

void EigenCache::store(const EigenKey& key, double alpha_tilde) {
    std::lock_guard lock(mutex_);
    entries_.insert_or_assign(key, alpha_tilde);
    if (file_) flush_locked();
}

void EigenCache::clear() {
    std::lock_guard lock(mutex_);
    entries_.clear();
    if (file_) flush_locked();
}

std::size_t EigenCache::size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
}

// Whole-file rewrite through a temporary and a rename, so readers never see a
// partial record.
void EigenCache::flush_locked() const {
    std::error_code ec;
    std::filesystem::create_directories(file_->parent_path(), ec);
    std::ostringstream tmp_name;
    tmp_name << file_->string() << ".tmp";
    const std::filesystem::path tmp = tmp_name.str();
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) return;
        for (const auto& [k, v] : entries_) out << to_record(k, v).dump() << '\n';
    }
    std::filesystem::rename(tmp, *file_, ec);
}

EigenCache& EigenCache::global() {
    static EigenCache cache = []() -> EigenCache {
        const char* dir = std::getenv("QSL_CACHE_DIR");
        if (dir && *dir) return EigenCache(dir);
        return EigenCache();
    }();
    return cache;
}

} // namespace lqsl
