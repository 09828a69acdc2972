#include "symineq/scan.hpp"

#include <atomic>
#include <fstream>
#include <thread>
#include <vector>

#include <json.hpp>

#include "symineq/rational.hpp"

namespace symineq {

ScanCache::ScanCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in)
        return;
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception&) {
        throw domain_error("cache file is not valid JSON: " + path_);
    }
    if (!doc.contains("version") || doc["version"].get<int>() != kVersion)
        throw domain_error("cache file has an unsupported version: " + path_);
    for (const auto& [key, value] : doc["entries"].items())
        entries_[key] = value.get<std::string>();
}

std::optional<std::string> ScanCache::lookup(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end())
        return std::nullopt;
    ++hits_;
    return it->second;
}

void ScanCache::store(const std::string& key, const std::string& line) {
    entries_[key] = line;
}

void ScanCache::save() const {
    if (path_.empty())
        return;
    nlohmann::json doc;
    doc["version"] = kVersion;
    doc["entries"] = nlohmann::json::object();
    for (const auto& [key, value] : entries_)
        doc["entries"][key] = value;
    std::ofstream out(path_);
    if (!out)
        throw domain_error("cannot write cache file: " + path_);
    out << doc.dump() << "\n";
}

void parallel_for(long count, int threads, const std::function<void(long)>& fn) {
    if (threads < 1)
        threads = 1;
    if (threads == 1 || count <= 1) {
        for (long i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    int workers = std::min<long>(threads, count);
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            while (true) {
                long i = next.fetch_add(1);
                if (i >= count)
                    return;
                fn(i);
            }
        });
    for (auto& th : pool)
        th.join();
}

} // namespace symineq
