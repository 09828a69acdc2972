#ifndef SYMINEQ_SCAN_HPP
#define SYMINEQ_SCAN_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>

namespace symineq {

// Append-only store of result lines keyed by the full task parameters.
// A re-run with an identical key replays the stored line byte-for-byte.
class ScanCache {
  public:
    ScanCache() = default; // in-memory only
    explicit ScanCache(std::string path); // loads if the file exists

    std::optional<std::string> lookup(const std::string& key) const;
    void store(const std::string& key, const std::string& line);
    void save() const; // no-op for in-memory caches
    std::size_t size() const { return entries_.size(); }
    long hits() const { return hits_; }

    static constexpr int kVersion = 1;

  private:
    std::string path_;
    std::map<std::string, std::string> entries_;
    mutable long hits_ = 0;
};

// Runs fn(0..count-1) on up to `threads` workers; any order, every index once.
void parallel_for(long count, int threads, const std::function<void(long)>& fn);

} // namespace symineq

#endif
