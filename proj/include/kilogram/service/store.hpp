#pragma once

#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace kilogram::service {

class StoreError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Append-only JSON-lines log. Records are never rewritten; state is rebuilt
// by replaying the file from the start.
class EventLog {
public:
    explicit EventLog(std::filesystem::path path);

    const std::filesystem::path& path() const { return path_; }

    // Writes one record and flushes before returning.
    void append(const nlohmann::json& record);

    // Calls `visit` for every record in file order. A torn final line (crash
    // during a write) is ignored; corruption anywhere else throws.
    void replay(const std::function<void(const nlohmann::json&)>& visit) const;

private:
    std::filesystem::path path_;
    std::ofstream out_;
    std::mutex mu_;
};

std::string utc_timestamp();

}  // namespace kilogram::service
