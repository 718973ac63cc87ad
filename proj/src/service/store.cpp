#include "kilogram/service/store.hpp"

#include <chrono>
#include <ctime>
#include <vector>

namespace kilogram::service {

EventLog::EventLog(std::filesystem::path path) : path_(std::move(path)) {
    if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
    out_.open(path_, std::ios::app | std::ios::binary);
    if (!out_) throw StoreError("cannot open log " + path_.string());
}

void EventLog::append(const nlohmann::json& record) {
    const std::string line = record.dump();
    std::lock_guard lock(mu_);
    out_ << line << '\n';
    out_.flush();
    if (!out_) throw StoreError("write failed on " + path_.string());
}

void EventLog::replay(const std::function<void(const nlohmann::json&)>& visit) const {
    std::ifstream in(path_, std::ios::binary);
    if (!in) return;
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(std::move(line));
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        nlohmann::json record;
        try {
            record = nlohmann::json::parse(lines[i]);
        } catch (const nlohmann::json::parse_error&) {
            if (i + 1 == lines.size()) break;
            throw StoreError(path_.string() + ": corrupt record on line " + std::to_string(i + 1));
        }
        visit(record);
    }
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace kilogram::service
