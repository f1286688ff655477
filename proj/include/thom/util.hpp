#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace thom::util {

inline std::string trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

template <typename It>
std::string join(It begin, It end, std::string_view sep) {
    std::string out;
    for (It it = begin; it != end; ++it) {
        if (it != begin) out += sep;
        out += *it;
    }
    return out;
}

// Splits file text into (line_number, payload) pairs, dropping blank lines
// and '#' comments.
inline std::vector<std::pair<int, std::string>> logical_lines(std::string_view text) {
    std::vector<std::pair<int, std::string>> out;
    int lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
        ++lineno;
        size_t hash = raw.find('#');
        if (hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::string line = trim(raw);
        if (!line.empty()) out.emplace_back(lineno, line);
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return out;
}

// Thread cap for internal parallelism: THOM_THREADS if set, else the
// hardware count.
inline unsigned thread_limit() {
    if (const char* env = std::getenv("THOM_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Runs independent tasks on up to thread_limit() threads. Results must be
// written by the tasks themselves; exceptions are rethrown in task order so
// the outcome is deterministic.
inline void run_parallel(const std::vector<std::function<void()>>& tasks) {
    unsigned n = static_cast<unsigned>(tasks.size());
    unsigned workers = std::min(thread_limit(), n);
    if (workers <= 1) {
        for (const auto& t : tasks) t();
        return;
    }
    std::vector<std::exception_ptr> errors(n);
    std::atomic<unsigned> next{0};
    auto loop = [&] {
        for (unsigned i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
            try {
                tasks[i]();
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(loop);
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace thom::util
