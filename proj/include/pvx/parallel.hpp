#pragma once

/**
 * @file parallel.hpp
 * @brief Order-preserving parallel map over independent jobs.
 *
 * Worker count comes from set_jobs() when called, otherwise from the PVX_JOBS
 * environment variable, otherwise from the hardware. One job means serial.
 */

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

namespace pvx {

namespace detail {
inline std::atomic<unsigned>& jobs_override() {
    static std::atomic<unsigned> value{0};
    return value;
}
}  // namespace detail

inline void set_jobs(unsigned jobs) { detail::jobs_override() = jobs; }

inline unsigned default_jobs() {
    if (unsigned j = detail::jobs_override(); j > 0) return j;
    if (const char* env = std::getenv("PVX_JOBS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// out[i] = fn(in[i]); the first exception thrown by any job is rethrown.
template <class In, class Fn>
auto parallel_map(const std::vector<In>& in, Fn fn, unsigned jobs = default_jobs()) {
    using Out = std::invoke_result_t<Fn&, const In&>;
    std::vector<Out> out(in.size());
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(in.size()));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < in.size(); ++i) out[i] = fn(in[i]);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < in.size(); i = next++) {
                try {
                    out[i] = fn(in[i]);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return out;
}

}  // namespace pvx
