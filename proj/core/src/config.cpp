#include "qtl/core/config.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "qtl/core/error.hpp"

namespace qtl {

RunConfig default_config()
{
    RunConfig cfg;
    if (const char* env = std::getenv("QTL_PRECISION")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0') fail(ErrorCode::invalid_input, "QTL_PRECISION must be an integer");
        cfg.precision = static_cast<int>(v);
    }
    return cfg;
}

void validate(const RunConfig& cfg)
{
    if (cfg.precision < 30) fail(ErrorCode::invalid_input, "precision must be at least 30 digits");
    if (cfg.threads < 1) fail(ErrorCode::invalid_input, "threads must be positive");
    if (!(cfg.tolerance > 0)) fail(ErrorCode::invalid_input, "tolerance must be positive");
    if (cfg.format != "json" && cfg.format != "csv") fail(ErrorCode::invalid_input, "format must be json or csv");
}

void parallel_for(long n, int threads, const std::function<void(long)>& fn)
{
    int workers = static_cast<int>(std::min<long>(std::max(1, threads), n));
    if (workers <= 1) {
        for (long i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<long> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (long i; (i = next.fetch_add(1)) < n;) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace qtl
