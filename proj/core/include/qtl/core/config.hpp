#pragma once

#include <functional>
#include <string>

namespace qtl {

struct RunConfig {
    // Requested decimal digits. Values below 30 are rejected; numerics run in binary64.
    int precision = 60;
    int threads = 1;
    double tolerance = 1e-8;
    std::string format = "json";
};

// QTL_PRECISION overrides the default precision when set.
RunConfig default_config();
void validate(const RunConfig& cfg);

// Runs fn(i) for i in [0, n) on up to `threads` workers; fn must not share mutable state.
void parallel_for(long n, int threads, const std::function<void(long)>& fn);

}  // namespace qtl
