#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace boxhelly {

// Worker cap for partitionable loops. BOXHELLY_THREADS overrides the
// hardware default; results never depend on the worker count.
inline unsigned worker_count() {
    if (const char* env = std::getenv("BOXHELLY_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(std::min(v, 256L));
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace boxhelly
