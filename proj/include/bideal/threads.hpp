#pragma once

#include <cstdlib>
#include <string>
#include <thread>

namespace bideal {

// Worker count resolution: an explicit request wins, then the BIDEAL_THREADS
// environment variable, then the hardware concurrency.
inline int resolve_thread_count(int requested = 0) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("BIDEAL_THREADS")) {
        int parsed = std::atoi(env);
        if (parsed > 0) return parsed;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace bideal
