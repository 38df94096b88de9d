#include "robin/threads.hpp"

#include <atomic>
#include <cstdlib>

#include <omp.h>

namespace robin {

namespace {
std::atomic<int> g_override{0};
}

int effective_threads()
{
    const int o = g_override.load(std::memory_order_relaxed);
    if (o > 0)
        return o;
    if (const char* env = std::getenv("ROBIN_GAPS_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 4096)
            return int(v);
    }
    return omp_get_max_threads();
}

void set_thread_override(int n)
{
    g_override.store(n > 0 ? n : 0, std::memory_order_relaxed);
}

} // namespace robin
