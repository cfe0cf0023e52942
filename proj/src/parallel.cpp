#include "macq/parallel.hpp"

#include <cstdlib>
#include <string>

namespace macq {

namespace {
std::atomic<int> configured{0};
}

int default_thread_count() {
    if (const char* env = std::getenv("MACQ_THREADS")) {
        try {
            int n = std::stoi(env);
            if (n > 0) return n;
        } catch (const std::exception&) {
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void set_thread_count(int n) { configured = n > 0 ? n : 0; }

int thread_count() {
    int n = configured;
    return n > 0 ? n : default_thread_count();
}

} // namespace macq
